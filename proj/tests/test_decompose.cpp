#include "doctest.h"
#include "uqaw/decompose.hpp"
#include "uqaw/errors.hpp"

using namespace uqaw;

TEST_CASE("decompose V(1) (x) V(1) (x) V(1)") {
    DecompositionReport r = decompose_finite(1, 1, 1);
    CHECK(r.pass());
    CHECK(r.total_dim == 8);
    CHECK(r.expected_dim == 8);
    CHECK(r.blocks.size() == 6);

    Scalar q = Scalar::q();
    for (const auto& blk : r.blocks) {
        if (blk.l == 1) {
            // d = 1 blocks are standard modules with a = b = c = q^-2
            CHECK(blk.d == 1);
            CHECK(blk.a == q.pow(-2));
            CHECK(blk.b == q.pow(-2));
            CHECK(blk.c == q.pow(-2));
        } else {
            CHECK(blk.l == 0);
            CHECK(blk.d == 0);
        }
        CHECK(blk.pass());
        CHECK(blk.leonard_direct);
        CHECK(blk.leonard_criterion);
    }
}

TEST_CASE("decompose dimension bookkeeping on asymmetric shapes") {
    for (auto [m, n, p] : {std::array<long, 3>{2, 1, 0}, std::array<long, 3>{0, 0, 3},
                           std::array<long, 3>{2, 2, 1}}) {
        DecompositionReport r = decompose_finite(m, n, p);
        CHECK(r.pass());
        CHECK(r.total_dim == (m + 1) * (n + 1) * (p + 1));
    }
}

TEST_CASE("verma decomposition with symbolic weights") {
    CHECK_THROWS_AS(decompose_verma(2, 1, 5), window_too_small);

    DecompositionReport r = decompose_verma(1, 0, 5);
    CHECK(r.pass());
    REQUIRE(r.blocks.size() == 2);

    ParamSet::global().declare("kappa");
    ParamSet::global().declare("lambda");
    ParamSet::global().declare("mu");
    Scalar kap = Scalar::variable("kappa");
    Scalar lam = Scalar::variable("lambda");
    Scalar mu = Scalar::variable("mu");
    Scalar q = Scalar::q();

    // d = 0, k = 0 block: one-dimensional, A eigenvalue kappa lambda q + inverse
    const auto& b0 = r.blocks[0];
    CHECK(b0.d == 0);
    REQUIRE(b0.a_eigenvalues.size() == 1);
    CHECK(b0.a_eigenvalues[0] ==
          kap * lam * q + kap.inverse() * lam.inverse() * q.inverse());

    // d = 1 block is the standard module with a = (kappa lambda)^-1 etc.
    const auto& b1 = r.blocks[1];
    CHECK(b1.d == 1);
    CHECK(b1.a == (kap * lam).inverse());
    CHECK(b1.b == (lam * mu).inverse());
    CHECK(b1.c == (mu * kap).inverse());
}

TEST_CASE("verma triple criterion under specialization") {
    // (iv)(e): mu kappa not in {+-q^n | 0 <= n <= 2d-2}; at d = 1 the set is
    // {+-1}, so mu kappa = q passes and mu kappa = 1 fails.
    ParamSet::global().declare("kappa");
    ParamSet::global().declare("mu");
    Scalar kap = Scalar::variable("kappa");
    Scalar mu = Scalar::variable("mu");
    Scalar q = Scalar::q();

    CHECK(!is_plus_minus_q_power(mu * kap, 0, 0));   // symbolic: generic
    CHECK(!is_plus_minus_q_power(q, 0, 0));          // q = q^1 not in {±q^0}
    CHECK(is_plus_minus_q_power(Scalar(1), 0, 0));   // 1 = q^0 fails the criterion
    CHECK(is_plus_minus_q_power(-q.pow(2), 0, 2));
    CHECK(!is_plus_minus_q_power(q.pow(3), 0, 2));
}
