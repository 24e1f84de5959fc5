#include <random>

#include "doctest.h"
#include "uqaw/golden.hpp"
#include "uqaw/hopf.hpp"

using namespace uqaw;

namespace {

UElement random_element(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> fe(0, 2);
    std::uniform_int_distribution<int> k(-2, 2);
    std::uniform_int_distribution<int> c(-3, 3);
    std::uniform_int_distribution<int> nterms(1, 3);
    UElement out;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i)
        out.add_term(UMonomial{fe(rng), k(rng), fe(rng)}, Scalar(c(rng)));
    return out;
}

}  // namespace

TEST_CASE("coproduct of the generators") {
    TElement de = comultiply(UElement::E());
    CHECK(de == t_tensor({UElement::E(), UElement::one()}) +
                    t_tensor({UElement::K(), UElement::E()}));
    TElement df = comultiply(UElement::F());
    CHECK(df == t_tensor({UElement::F(), UElement::Kinv()}) +
                    t_tensor({UElement::one(), UElement::F()}));
    CHECK(comultiply(UElement::K()) == t_tensor({UElement::K(), UElement::K()}));
    CHECK(comultiply(UElement::Kinv()) ==
          t_tensor({UElement::Kinv(), UElement::Kinv()}));
}

TEST_CASE("coproduct tables for the Casimir element") {
    CHECK(comultiply(u_casimir()) == golden::delta_lambda());
    CHECK(n_fold_comultiply(2, u_casimir()) == golden::delta2_lambda());

    // row-for-row component match
    auto computed = t_components(comultiply(u_casimir()));
    auto expected = golden::table_components("delta_lambda");
    CHECK(computed.size() == expected.size());
    for (const auto& [d, comp] : expected) {
        REQUIRE(computed.count(d) == 1);
        CHECK(computed.at(d) == comp);
    }
    auto computed2 = t_components(n_fold_comultiply(2, u_casimir()));
    auto expected2 = golden::table_components("delta2_lambda");
    CHECK(computed2.size() == expected2.size());
    for (const auto& [d, comp] : expected2) {
        REQUIRE(computed2.count(d) == 1);
        CHECK(computed2.at(d) == comp);
    }
}

TEST_CASE("coproduct is an algebra homomorphism") {
    std::mt19937_64 rng(321);
    for (int trial = 0; trial < 20; ++trial) {
        UElement x = random_element(rng);
        UElement y = random_element(rng);
        CHECK(comultiply(u_multiply(x, y)) ==
              t_multiply(comultiply(x), comultiply(y)));
    }
}

TEST_CASE("counit") {
    CHECK(counit(UElement::E()).is_zero());
    CHECK(counit(UElement::F()).is_zero());
    CHECK(counit(UElement::K()).is_one());
    CHECK(counit(UElement::Kinv()).is_one());
    // counit of the Casimir element is q + q^-1
    Scalar q = Scalar::q();
    CHECK(counit(u_casimir()) == q + q.inverse());
    // algebra homomorphism
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 20; ++trial) {
        UElement x = random_element(rng);
        UElement y = random_element(rng);
        CHECK(counit(u_multiply(x, y)) == counit(x) * counit(y));
    }
}

TEST_CASE("antipode") {
    // S(E) = -K^-1 E
    CHECK(antipode(UElement::E()) ==
          UElement::monomial(UMonomial{0, -1, 1}, Scalar(-1)));
    // S(F) = -FK
    CHECK(antipode(UElement::F()) ==
          UElement::monomial(UMonomial{1, 1, 0}, Scalar(-1)));
    CHECK(antipode(UElement::K()) == UElement::Kinv());
    CHECK(antipode(UElement::Kinv()) == UElement::K());

    // S(EF) = S(F)S(E) = FE
    UElement ef = u_multiply(UElement::E(), UElement::F());
    CHECK(antipode(ef) == u_multiply(UElement::F(), UElement::E()));

    // S(xy) = S(y)S(x), and counit is S-invariant
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 20; ++trial) {
        UElement x = random_element(rng);
        UElement y = random_element(rng);
        CHECK(antipode(u_multiply(x, y)) == u_multiply(antipode(y), antipode(x)));
        CHECK(counit(antipode(x)) == counit(x));
    }
}

TEST_CASE("n-fold coproduct") {
    // Delta_0 is the identity (arity 1)
    UElement lam = u_casimir();
    TElement d0 = n_fold_comultiply(0, lam);
    CHECK(d0.arity() == 1);
    CHECK(d0 == t_inject(lam, 0, 1));

    // Delta_1 = Delta
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 10; ++trial) {
        UElement x = random_element(rng);
        CHECK(n_fold_comultiply(1, x) == comultiply(x));
    }

    // Delta_2(K) = K (x) K (x) K
    CHECK(n_fold_comultiply(2, UElement::K()) ==
          t_tensor({UElement::K(), UElement::K(), UElement::K()}));

    // slot independence for n = 2, 3 on random elements
    for (int trial = 0; trial < 6; ++trial) {
        UElement x = random_element(rng);
        for (int n = 2; n <= 3; ++n) {
            TElement prev = n_fold_comultiply(n - 1, x);
            TElement reference = comultiply_slot(prev, prev.arity() - 1);
            for (int slot = 0; slot < prev.arity(); ++slot)
                CHECK(comultiply_slot(prev, slot) == reference);
        }
    }
}

TEST_CASE("hopf axiom report") {
    CheckReport report = hopf_axiom_check();
    CHECK(report.all_pass());
    CHECK(report.items.size() == 20);  // 4 checks x 5 elements
    for (const auto& item : report.items) CHECK(item.residue_terms == 0);
}
