#include "doctest.h"
#include "uqaw/errors.hpp"
#include "uqaw/modules.hpp"

using namespace uqaw;

TEST_CASE("finite modules") {
    Scalar q = Scalar::q();
    // n = 0: E = F = 0, K = (eps)
    UqModule m0 = finite_uq_module(0, 1);
    CHECK(m0.E.mat.is_zero());
    CHECK(m0.F.mat.is_zero());
    CHECK(m0.K.mat.at(0, 0) == Scalar(1));
    UqModule m0m = finite_uq_module(0, -1);
    CHECK(m0m.K.mat.at(0, 0) == Scalar(-1));

    // n = 2, eps = +1: K = diag(q^2, 1, q^-2)
    UqModule m2 = finite_uq_module(2, 1);
    CHECK(m2.K.mat.at(0, 0) == q.pow(2));
    CHECK(m2.K.mat.at(1, 1) == Scalar(1));
    CHECK(m2.K.mat.at(2, 2) == q.pow(-2));

    // Casimir acts as eps (q^{n+1} + q^{-n-1})
    for (long n = 0; n <= 5; ++n)
        for (int eps : {1, -1}) {
            UqModule m = finite_uq_module(n, eps);
            Matrix cas = module_matrix(m, u_casimir());
            auto s = cas.as_scalar_multiple_of_identity();
            REQUIRE(s.has_value());
            CHECK(*s == Scalar(eps) * (q.pow(n + 1) + q.pow(-n - 1)));
            CHECK(module_relation_check(m).all_pass());
        }

    // eps = -1 example from the Casimir scalar table
    UqModule m2m = finite_uq_module(2, -1);
    auto s = module_matrix(m2m, u_casimir()).as_scalar_multiple_of_identity();
    REQUIRE(s.has_value());
    CHECK(*s == -(q.pow(3) + q.pow(-3)));
}

TEST_CASE("truncated Verma modules") {
    ParamSet::global().declare("lambda");
    Scalar lam = Scalar::variable("lambda");
    Scalar q = Scalar::q();

    UqModule m = truncated_verma(lam, 4);
    // K m_0 = lambda m_0
    CHECK(m.K.mat.at(0, 0) == lam);
    // Casimir scalar lambda q + lambda^-1 q^-1
    auto s = module_matrix(m, u_casimir()).as_scalar_multiple_of_identity();
    REQUIRE(s.has_value());
    CHECK(*s == lam * q + lam.inverse() * q.inverse());
    // (EF - FE) m_0 = [lambda; 0] m_0
    Matrix comm = m.E.mat * m.F.mat - m.F.mat * m.E.mat;
    CHECK(comm.at(0, 0) == param_bracket(lam, 0));

    // relations pass on the sound window for every tested size
    for (long N = 2; N <= 8; ++N)
        CHECK(module_relation_check(truncated_verma(lam, N)).all_pass());

    // numeric highest weight works too
    CHECK(module_relation_check(truncated_verma(q.pow(3) * Scalar(2), 5)).all_pass());
}

TEST_CASE("irreducibility predicates") {
    ParamSet::global().declare("lambda");
    Scalar q = Scalar::q();
    Scalar lam = Scalar::variable("lambda");

    CHECK(!verma_irreducible(q.pow(3)));       // lambda = q^3 reducible
    CHECK(!verma_irreducible(-q.pow(2)));      // lambda = -q^2 reducible
    CHECK(verma_irreducible(lam));             // symbolic is generic
    CHECK(verma_irreducible(q.pow(-1)));       // negative powers are not in the set
    CHECK(verma_irreducible(Scalar(2) * q));   // coefficient 2 is not +-1

    for (long n = 0; n <= 6; ++n) CHECK(vn_irreducible(n));

    // V_d(a,b,c) with d = 2 and abc = q: reducible (hits q^{d+1-2i} at i = 1)
    ParamSet::global().declare("b_p");
    ParamSet::global().declare("c_p");
    Scalar b = Scalar::variable("b_p"), c = Scalar::variable("c_p");
    Scalar a = q / (b * c);
    CHECK(!vd_irreducible(2, a, b, c));
    // generic symbolic parameters are irreducible
    ParamSet::global().declare("a_p");
    CHECK(vd_irreducible(2, Scalar::variable("a_p"), b, c));
}

TEST_CASE("scalar family") {
    ParamSet::global().declare("a_p");
    ParamSet::global().declare("b_p");
    ParamSet::global().declare("c_p");
    Scalar a = Scalar::variable("a_p");
    Scalar b = Scalar::variable("b_p");
    Scalar c = Scalar::variable("c_p");
    Scalar q = Scalar::q();

    SUBCASE("generic nu") {
        ParamSet::global().declare("nu_p");
        Scalar nu = Scalar::variable("nu_p");
        AWScalarFamily fam = aw_scalar_family(a, b, c, nu);
        CHECK(fam.theta(0) == a * nu.inverse() + a.inverse() * nu);
        CHECK(fam.theta_star(2) ==
              b * q.pow(4) * nu.inverse() + b.inverse() * q.pow(-4) * nu);
        CHECK(fam.omega_eps() ==
              (a + a.inverse()) * (b + b.inverse()) +
                  (c + c.inverse()) * (q * nu + q.inverse() * nu.inverse()));
        CHECK(fam.phi(0).is_zero());
    }

    SUBCASE("nu = q^d kills phi_{d+1}") {
        for (long d = 0; d <= 4; ++d) {
            AWScalarFamily fam = aw_scalar_family(a, b, c, q.pow(d));
            CHECK(fam.phi(d + 1).is_zero());
            for (long i = 1; i <= d; ++i) CHECK(!fam.phi(i).is_zero());
        }
    }
}

TEST_CASE("V_d module construction") {
    ParamSet::global().declare("a_p");
    ParamSet::global().declare("b_p");
    ParamSet::global().declare("c_p");
    Scalar a = Scalar::variable("a_p");
    Scalar b = Scalar::variable("b_p");
    Scalar c = Scalar::variable("c_p");
    Scalar q = Scalar::q();

    SUBCASE("d = 0 boundary") {
        AWModule m = aw_vd_module(0, a, b, c);
        AWScalarFamily fam = m.family;
        CHECK(m.A.mat.at(0, 0) == fam.theta(0));
        CHECK(m.B.mat.at(0, 0) == fam.theta_star(0));
        // phi_1 = 0 at d = 0, so C v_0 = (omega_eps - theta_0 theta*_0)/(q+q^-1) v_0
        CHECK(m.C.mat.at(0, 0) ==
              (fam.omega_eps() - fam.theta(0) * fam.theta_star(0)) /
                  (q + q.inverse()));
    }

    SUBCASE("relations hold as matrices for symbolic parameters") {
        for (long d = 0; d <= 2; ++d)
            CHECK(aw_module_relation_check(aw_vd_module(d, a, b, c)).all_pass());
    }

    SUBCASE("Casimir element acts as a scalar") {
        for (long d = 0; d <= 3; ++d) {
            AWModule m = aw_vd_module(d, a, b, c);
            Matrix omega = aw_module_matrix(m, aw_casimir());
            CHECK(omega.as_scalar_multiple_of_identity().has_value());
        }
    }

    SUBCASE("universal-property identities at v_0") {
        AWModule m = aw_vd_module(2, a, b, c);
        AWScalarFamily fam = m.family;
        std::vector<Scalar> v0(m.dim());
        v0[0] = Scalar(1);
        // B v_0 = theta*_0 v_0
        auto bv = m.B.mat.apply(v0);
        CHECK(bv[0] == fam.theta_star(0));
        CHECK(bv[1].is_zero());
        CHECK(bv[2].is_zero());
        // (B - theta*_1)(A - theta_0) v_0 = phi_1 v_0
        Matrix op = (m.B.mat - Matrix::identity(3).scaled(fam.theta_star(1))) *
                    (m.A.mat - Matrix::identity(3).scaled(fam.theta(0)));
        auto w = op.apply(v0);
        CHECK(w[0] == fam.phi(1));
        CHECK(w[1].is_zero());
        CHECK(w[2].is_zero());
    }

    SUBCASE("eigenvalue lists factor the characteristic action") {
        AWModule m = aw_vd_module(2, a, b, c);
        Matrix prodA = Matrix::identity(3);
        Matrix prodB = Matrix::identity(3);
        for (long i = 0; i <= 2; ++i) {
            prodA = prodA * (m.A.mat - Matrix::identity(3).scaled(m.family.theta(i)));
            prodB = prodB *
                    (m.B.mat - Matrix::identity(3).scaled(m.family.theta_star(i)));
        }
        CHECK(prodA.is_zero());
        CHECK(prodB.is_zero());
    }
}

TEST_CASE("leonard checks") {
    Scalar q = Scalar::q();

    SUBCASE("d = 1 with a = b = c = q") {
        AWModule m = aw_vd_module(1, q, q, q);
        // criterion set is {q^0} = {1}; a^2 = q^2 != 1 generically
        LeonardPairResult r = leonard_check_pair(m, LeonardPair::AB);
        CHECK(r.module_irreducible);
        CHECK(r.criterion);
        CHECK(r.direct);
        CHECK(r.agree);
    }

    SUBCASE("generic symbolic parameters give a Leonard triple") {
        ParamSet::global().declare("a_p");
        ParamSet::global().declare("b_p");
        ParamSet::global().declare("c_p");
        AWModule m = aw_vd_module(2, Scalar::variable("a_p"), Scalar::variable("b_p"),
                                  Scalar::variable("c_p"));
        LeonardTripleResult r = leonard_check_triple(m);
        CHECK(r.module_irreducible);
        CHECK(r.direct);
        CHECK(r.criterion);
        CHECK(r.agree);
        CHECK(r.ab.agree);
        CHECK(r.bc.agree);
        CHECK(r.ca.agree);
    }

    SUBCASE("d = 2 with a = q fails the pair criterion") {
        ParamSet::global().declare("b_p");
        ParamSet::global().declare("c_p");
        AWModule m = aw_vd_module(2, q, Scalar::variable("b_p"),
                                  Scalar::variable("c_p"));
        // a^2 = q^2 lies in {q^{2(d-i)}} at i = 1
        LeonardPairResult r = leonard_check_pair(m, LeonardPair::AB);
        CHECK(r.module_irreducible);
        CHECK(!r.criterion);
        CHECK(!r.direct);
        CHECK(r.agree);
    }
}
