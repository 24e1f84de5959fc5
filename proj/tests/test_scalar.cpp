#include <random>

#include "doctest.h"
#include "uqaw/errors.hpp"
#include "uqaw/scalar.hpp"

using namespace uqaw;

namespace {

Scalar qv() { return Scalar::q(); }

// Random small rational function for the field-axiom properties: a ratio of
// sparse Laurent-ish polynomials in q and lambda.
Scalar random_scalar(std::mt19937_64& rng, bool nonzero = false) {
    ParamSet::global().declare("lambda");
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> expq(0, 3);
    std::uniform_int_distribution<int> terms(1, 3);
    auto poly = [&]() {
        Scalar s;
        int n = terms(rng);
        for (int i = 0; i < n; ++i) {
            Scalar t = Scalar(coeff(rng));
            t = t * qv().pow(expq(rng));
            t = t * Scalar::variable("lambda").pow(expq(rng) / 2);
            s = s + t;
        }
        return s;
    };
    Scalar num = poly();
    Scalar den = poly();
    while (den.is_zero()) den = poly();
    Scalar r = num / den;
    if (nonzero && r.is_zero()) return random_scalar(rng, true);
    return r;
}

}  // namespace

TEST_CASE("scalar_normalize canonicalizes fractions") {
    Scalar q = qv();
    // (q^2 - 1, q - 1) -> (q + 1, 1)
    Scalar a = (q * q - Scalar(1)) / (q - Scalar(1));
    CHECK(a == q + Scalar(1));
    CHECK(a.den().is_one());

    // (0, q^3) -> (0, 1)
    Scalar z = Scalar(0) / q.pow(3);
    CHECK(z.is_zero());
    CHECK(z.den().is_one());
    CHECK(z.str() == "0");

    // sign convention: (-(q-1)) / (-(q+1)) -> (q-1)/(q+1)
    Scalar s = (-(q - Scalar(1))) / (-(q + Scalar(1)));
    CHECK(s.num().str() == "q-1");
    CHECK(s.den().str() == "q+1");
    CHECK(s.den().leading().coeff > 0);
}

TEST_CASE("scalar_normalize is representation-unique") {
    std::mt19937_64 rng(20240811);
    for (int i = 0; i < 60; ++i) {
        Scalar a = random_scalar(rng);
        Scalar b = random_scalar(rng);
        // a - b == 0 iff a == b, and normalization is idempotent.
        CHECK(((a - b).is_zero()) == (a == b));
        Scalar renorm = Scalar::fraction(a.num(), a.den());
        CHECK(renorm == a);
        // multiplying num and den by a common junk factor normalizes back
        Scalar c = random_scalar(rng, true);
        Scalar blown = Scalar::fraction(a.num() * c.num(), a.den() * c.num());
        CHECK(blown == a);
    }
}

TEST_CASE("division by zero is rejected") {
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), division_by_zero);
    CHECK_THROWS_AS(Scalar(0).inverse(), division_by_zero);
    CHECK_THROWS_AS(Scalar::fraction(Polynomial::constant(1), Polynomial()),
                    division_by_zero);
}

TEST_CASE("q_bracket basics") {
    CHECK(q_bracket(0).is_zero());
    CHECK(q_bracket(1).is_one());
    // [2] = q + q^-1
    Scalar q = qv();
    CHECK(q_bracket(2) == q + q.inverse());
    CHECK(q_bracket(2).str() == "(q^2+1)/(q)");
    CHECK(q_bracket(2).pretty() == "q + q^-1");
    // [-n] = -[n]
    for (long n = 0; n <= 5; ++n) CHECK(q_bracket(-n) == -q_bracket(n));
}

TEST_CASE("q_bracket identity [n+1][n-1] = [n]^2 - 1") {
    for (long n = -6; n <= 6; ++n)
        CHECK(q_bracket(n + 1) * q_bracket(n - 1) == q_bracket(n) * q_bracket(n) - Scalar(1));
}

TEST_CASE("q_binomial") {
    Scalar q = qv();
    for (long n = 0; n <= 5; ++n) CHECK(q_binomial(n, 0).is_one());
    CHECK(q_binomial(2, 1) == q_bracket(2));
    // (3, 2) -> q^2 + 1 + q^-2, which equals [3]
    CHECK(q_binomial(3, 2) == q.pow(2) + Scalar(1) + q.pow(-2));
    CHECK(q_binomial(3, 2) == q_bracket(3));
    // i > n vanishes
    CHECK(q_binomial(2, 3).is_zero());
    CHECK_THROWS_AS(q_binomial(-1, 0), invalid_argument_error);
    CHECK_THROWS_AS(q_binomial(1, -2), invalid_argument_error);
    // symmetry
    for (long n = 0; n <= 8; ++n)
        for (long i = 0; i <= n; ++i) CHECK(q_binomial(n, i) == q_binomial(n, n - i));
}

TEST_CASE("param_bracket") {
    ParamSet::global().declare("lambda");
    Scalar q = qv();
    Scalar lam = Scalar::variable("lambda");
    CHECK(param_bracket("lambda", 0) == (lam - lam.inverse()) / (q - q.inverse()));
    CHECK(param_bracket("lambda", 1) ==
          (lam * q - lam.inverse() * q.inverse()) / (q - q.inverse()));
    CHECK_THROWS_AS(param_bracket("undeclared_sym", 1), unknown_parameter);

    // lambda := q^d turns [lambda; n] into [d + n]
    for (long d = -3; d <= 3; ++d)
        for (long n = -3; n <= 3; ++n) {
            Scalar specialized = param_bracket(q.pow(d), n);
            CHECK(specialized == q_bracket(d + n));
        }
}

TEST_CASE("specialize") {
    ParamSet::global().declare("lambda");
    // [2] at q = 2 gives 2 + 1/2 = 5/2
    Scalar v = specialize(q_bracket(2), {{"q", Scalar::rational(2, 1)}});
    CHECK(v == Scalar::rational(5, 2));

    // 1/(q - q^-1) at q = 1 hits a pole
    Scalar s = Scalar(1) / (qv() - qv().inverse());
    CHECK_THROWS_AS(specialize(s, {{"q", Scalar(1)}}), pole_at_specialization);

    // [lambda;1] at lambda = 3, q = 2: (6 - 1/6)/(3/2) = 35/9
    Scalar pb = param_bracket("lambda", 1);
    Scalar w = specialize(pb, {{"lambda", Scalar(3)}, {"q", Scalar(2)}});
    CHECK(w == Scalar::rational(35, 9));

    // partial evaluation leaves the other parameter formal
    Scalar part = specialize(pb, {{"lambda", Scalar(3)}});
    Scalar q = qv();
    CHECK(part == (Scalar(3) * q - Scalar::rational(1, 3) * q.inverse()) / (q - q.inverse()));
}

TEST_CASE("field axioms on random scalars") {
    std::mt19937_64 rng(987654321);
    for (int i = 0; i < 40; ++i) {
        Scalar a = random_scalar(rng);
        Scalar b = random_scalar(rng);
        Scalar c = random_scalar(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a + Scalar(0) == a);
        CHECK(a * Scalar(1) == a);
        Scalar nz = random_scalar(rng, true);
        CHECK(nz * nz.inverse() == Scalar(1));
        CHECK(a - a == Scalar(0));
    }
}

TEST_CASE("canonical text round-trips") {
    ParamSet::global().declare("lambda");
    std::mt19937_64 rng(5150);
    for (int i = 0; i < 40; ++i) {
        Scalar a = random_scalar(rng);
        CHECK(Scalar::parse(a.str()) == a);
        CHECK(Scalar::parse(a.pretty()) == a);
    }
    CHECK(Scalar::parse("(q^2+1)/(q)").str() == "(q^2+1)/(q)");
    CHECK(Scalar::parse("1/(q - q^-1)") == Scalar(1) / (qv() - qv().inverse()));
    CHECK(Scalar::parse("q^-2") == qv().pow(-2));
    CHECK(Scalar::parse("-3*q^2*lambda-1") ==
          Scalar(-3) * qv().pow(2) * Scalar::variable("lambda") - Scalar(1));
}

TEST_CASE("unicode parameter spellings are accepted") {
    ParamSet::global().declare("lambda");
    CHECK(Scalar::parse("λ") == Scalar::variable("lambda"));
    CHECK(Scalar::parse("λ*q") == Scalar::variable("lambda") * qv());
}

TEST_CASE("polynomial gcd stress") {
    ParamSet::global().declare("lambda");
    std::mt19937_64 rng(424242);
    for (int i = 0; i < 30; ++i) {
        Scalar a = random_scalar(rng, true);
        Scalar b = random_scalar(rng, true);
        Scalar g = random_scalar(rng, true);
        Polynomial pa = a.num() * g.num();
        Polynomial pb = b.num() * g.num();
        Polynomial gg = Polynomial::gcd(pa, pb);
        // the common factor divides the gcd, and the gcd divides both
        Polynomial dummy;
        CHECK(Polynomial::try_divexact(gg, Polynomial::gcd(g.num(), g.num()), dummy) ==
              (void(0), true));
        CHECK(Polynomial::try_divexact(pa, gg, dummy));
        CHECK(Polynomial::try_divexact(pb, gg, dummy));
        Polynomial q1;
        REQUIRE(Polynomial::try_divexact(gg, Polynomial::gcd(gg, g.num()), q1));
    }
}

TEST_CASE("gcd divides and contains the planted factor") {
    ParamSet::global().declare("lambda");
    std::mt19937_64 rng(777);
    for (int i = 0; i < 30; ++i) {
        Scalar ag = random_scalar(rng, true);
        Scalar bg = random_scalar(rng, true);
        Scalar gs = random_scalar(rng, true);
        Polynomial g = gs.num();
        Polynomial pa = ag.num() * g;
        Polynomial pb = bg.num() * g;
        Polynomial got = Polynomial::gcd(pa, pb);
        Polynomial dummy;
        REQUIRE(Polynomial::try_divexact(pa, got, dummy));
        REQUIRE(Polynomial::try_divexact(pb, got, dummy));
        // g divides gcd(ag*g, bg*g)
        REQUIRE(Polynomial::try_divexact(got, Polynomial::gcd(got, g), dummy));
        Polynomial gg = Polynomial::gcd(got, g);
        Polynomial q2;
        REQUIRE(Polynomial::try_divexact(g, gg, q2));
        CHECK(q2.is_constant());
    }
}
