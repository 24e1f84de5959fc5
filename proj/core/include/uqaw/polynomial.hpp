#ifndef UQAW_POLYNOMIAL_HPP
#define UQAW_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <boost/container/small_vector.hpp>
#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "uqaw/params.hpp"

namespace uqaw {

/// Power product of declared parameters with nonnegative exponents.
/// Trailing zero exponents are trimmed so equal monomials compare equal
/// regardless of how many parameters were declared when they were built.
class Monomial {
public:
    Monomial() = default;
    static Monomial variable(int index, int32_t exp = 1);

    int32_t exponent(int index) const;
    int width() const { return static_cast<int>(exps_.size()); }
    int32_t degree() const { return degree_; }
    bool is_one() const { return exps_.empty(); }

    Monomial operator*(const Monomial& other) const;
    bool divides(const Monomial& other) const;
    /// Componentwise quotient; requires divides(other) for this to be exact.
    Monomial divide_into(const Monomial& numerator) const;
    static Monomial gcd(const Monomial& a, const Monomial& b);
    static Monomial lcm(const Monomial& a, const Monomial& b);

    /// Graded lex: total degree first, then exponents with q (index 0)
    /// most significant.
    std::strong_ordering operator<=>(const Monomial& other) const;
    bool operator==(const Monomial& other) const = default;

    size_t hash() const;

private:
    void trim();
    boost::container::small_vector<int32_t, 4> exps_;
    int32_t degree_ = 0;
};

struct Term {
    Monomial mono;
    mpz_class coeff;
};

/// Sparse multivariate polynomial with arbitrary-precision integer
/// coefficients.  Terms are stored leading-first in graded-lex order and
/// shared immutably, so copies are cheap and values are safe to use from
/// several threads at once.
class Polynomial {
public:
    Polynomial();  // zero
    static Polynomial constant(long value);
    static Polynomial constant(const mpz_class& value);
    static Polynomial variable(int index, int32_t exp = 1);
    static Polynomial monomial(Monomial m, mpz_class coeff);
    /// Sorts, merges equal monomials, drops zeros.
    static Polynomial from_terms(std::vector<Term> terms);

    bool is_zero() const { return terms().empty(); }
    bool is_one() const;
    bool is_constant() const;
    bool is_monomial() const { return terms().size() <= 1; }

    const std::vector<Term>& terms() const { return *terms_; }
    const Term& leading() const;
    int32_t total_degree() const;
    int32_t degree_in(int var) const;
    int32_t min_exponent(int var) const;
    /// Indices of variables that actually occur, ascending.
    std::vector<int> variables() const;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator-() const;
    Polynomial pow(uint32_t e) const;

    /// Exact division; returns false when the remainder is nonzero.
    static bool try_divexact(const Polynomial& num, const Polynomial& div,
                             Polynomial& quot);
    static Polynomial divexact(const Polynomial& num, const Polynomial& div);

    /// Integer content carrying the sign of the leading coefficient.
    mpz_class content() const;
    /// Componentwise-min monomial over all terms (1 for the zero polynomial).
    Monomial monomial_content() const;
    /// True for a single term with coefficient exactly 1.
    bool is_unit_monomial() const;
    /// Canonical gcd: positive leading coefficient; gcd(0,0) = 0.
    static Polynomial gcd(const Polynomial& a, const Polynomial& b);

    bool operator==(const Polynomial& other) const;

    /// Canonical text, e.g. "q^2+1", "3*q^2*lambda-1", "-q", "0".
    std::string str() const;

private:
    explicit Polynomial(std::shared_ptr<const std::vector<Term>> terms)
        : terms_(std::move(terms)) {}
    std::shared_ptr<const std::vector<Term>> terms_;
};

}  // namespace uqaw

#endif
