#ifndef UQAW_SCALAR_HPP
#define UQAW_SCALAR_HPP

#include <boost/container/small_vector.hpp>
#include <map>
#include <string>
#include <variant>

#include "uqaw/polynomial.hpp"

namespace uqaw {

namespace detail {
/// Dense fast representation of N(q) q^offset / ((q-1)^wm (q+1)^wp) with
/// N = sum coeffs[i] q^i.  Empty coeffs means zero; otherwise the first and
/// last entries are nonzero, and N(1) != 0 when wm > 0, N(-1) != 0 when
/// wp > 0, so the value determines the representation uniquely.  This covers
/// every coefficient arising from PBW products in U_q(sl2), whose only
/// denominators are powers of q - q^-1 = (q-1)(q+1)/q.
struct QLaurent {
    int32_t offset = 0;
    int32_t wm = 0;  // power of (q-1) in the denominator
    int32_t wp = 0;  // power of (q+1) in the denominator
    boost::container::small_vector<int64_t, 6> coeffs;
    bool operator==(const QLaurent&) const = default;
};
struct ScalarFrac {
    Polynomial num, den;
    bool operator==(const ScalarFrac& o) const {
        return num == o.num && den == o.den;
    }
};
}  // namespace detail

/// Element of the field of rational functions over Q in q and the declared
/// formal parameters.
///
/// Two internal representations with a canonical choice between them, so
/// equal field elements always compare equal structurally:
///  - a dense q-Laurent polynomial with int64 coefficients (the common case
///    in the tensor computations), used whenever the value is a Laurent
///    polynomial in q alone with coefficients that fit;
///  - a reduced fraction of integer polynomials (denominator nonzero, gcd a
///    unit, denominator leading coefficient positive, zero stored as 0/1).
class Scalar {
public:
    Scalar() = default;
    Scalar(long value);
    static Scalar integer(const mpz_class& value);
    static Scalar rational(const mpz_class& num, const mpz_class& den);
    /// The parameter must already be declared; q is always available.
    static Scalar variable(const std::string& name);
    static Scalar q();
    /// Canonicalizes a raw fraction; throws division_by_zero on zero denominator.
    static Scalar fraction(const Polynomial& num, const Polynomial& den);

    /// Fraction view (materialized for Laurent-represented values).
    Polynomial num() const;
    Polynomial den() const;

    bool is_zero() const;
    bool is_one() const;
    /// True when no parameter occurs, i.e. the value is an exact rational.
    bool is_rational_constant() const;
    bool is_integer() const;

    Scalar operator+(const Scalar& other) const;
    Scalar operator-(const Scalar& other) const;
    Scalar operator*(const Scalar& other) const;
    Scalar operator/(const Scalar& other) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& other) { return *this = *this + other; }
    Scalar& operator-=(const Scalar& other) { return *this = *this - other; }
    Scalar& operator*=(const Scalar& other) { return *this = *this * other; }
    Scalar& operator/=(const Scalar& other) { return *this = *this / other; }

    Scalar inverse() const;
    Scalar pow(long e) const;

    bool operator==(const Scalar& other) const;
    bool operator!=(const Scalar& other) const { return !(*this == other); }

    /// Substitutes scalars for parameters (by index); unknown indices stay formal.
    Scalar substitute(const std::map<int, Scalar>& values) const;

    /// Canonical text: "num" or "(num)/(den)", variables in ParamSet order.
    std::string str() const;
    /// Human-readable balanced Laurent form, e.g. "q + q^-1", "1/(q - q^-1)".
    std::string pretty() const;
    /// Parses either text form (full scalar expression grammar).
    static Scalar parse(const std::string& text);

private:
    using QLaurent = detail::QLaurent;
    using Frac = detail::ScalarFrac;

    explicit Scalar(QLaurent ql) : rep_(std::move(ql)) {}
    Scalar(Polynomial num, Polynomial den);

    const QLaurent* ql() const { return std::get_if<QLaurent>(&rep_); }
    const Frac* frac() const { return std::get_if<Frac>(&rep_); }

    Frac to_frac() const;
    /// Canonical constructor from an already-reduced fraction.
    static Scalar from_reduced(Polynomial num, Polynomial den);

    std::variant<QLaurent, Frac> rep_;
};

inline Scalar operator+(long a, const Scalar& b) { return Scalar(a) + b; }
inline Scalar operator-(long a, const Scalar& b) { return Scalar(a) - b; }
inline Scalar operator*(long a, const Scalar& b) { return Scalar(a) * b; }
inline Scalar operator/(long a, const Scalar& b) { return Scalar(a) / b; }

/// [n] = (q^n - q^-n)/(q - q^-1), extended to all integers; [-n] = -[n].
Scalar q_bracket(long n);

/// Gaussian binomial via the product formula; zero when i > n.
Scalar q_binomial(long n, long i);

/// [x; n] = (x q^n - x^-1 q^-n)/(q - q^-1) for a nonzero scalar x.
Scalar param_bracket(const Scalar& x, long n);
/// Same, looking the parameter up by name (must be declared).
Scalar param_bracket(const std::string& sym, long n);

/// Evaluates parameters at exact rationals; remaining parameters stay formal.
/// Throws pole_at_specialization when the denominator vanishes.
Scalar specialize(const Scalar& s, const std::map<std::string, Scalar>& assignments);

}  // namespace uqaw

#endif
