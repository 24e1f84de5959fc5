#ifndef UQAW_UQ_HPP
#define UQAW_UQ_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "uqaw/expr.hpp"
#include "uqaw/scalar.hpp"

namespace uqaw {

/// PBW basis monomial F^f K^k E^e; the Z-degree is e - f.
struct UMonomial {
    int32_t f = 0;  // >= 0
    int32_t k = 0;  // any sign
    int32_t e = 0;  // >= 0

    int32_t degree() const { return e - f; }
    int32_t word_length() const { return f + (k < 0 ? -k : k) + e; }
    auto operator<=>(const UMonomial&) const = default;
    size_t hash() const;
};

/// Map order: descending (f, k, e), which puts F-heavy monomials first and
/// matches the serialized term order.
struct UMonomialDesc {
    bool operator()(const UMonomial& a, const UMonomial& b) const { return b < a; }
};

/// Element of U_q(sl2) in PBW normal form: a sparse Scalar combination of
/// F^f K^k E^e with no zero coefficients stored.
class UElement {
public:
    using TermMap = std::map<UMonomial, Scalar, UMonomialDesc>;

    UElement() = default;  // zero
    static UElement zero() { return UElement(); }
    static UElement one();
    static UElement monomial(UMonomial m, Scalar c);
    static UElement E();
    static UElement F();
    static UElement K();
    static UElement Kinv();

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coeff(const UMonomial& m) const;
    size_t size() const { return terms_.size(); }
    int32_t max_word_length() const;

    void add_term(const UMonomial& m, const Scalar& c);

    UElement operator+(const UElement& other) const;
    UElement operator-(const UElement& other) const;
    UElement operator-() const;
    UElement operator*(const UElement& other) const;
    UElement scaled(const Scalar& c) const;

    bool operator==(const UElement& other) const { return terms_ == other.terms_; }
    bool operator!=(const UElement& other) const { return !(*this == other); }

    std::string pretty() const;

private:
    TermMap terms_;
};

// ---------------------------------------------------------------------------
// Word rewriting kernel

enum class ULetter : uint8_t { E, F, K, Kinv };
using UWordLetters = std::vector<ULetter>;

/// Which adjacent inversion the small-step rewriter eliminates next.  Both
/// strategies must reach the same normal form; the confluence tests compare
/// them on random words.
enum class RewriteStrategy { Leftmost, Rightmost };

/// Normalizes a generator word with the three defining relations, eliminating
/// one adjacent inversion at a time.
UElement normalize_word(const UWordLetters& word,
                        RewriteStrategy strategy = RewriteStrategy::Leftmost);

// ---------------------------------------------------------------------------
// Module operations

/// Normal form of a parsed expression over E, F, K, Kinv; the cap bounds the
/// letter length of any monomial built along the way (CLI guard).
UElement u_normal_form(const ExprPtr& expr, long word_cap = 0);
UElement u_normal_form(const std::string& expr, long word_cap = 0);

UElement u_multiply(const UElement& x, const UElement& y);
UElement u_pow(const UElement& x, uint32_t e);

/// Normal form of the product of two PBW monomials, memoized process-wide.
const UElement& u_monomial_product(const UMonomial& a, const UMonomial& b);

/// The normalized Casimir element (q-q^-1)^2 FE + qK + q^-1 K^-1.
UElement u_casimir();
/// Cached powers of the Casimir element.
UElement u_casimir_pow(uint32_t i);

/// Splits into homogeneous parts keyed by degree e - f.
std::map<int32_t, UElement> u_grade(const UElement& x);

/// Coefficients over the degree-n basis Lambda^i K^h X^|n| with X = E for
/// n >= 0 and X = F for n < 0.  Keys are (i, h).
using CentralForm = std::map<std::pair<int32_t, int32_t>, Scalar>;

/// Requires x homogeneous of degree n; round-trips with u_from_central_form.
CentralForm u_central_form(const UElement& x, int32_t n);
UElement u_from_central_form(const CentralForm& form, int32_t n);

/// Normal form of Lambda^i K^h E^n (n >= 0) or Lambda^i K^h F^|n| (n < 0).
UElement u_central_basis_element(int32_t i, int32_t h, int32_t n);

struct UqTraits {
    using Element = UElement;
    static std::optional<UElement> letter(const std::string& name);
    static UElement from_scalar(const Scalar& s) { return UElement::one().scaled(s); }
    static UElement add(const UElement& a, const UElement& b) { return a + b; }
    static UElement mul(const UElement& a, const UElement& b) { return a * b; }
    static UElement scale(const UElement& a, const Scalar& s) { return a.scaled(s); }
    static std::optional<UElement> letter_power(const std::string& name, long e);
    static long word_length(const UElement& a) { return a.max_word_length(); }
};

}  // namespace uqaw

#endif
