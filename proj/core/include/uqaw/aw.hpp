#ifndef UQAW_AW_HPP
#define UQAW_AW_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "uqaw/expr.hpp"
#include "uqaw/report.hpp"
#include "uqaw/scalar.hpp"

namespace uqaw {

/// PBW monomial A^a B^b C^c alpha^r beta^s gamma^t of the universal
/// Askey-Wilson algebra.
struct AWMonomial {
    int32_t a = 0, b = 0, c = 0, r = 0, s = 0, t = 0;

    int32_t word_length() const { return a + b + c + r + s + t; }
    auto operator<=>(const AWMonomial&) const = default;
    size_t hash() const;
};

struct AWMonomialDesc {
    bool operator()(const AWMonomial& x, const AWMonomial& y) const { return y < x; }
};

enum class AWLetter : uint8_t { A, B, C, Alpha, Beta, Gamma };

/// Element of the universal Askey-Wilson algebra in PBW normal form.
class AWElement {
public:
    using TermMap = std::map<AWMonomial, Scalar, AWMonomialDesc>;

    AWElement() = default;
    static AWElement zero() { return AWElement(); }
    static AWElement one();
    static AWElement monomial(AWMonomial m, Scalar c);
    static AWElement letter(AWLetter l);
    static AWElement A() { return letter(AWLetter::A); }
    static AWElement B() { return letter(AWLetter::B); }
    static AWElement C() { return letter(AWLetter::C); }
    static AWElement alpha() { return letter(AWLetter::Alpha); }
    static AWElement beta() { return letter(AWLetter::Beta); }
    static AWElement gamma() { return letter(AWLetter::Gamma); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    Scalar coeff(const AWMonomial& m) const;
    int32_t max_word_length() const;

    void add_term(const AWMonomial& m, const Scalar& c);

    AWElement operator+(const AWElement& other) const;
    AWElement operator-(const AWElement& other) const;
    AWElement operator-() const;
    AWElement operator*(const AWElement& other) const;
    AWElement scaled(const Scalar& c) const;

    bool operator==(const AWElement& other) const { return terms_ == other.terms_; }
    bool operator!=(const AWElement& other) const { return !(*this == other); }

    std::string pretty() const;

private:
    TermMap terms_;
};

AWElement aw_multiply(const AWElement& x, const AWElement& y);
AWElement aw_pow(const AWElement& x, uint32_t e);

/// Right and left absorption of a single letter; the two reduction orders
/// must agree, which the confluence suite checks on random words.
AWElement aw_mul_letter_right(const AWElement& x, AWLetter l);
AWElement aw_mul_letter_left(AWLetter l, const AWElement& x);

AWElement aw_normal_form(const ExprPtr& expr, long word_cap = 0);
AWElement aw_normal_form(const std::string& expr, long word_cap = 0);

/// Casimir element q ABC + q^2 A^2 + q^-2 B^2 + q^2 C^2 - qA alpha
/// - q^-1 B beta - qC gamma.
AWElement aw_casimir();

/// Normalizes the presentation relations in A, B, gamma and the centrality
/// of alpha, beta, gamma; any nonzero residue is reported.
CheckReport aw_presentation_check();

struct AwTraits {
    using Element = AWElement;
    static std::optional<AWElement> letter(const std::string& name);
    static AWElement from_scalar(const Scalar& s) { return AWElement::one().scaled(s); }
    static AWElement add(const AWElement& a, const AWElement& b) { return a + b; }
    static AWElement mul(const AWElement& a, const AWElement& b) {
        return aw_multiply(a, b);
    }
    static AWElement scale(const AWElement& a, const Scalar& s) { return a.scaled(s); }
    static std::optional<AWElement> letter_power(const std::string& name, long e);
    static long word_length(const AWElement& a) { return a.max_word_length(); }
};

}  // namespace uqaw

#endif
