#include "uqaw/scalar.hpp"

#include <algorithm>

#include "uqaw/errors.hpp"

namespace uqaw {

// ---------------------------------------------------------------------------
// Laurent representation helpers

namespace {

using QLVec = boost::container::small_vector<int64_t, 6>;

// N(1) and N(-1) with 128-bit accumulation (cannot overflow at our sizes).
__int128 eval_at_one(const QLVec& c) {
    __int128 s = 0;
    for (int64_t v : c) s += v;
    return s;
}
__int128 eval_at_minus_one(const QLVec& c) {
    __int128 s = 0;
    for (size_t i = 0; i < c.size(); ++i) s += (i & 1) ? -static_cast<__int128>(c[i]) : c[i];
    return s;
}

// Exact division of N by (q - 1) or (q + 1); requires the evaluation above
// to vanish.  Returns false if a quotient coefficient overflows int64.
bool divide_linear(QLVec& c, int64_t root) {
    // N = (q - root) * Q, synthetic division from the top
    QLVec out(c.size() - 1, 0);
    __int128 carry = 0;
    for (size_t i = c.size(); i-- > 1;) {
        carry += c[i];
        if (carry > INT64_MAX || carry < INT64_MIN) return false;
        out[i - 1] = static_cast<int64_t>(carry);
        carry *= root;
    }
    c = std::move(out);
    return true;
}

// Multiplies N by (q - 1) or (q + 1) in place (checked).
bool multiply_linear(QLVec& c, int64_t root) {
    QLVec out(c.size() + 1, 0);
    bool overflow = false;
    for (size_t i = 0; i < c.size() && !overflow; ++i) {
        __int128 hi = static_cast<__int128>(out[i + 1]) + c[i];
        __int128 lo = static_cast<__int128>(out[i]) - static_cast<__int128>(root) * c[i];
        if (hi > INT64_MAX || hi < INT64_MIN || lo > INT64_MAX || lo < INT64_MIN)
            return false;
        out[i + 1] = static_cast<int64_t>(hi);
        out[i] = static_cast<int64_t>(lo);
    }
    c = std::move(out);
    return true;
}

}  // namespace

Scalar::Scalar(long value) {
    QLaurent g;
    if (value != 0) g.coeffs.push_back(value);
    rep_ = std::move(g);
}

Scalar::Scalar(Polynomial num, Polynomial den) {
    // caller guarantees the fraction is reduced and sign-normalized
    *this = from_reduced(std::move(num), std::move(den));
}

namespace {

// Trims zero borders and strips removable (q-1)/(q+1) factors; the result
// is the canonical representative of the value.  Returns false on overflow.
bool normalize_ql(detail::QLaurent& g) {
    size_t begin = 0, end = g.coeffs.size();
    while (begin < end && g.coeffs[begin] == 0) ++begin;
    while (end > begin && g.coeffs[end - 1] == 0) --end;
    if (begin == end) {
        g = detail::QLaurent{};
        return true;
    }
    if (begin > 0 || end < g.coeffs.size()) {
        QLVec trimmed(g.coeffs.begin() + begin, g.coeffs.begin() + end);
        g.coeffs = std::move(trimmed);
        g.offset += static_cast<int32_t>(begin);
    }
    while (g.wm > 0 && eval_at_one(g.coeffs) == 0) {
        if (!divide_linear(g.coeffs, 1)) return false;
        --g.wm;
    }
    while (g.wp > 0 && eval_at_minus_one(g.coeffs) == 0) {
        if (!divide_linear(g.coeffs, -1)) return false;
        --g.wp;
    }
    return true;
}

}  // namespace

Scalar Scalar::from_reduced(Polynomial num, Polynomial den) {
    Scalar s;
    if (num.is_zero()) return s;  // canonical zero is the empty Laurent
    // Demote when the value lives in Z[q^-1, q, 1/(q-1), 1/(q+1)] with
    // coefficients that fit in int64.
    bool q_only = true;
    for (const auto& t : num.terms()) {
        if (t.mono.degree() != t.mono.exponent(ParamSet::q_index) ||
            !t.coeff.fits_slong_p()) {
            q_only = false;
            break;
        }
    }
    if (q_only) {
        // factor den as q^c (q-1)^wm (q+1)^wp with unit content
        Polynomial d = den;
        int32_t qshift = d.min_exponent(ParamSet::q_index);
        int32_t wm = 0, wp = 0;
        bool shape = true;
        for (const auto& t : d.terms())
            if (t.mono.degree() != t.mono.exponent(ParamSet::q_index)) {
                shape = false;
                break;
            }
        if (shape && qshift > 0) {
            Polynomial q_to_c = Polynomial::variable(ParamSet::q_index, qshift);
            d = Polynomial::divexact(d, q_to_c);
        }
        if (shape) {
            static const Polynomial qm1 =
                Polynomial::variable(ParamSet::q_index) - Polynomial::constant(1);
            static const Polynomial qp1 =
                Polynomial::variable(ParamSet::q_index) + Polynomial::constant(1);
            Polynomial quot;
            while (!d.is_one() && Polynomial::try_divexact(d, qm1, quot)) {
                d = quot;
                ++wm;
            }
            while (!d.is_one() && Polynomial::try_divexact(d, qp1, quot)) {
                d = quot;
                ++wp;
            }
            if (d.is_one()) {
                QLaurent g;
                int32_t lo = num.min_exponent(ParamSet::q_index);
                int32_t hi = num.degree_in(ParamSet::q_index);
                g.offset = lo - qshift;
                g.wm = wm;
                g.wp = wp;
                g.coeffs.assign(hi - lo + 1, 0);
                for (const auto& t : num.terms())
                    g.coeffs[t.mono.exponent(ParamSet::q_index) - lo] =
                        t.coeff.get_si();
                // input is fully reduced so no normalization is needed
                s.rep_ = std::move(g);
                return s;
            }
        }
    }
    s.rep_ = Frac{std::move(num), std::move(den)};
    return s;
}

Scalar::Frac Scalar::to_frac() const {
    if (const Frac* f = frac()) return *f;
    const QLaurent& g = std::get<QLaurent>(rep_);
    if (g.coeffs.empty()) return Frac{Polynomial(), Polynomial::constant(1)};
    int32_t shift = g.offset < 0 ? -g.offset : 0;
    std::vector<Term> ts;
    ts.reserve(g.coeffs.size());
    for (size_t i = 0; i < g.coeffs.size(); ++i) {
        if (g.coeffs[i] == 0) continue;
        int32_t e = g.offset + static_cast<int32_t>(i) + shift;
        ts.push_back(Term{Monomial::variable(ParamSet::q_index, e),
                          mpz_class(static_cast<long>(g.coeffs[i]))});
    }
    Polynomial num = Polynomial::from_terms(std::move(ts));
    Polynomial den = shift ? Polynomial::variable(ParamSet::q_index, shift)
                           : Polynomial::constant(1);
    if (g.wm > 0) {
        static const Polynomial qm1 =
            Polynomial::variable(ParamSet::q_index) - Polynomial::constant(1);
        for (int32_t i = 0; i < g.wm; ++i) den = den * qm1;
    }
    if (g.wp > 0) {
        static const Polynomial qp1 =
            Polynomial::variable(ParamSet::q_index) + Polynomial::constant(1);
        for (int32_t i = 0; i < g.wp; ++i) den = den * qp1;
    }
    return Frac{std::move(num), std::move(den)};
}

Polynomial Scalar::num() const { return to_frac().num; }
Polynomial Scalar::den() const { return to_frac().den; }

bool Scalar::is_zero() const {
    if (const QLaurent* g = ql()) return g->coeffs.empty();
    return false;  // a Frac never stores zero
}

bool Scalar::is_one() const {
    if (const QLaurent* g = ql())
        return g->coeffs.size() == 1 && g->offset == 0 && g->wm == 0 && g->wp == 0 &&
               g->coeffs[0] == 1;
    return false;
}

bool Scalar::is_rational_constant() const {
    if (const QLaurent* g = ql())
        return g->coeffs.empty() || (g->coeffs.size() == 1 && g->offset == 0 &&
                                     g->wm == 0 && g->wp == 0);
    const Frac& f = *frac();
    return f.num.is_constant() && f.den.is_constant();
}

bool Scalar::is_integer() const {
    if (const QLaurent* g = ql())
        return g->coeffs.empty() || (g->coeffs.size() == 1 && g->offset == 0 &&
                                     g->wm == 0 && g->wp == 0);
    const Frac& f = *frac();
    return f.num.is_constant() && f.den.is_one();
}

bool Scalar::operator==(const Scalar& other) const { return rep_ == other.rep_; }

// ---------------------------------------------------------------------------
// Canonical fraction arithmetic (the generic lane)

namespace {

void canonicalize(Polynomial& num, Polynomial& den) {
    if (den.is_zero()) throw division_by_zero();
    if (num.is_zero()) {
        den = Polynomial::constant(1);
        return;
    }
    if (!den.is_one()) {
        Polynomial g = Polynomial::gcd(num, den);
        if (!g.is_one()) {
            num = Polynomial::divexact(num, g);
            den = Polynomial::divexact(den, g);
        }
    }
    if (den.leading().coeff < 0) {
        num = -num;
        den = -den;
    }
}

}  // namespace

Scalar Scalar::integer(const mpz_class& value) {
    return from_reduced(Polynomial::constant(value), Polynomial::constant(1));
}

Scalar Scalar::rational(const mpz_class& num, const mpz_class& den) {
    return fraction(Polynomial::constant(num), Polynomial::constant(den));
}

Scalar Scalar::variable(const std::string& name) {
    int idx = ParamSet::global().require(name);
    return from_reduced(Polynomial::variable(idx), Polynomial::constant(1));
}

Scalar Scalar::q() {
    static const Scalar v = [] {
        QLaurent g;
        g.offset = 1;
        g.coeffs.push_back(1);
        return Scalar(std::move(g));
    }();
    return v;
}

Scalar Scalar::fraction(const Polynomial& num, const Polynomial& den) {
    Polynomial n = num, d = den;
    canonicalize(n, d);
    return from_reduced(std::move(n), std::move(d));
}

namespace {

Scalar frac_add(const Polynomial& xn, const Polynomial& xd, const Polynomial& yn,
                const Polynomial& yd);

}  // namespace

Scalar Scalar::operator+(const Scalar& other) const {
    const QLaurent* a = ql();
    const QLaurent* b = other.ql();
    if (a && b) {
        if (a->coeffs.empty()) return other;
        if (b->coeffs.empty()) return *this;
        // align the (q-1)/(q+1) powers by scaling the numerators up
        QLVec ca(a->coeffs.begin(), a->coeffs.end());
        QLVec cb(b->coeffs.begin(), b->coeffs.end());
        int32_t wm = std::max(a->wm, b->wm);
        int32_t wp = std::max(a->wp, b->wp);
        bool ok = true;
        for (int32_t i = a->wm; i < wm && ok; ++i) ok = multiply_linear(ca, 1);
        for (int32_t i = a->wp; i < wp && ok; ++i) ok = multiply_linear(ca, -1);
        for (int32_t i = b->wm; i < wm && ok; ++i) ok = multiply_linear(cb, 1);
        for (int32_t i = b->wp; i < wp && ok; ++i) ok = multiply_linear(cb, -1);
        if (ok) {
            int32_t lo = std::min(a->offset, b->offset);
            int32_t hi =
                std::max(a->offset + static_cast<int32_t>(ca.size()),
                         b->offset + static_cast<int32_t>(cb.size()));
            QLaurent r;
            r.offset = lo;
            r.wm = wm;
            r.wp = wp;
            r.coeffs.assign(hi - lo, 0);
            for (size_t i = 0; i < ca.size(); ++i)
                r.coeffs[a->offset - lo + i] = ca[i];
            for (size_t i = 0; i < cb.size() && ok; ++i) {
                int64_t* slot = &r.coeffs[b->offset - lo + i];
                if (__builtin_add_overflow(*slot, cb[i], slot)) ok = false;
            }
            if (ok && normalize_ql(r)) return Scalar(std::move(r));
        }
    }
    Frac x = to_frac(), y = other.to_frac();
    return frac_add(x.num, x.den, y.num, y.den);
}

Scalar Scalar::operator-() const {
    if (const QLaurent* g = ql()) {
        QLaurent r = *g;
        for (int64_t& c : r.coeffs) {
            if (c == INT64_MIN) {
                Frac f = to_frac();
                return from_reduced(-f.num, f.den);
            }
            c = -c;
        }
        return Scalar(std::move(r));
    }
    const Frac& f = *frac();
    return from_reduced(-f.num, f.den);
}

Scalar Scalar::operator-(const Scalar& other) const { return *this + (-other); }

Scalar Scalar::operator*(const Scalar& other) const {
    const QLaurent* a = ql();
    const QLaurent* b = other.ql();
    if (a && b) {
        if (a->coeffs.empty() || b->coeffs.empty()) return Scalar();
        QLaurent r;
        r.offset = a->offset + b->offset;
        r.wm = a->wm + b->wm;
        r.wp = a->wp + b->wp;
        r.coeffs.assign(a->coeffs.size() + b->coeffs.size() - 1, 0);
        bool overflow = false;
        for (size_t i = 0; i < a->coeffs.size() && !overflow; ++i) {
            if (a->coeffs[i] == 0) continue;
            for (size_t j = 0; j < b->coeffs.size(); ++j) {
                if (b->coeffs[j] == 0) continue;
                __int128 prod = static_cast<__int128>(a->coeffs[i]) * b->coeffs[j];
                __int128 sum = static_cast<__int128>(r.coeffs[i + j]) + prod;
                if (sum > INT64_MAX || sum < INT64_MIN) {
                    overflow = true;
                    break;
                }
                r.coeffs[i + j] = static_cast<int64_t>(sum);
            }
        }
        if (!overflow && normalize_ql(r)) return Scalar(std::move(r));
    }
    // generic lane with cross-reduction
    Frac x = to_frac(), y = other.to_frac();
    if (x.num.is_zero() || y.num.is_zero()) return Scalar();
    Polynomial g1 = Polynomial::gcd(x.num, y.den);
    Polynomial g2 = Polynomial::gcd(y.num, x.den);
    Polynomial n1 = g1.is_one() ? x.num : Polynomial::divexact(x.num, g1);
    Polynomial d2 = g1.is_one() ? y.den : Polynomial::divexact(y.den, g1);
    Polynomial n2 = g2.is_one() ? y.num : Polynomial::divexact(y.num, g2);
    Polynomial d1 = g2.is_one() ? x.den : Polynomial::divexact(x.den, g2);
    Polynomial n = n1 * n2;
    Polynomial d = d1 * d2;
    if (d.leading().coeff < 0) return from_reduced(-n, -d);
    return from_reduced(std::move(n), std::move(d));
}

namespace {

Scalar frac_add(const Polynomial& xn, const Polynomial& xd, const Polynomial& yn,
                const Polynomial& yd) {
    if (xn.is_zero()) return Scalar::fraction(yn, yd);
    if (yn.is_zero()) return Scalar::fraction(xn, xd);
    if (xd == yd) return Scalar::fraction(xn + yn, xd);
    // Knuth 4.5.1: with reduced inputs and g = gcd(b, d), only gcd(t, g) can
    // still cancel.
    Polynomial g = Polynomial::gcd(xd, yd);
    if (g.is_one()) {
        Polynomial n = xn * yd + yn * xd;
        if (n.is_zero()) return Scalar();
        return Scalar::fraction(n, xd * yd);
    }
    Polynomial b1 = Polynomial::divexact(xd, g);
    Polynomial d1 = Polynomial::divexact(yd, g);
    Polynomial t = xn * d1 + yn * b1;
    if (t.is_zero()) return Scalar();
    Polynomial h = Polynomial::gcd(t, g);
    Polynomial n = h.is_one() ? t : Polynomial::divexact(t, h);
    Polynomial d = b1 * (h.is_one() ? yd : Polynomial::divexact(yd, h));
    return Scalar::fraction(std::move(n), std::move(d));
}

}  // namespace

Scalar Scalar::inverse() const {
    if (const QLaurent* g = ql()) {
        if (g->coeffs.empty()) throw division_by_zero("inverse of zero");
        if (g->coeffs.size() == 1 && g->wm == 0 && g->wp == 0 &&
            (g->coeffs[0] == 1 || g->coeffs[0] == -1)) {
            QLaurent r;
            r.offset = -g->offset;
            r.coeffs.push_back(g->coeffs[0]);
            return Scalar(std::move(r));
        }
    }
    Frac f = to_frac();
    if (f.num.is_zero()) throw division_by_zero("inverse of zero");
    if (f.num.leading().coeff < 0) return from_reduced(-f.den, -f.num);
    return from_reduced(f.den, f.num);
}

Scalar Scalar::operator/(const Scalar& other) const { return *this * other.inverse(); }

Scalar Scalar::pow(long e) const {
    if (const QLaurent* g = ql()) {
        // q-power fast path
        if (g->coeffs.size() == 1 && g->wm == 0 && g->wp == 0 &&
            (g->coeffs[0] == 1 || g->coeffs[0] == -1)) {
            QLaurent r;
            r.offset = static_cast<int32_t>(g->offset * e);
            r.coeffs.push_back((g->coeffs[0] == -1 && (e & 1)) ? -1 : 1);
            return Scalar(std::move(r));
        }
    }
    if (e < 0) return inverse().pow(-e);
    Scalar result(1);
    Scalar base = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) result = result * base;
        base = base * base;
        k >>= 1;
    }
    return result;
}

// ---------------------------------------------------------------------------
// Substitution and specialization

namespace {

Scalar substitute_poly(const Polynomial& p, const std::map<int, Scalar>& values) {
    Scalar acc;
    for (const auto& t : p.terms()) {
        Scalar term = Scalar::integer(t.coeff);
        for (int i = 0; i < t.mono.width(); ++i) {
            int32_t e = t.mono.exponent(i);
            if (e == 0) continue;
            auto it = values.find(i);
            Scalar base = it != values.end()
                              ? it->second
                              : Scalar::fraction(Polynomial::variable(i),
                                                 Polynomial::constant(1));
            term = term * base.pow(e);
        }
        acc = acc + term;
    }
    return acc;
}

}  // namespace

Scalar Scalar::substitute(const std::map<int, Scalar>& values) const {
    Frac f = to_frac();
    Scalar n = substitute_poly(f.num, values);
    Scalar d = substitute_poly(f.den, values);
    if (d.is_zero()) throw pole_at_specialization();
    return n / d;
}

Scalar specialize(const Scalar& s, const std::map<std::string, Scalar>& assignments) {
    std::map<int, Scalar> by_index;
    const ParamSet& ps = ParamSet::global();
    for (const auto& [name, value] : assignments) {
        if (!value.is_rational_constant())
            throw invalid_argument_error("specialize takes exact rational values");
        by_index.emplace(ps.require(name), value);
    }
    return s.substitute(by_index);
}

// ---------------------------------------------------------------------------
// Text forms

std::string Scalar::str() const {
    Frac f = to_frac();
    if (f.den.is_one()) return f.num.str();
    return "(" + f.num.str() + ")/(" + f.den.str() + ")";
}

namespace {

struct LaurentTerm {
    mpz_class coeff;
    std::vector<std::pair<int, int32_t>> powers;  // (var, signed exponent)
};

// Shift every variable so the span of denominator exponents is centered;
// e.g. q/(q^2-1) renders as 1/(q - q^-1).
std::vector<LaurentTerm> shifted_terms(const Polynomial& p,
                                       const std::vector<int32_t>& shift) {
    std::vector<LaurentTerm> out;
    for (const auto& t : p.terms()) {
        LaurentTerm lt;
        lt.coeff = t.coeff;
        int w = std::max<int>(t.mono.width(), static_cast<int>(shift.size()));
        for (int i = 0; i < w; ++i) {
            int32_t e =
                t.mono.exponent(i) - (i < static_cast<int>(shift.size()) ? shift[i] : 0);
            if (e != 0) lt.powers.push_back({i, e});
        }
        out.push_back(std::move(lt));
    }
    return out;
}

std::string laurent_string(const std::vector<LaurentTerm>& terms) {
    const ParamSet& ps = ParamSet::global();
    std::string out;
    bool first = true;
    for (const auto& t : terms) {
        mpz_class c = t.coeff;
        if (first) {
            if (c < 0) {
                out += "-";
                c = -c;
            }
            first = false;
        } else {
            out += (c < 0) ? " - " : " + ";
            if (c < 0) c = -c;
        }
        std::string vars;
        for (auto [i, e] : t.powers) {
            if (!vars.empty()) vars += "*";
            vars += ps.name(i);
            if (e != 1) vars += "^" + std::to_string(e);
        }
        if (vars.empty()) {
            out += c.get_str();
        } else {
            if (c != 1) out += c.get_str() + "*";
            out += vars;
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace

std::string Scalar::pretty() const {
    if (is_zero()) return "0";
    Frac f = to_frac();
    if (f.den.is_one()) return laurent_string(shifted_terms(f.num, {}));
    int width = 0;
    for (const auto& t : f.den.terms()) width = std::max(width, t.mono.width());
    std::vector<int32_t> shift(width, 0);
    for (int i = 0; i < width; ++i) {
        int32_t lo = f.den.min_exponent(i);
        int32_t hi = f.den.degree_in(i);
        shift[i] = (lo + hi) / 2;
    }
    auto den_terms = shifted_terms(f.den, shift);
    bool trivial_den =
        den_terms.size() == 1 && den_terms[0].coeff == 1 && den_terms[0].powers.empty();
    auto num_terms = shifted_terms(f.num, shift);
    std::string num_str = laurent_string(num_terms);
    if (trivial_den) return num_str;
    std::string den_str = laurent_string(den_terms);
    bool num_simple = num_terms.size() == 1;
    std::string lhs = num_simple ? num_str : "(" + num_str + ")";
    return lhs + "/(" + den_str + ")";
}

// ---------------------------------------------------------------------------
// q-combinatorics

Scalar q_bracket(long n) {
    Scalar q = Scalar::q();
    return (q.pow(n) - q.pow(-n)) / (q - q.pow(-1));
}

Scalar q_binomial(long n, long i) {
    if (n < 0 || i < 0) throw invalid_argument_error("q_binomial needs n, i >= 0");
    Scalar result(1);
    for (long h = 1; h <= i; ++h) result = result * q_bracket(n - h + 1) / q_bracket(h);
    return result;
}

Scalar param_bracket(const Scalar& x, long n) {
    if (x.is_zero()) throw invalid_argument_error("param_bracket of zero");
    Scalar q = Scalar::q();
    return (x * q.pow(n) - x.inverse() * q.pow(-n)) / (q - q.inverse());
}

Scalar param_bracket(const std::string& sym, long n) {
    return param_bracket(Scalar::variable(sym), n);
}

}  // namespace uqaw
