#include "uqaw/polynomial.hpp"

#include <algorithm>
#include <map>

#include "uqaw/errors.hpp"

namespace uqaw {

namespace {
const std::shared_ptr<const std::vector<Term>>& empty_terms() {
    static const auto e = std::make_shared<const std::vector<Term>>();
    return e;
}
}  // namespace

// ---------------------------------------------------------------------------
// Monomial

void Monomial::trim() {
    while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
    degree_ = 0;
    for (int32_t e : exps_) degree_ += e;
}

Monomial Monomial::variable(int index, int32_t exp) {
    if (index < 0) throw invalid_argument_error("negative variable index");
    if (exp < 0) throw invalid_argument_error("negative monomial exponent");
    Monomial m;
    if (exp > 0) {
        m.exps_.assign(index + 1, 0);
        m.exps_[index] = exp;
        m.degree_ = exp;
    }
    return m;
}

int32_t Monomial::exponent(int index) const {
    if (index < 0 || index >= width()) return 0;
    return exps_[index];
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial r;
    r.exps_.resize(std::max(exps_.size(), other.exps_.size()), 0);
    for (size_t i = 0; i < r.exps_.size(); ++i)
        r.exps_[i] = exponent(static_cast<int>(i)) + other.exponent(static_cast<int>(i));
    r.trim();
    return r;
}

bool Monomial::divides(const Monomial& other) const {
    for (int i = 0; i < width(); ++i)
        if (exps_[i] > other.exponent(i)) return false;
    return true;
}

Monomial Monomial::divide_into(const Monomial& numerator) const {
    Monomial r;
    r.exps_.resize(std::max(exps_.size(), numerator.exps_.size()), 0);
    for (size_t i = 0; i < r.exps_.size(); ++i) {
        int32_t d = numerator.exponent(static_cast<int>(i)) - exponent(static_cast<int>(i));
        if (d < 0) throw invalid_argument_error("monomial division is not exact");
        r.exps_[i] = d;
    }
    r.trim();
    return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.exps_.resize(std::min(a.exps_.size(), b.exps_.size()), 0);
    for (size_t i = 0; i < r.exps_.size(); ++i)
        r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    r.trim();
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.exps_.resize(std::max(a.exps_.size(), b.exps_.size()), 0);
    for (size_t i = 0; i < r.exps_.size(); ++i)
        r.exps_[i] = std::max(a.exponent(static_cast<int>(i)),
                              b.exponent(static_cast<int>(i)));
    r.trim();
    return r;
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
    if (degree_ != other.degree_)
        return degree_ <=> other.degree_;
    int w = std::max(width(), other.width());
    for (int i = 0; i < w; ++i) {
        int32_t a = exponent(i), b = other.exponent(i);
        if (a != b) return a <=> b;
    }
    return std::strong_ordering::equal;
}

size_t Monomial::hash() const {
    size_t h = 1469598103934665603ull;
    for (int32_t e : exps_) {
        h ^= static_cast<size_t>(static_cast<uint32_t>(e));
        h *= 1099511628211ull;
    }
    return h;
}

// ---------------------------------------------------------------------------
// Polynomial construction

Polynomial::Polynomial() : terms_(empty_terms()) {}

Polynomial Polynomial::constant(long value) { return constant(mpz_class(value)); }

namespace {
std::shared_ptr<const std::vector<Term>> make_constant_terms(const mpz_class& value) {
    auto v = std::make_shared<std::vector<Term>>();
    v->push_back(Term{Monomial(), value});
    return v;
}
}  // namespace

Polynomial Polynomial::constant(const mpz_class& value) {
    if (value == 0) return Polynomial();
    if (value == 1) {
        static const Polynomial one{make_constant_terms(1)};
        return one;
    }
    if (value == -1) {
        static const Polynomial minus_one{make_constant_terms(-1)};
        return minus_one;
    }
    return Polynomial(make_constant_terms(value));
}

Polynomial Polynomial::variable(int index, int32_t exp) {
    return monomial(Monomial::variable(index, exp), 1);
}

Polynomial Polynomial::monomial(Monomial m, mpz_class coeff) {
    if (coeff == 0) return Polynomial();
    auto v = std::make_shared<std::vector<Term>>();
    v->push_back(Term{std::move(m), std::move(coeff)});
    return Polynomial(std::move(v));
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
    std::map<Monomial, mpz_class, std::greater<Monomial>> acc;
    for (auto& t : terms) {
        if (t.coeff == 0) continue;
        auto it = acc.find(t.mono);
        if (it == acc.end()) {
            acc.emplace(std::move(t.mono), std::move(t.coeff));
        } else {
            it->second += t.coeff;
            if (it->second == 0) acc.erase(it);
        }
    }
    auto v = std::make_shared<std::vector<Term>>();
    v->reserve(acc.size());
    for (auto& [m, c] : acc) v->push_back(Term{m, c});
    return Polynomial(std::move(v));
}

bool Polynomial::is_one() const {
    return terms().size() == 1 && terms()[0].mono.is_one() && terms()[0].coeff == 1;
}

bool Polynomial::is_constant() const {
    return terms().empty() || (terms().size() == 1 && terms()[0].mono.is_one());
}

const Term& Polynomial::leading() const {
    if (is_zero()) throw invalid_argument_error("leading term of zero polynomial");
    return terms().front();
}

int32_t Polynomial::total_degree() const {
    return is_zero() ? 0 : terms().front().mono.degree();
}

int32_t Polynomial::degree_in(int var) const {
    int32_t d = 0;
    for (const auto& t : terms()) d = std::max(d, t.mono.exponent(var));
    return d;
}

int32_t Polynomial::min_exponent(int var) const {
    if (is_zero()) return 0;
    int32_t d = terms().front().mono.exponent(var);
    for (const auto& t : terms()) d = std::min(d, t.mono.exponent(var));
    return d;
}

std::vector<int> Polynomial::variables() const {
    int w = 0;
    for (const auto& t : terms()) w = std::max(w, t.mono.width());
    std::vector<int> out;
    for (int i = 0; i < w; ++i) {
        for (const auto& t : terms())
            if (t.mono.exponent(i) != 0) {
                out.push_back(i);
                break;
            }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Arithmetic

Polynomial Polynomial::operator+(const Polynomial& other) const {
    if (is_zero()) return other;
    if (other.is_zero()) return *this;
    auto v = std::make_shared<std::vector<Term>>();
    v->reserve(terms().size() + other.terms().size());
    auto a = terms().begin(), ae = terms().end();
    auto b = other.terms().begin(), be = other.terms().end();
    while (a != ae && b != be) {
        auto cmp = a->mono <=> b->mono;
        if (cmp == std::strong_ordering::greater) {
            v->push_back(*a++);
        } else if (cmp == std::strong_ordering::less) {
            v->push_back(*b++);
        } else {
            mpz_class c = a->coeff + b->coeff;
            if (c != 0) v->push_back(Term{a->mono, std::move(c)});
            ++a;
            ++b;
        }
    }
    v->insert(v->end(), a, ae);
    v->insert(v->end(), b, be);
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-() const {
    auto v = std::make_shared<std::vector<Term>>();
    v->reserve(terms().size());
    for (const auto& t : terms()) v->push_back(Term{t.mono, -t.coeff});
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    return *this + (-other);
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    if (is_zero() || other.is_zero()) return Polynomial();
    if (other.terms().size() == 1) {
        const Term& s = other.terms()[0];
        auto v = std::make_shared<std::vector<Term>>();
        v->reserve(terms().size());
        if (s.coeff == 1) {
            for (const auto& t : terms()) v->push_back(Term{t.mono * s.mono, t.coeff});
        } else {
            for (const auto& t : terms())
                v->push_back(Term{t.mono * s.mono, t.coeff * s.coeff});
        }
        return Polynomial(std::move(v));  // order is preserved by a monomial shift
    }
    if (terms().size() == 1) return other * *this;
    std::map<Monomial, mpz_class, std::greater<Monomial>> acc;
    for (const auto& a : terms())
        for (const auto& b : other.terms()) {
            Monomial m = a.mono * b.mono;
            auto it = acc.find(m);
            if (it == acc.end())
                acc.emplace(std::move(m), a.coeff * b.coeff);
            else
                it->second += a.coeff * b.coeff;
        }
    auto v = std::make_shared<std::vector<Term>>();
    v->reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) v->push_back(Term{m, c});
    return Polynomial(std::move(v));
}

Polynomial Polynomial::pow(uint32_t e) const {
    Polynomial result = constant(1);
    Polynomial base = *this;
    while (e) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

bool Polynomial::operator==(const Polynomial& other) const {
    if (terms_ == other.terms_) return true;
    if (terms().size() != other.terms().size()) return false;
    for (size_t i = 0; i < terms().size(); ++i) {
        if (terms()[i].mono != other.terms()[i].mono) return false;
        if (terms()[i].coeff != other.terms()[i].coeff) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Exact division

bool Polynomial::try_divexact(const Polynomial& num, const Polynomial& div,
                              Polynomial& quot) {
    if (div.is_zero()) throw division_by_zero("polynomial division by zero");
    if (num.is_zero()) {
        quot = Polynomial();
        return true;
    }
    if (div.terms().size() == 1) {
        const Term& d = div.terms()[0];
        auto v = std::make_shared<std::vector<Term>>();
        v->reserve(num.terms().size());
        for (const auto& t : num.terms()) {
            if (!d.mono.divides(t.mono)) return false;
            mpz_class qc, rem;
            mpz_tdiv_qr(qc.get_mpz_t(), rem.get_mpz_t(), t.coeff.get_mpz_t(),
                        d.coeff.get_mpz_t());
            if (rem != 0) return false;
            v->push_back(Term{d.mono.divide_into(t.mono), std::move(qc)});
        }
        quot = Polynomial(std::move(v));
        return true;
    }
    std::vector<Term> qterms;
    Polynomial r = num;
    const Term& dl = div.leading();
    while (!r.is_zero()) {
        const Term& rl = r.leading();
        if (!dl.mono.divides(rl.mono)) return false;
        mpz_class qc, rem;
        mpz_tdiv_qr(qc.get_mpz_t(), rem.get_mpz_t(), rl.coeff.get_mpz_t(),
                    dl.coeff.get_mpz_t());
        if (rem != 0) return false;
        Term qt{dl.mono.divide_into(rl.mono), qc};
        r = r - (div * monomial(qt.mono, qt.coeff));
        qterms.push_back(std::move(qt));
    }
    quot = from_terms(std::move(qterms));
    return true;
}

Polynomial Polynomial::divexact(const Polynomial& num, const Polynomial& div) {
    Polynomial q;
    if (!try_divexact(num, div, q))
        throw invalid_argument_error("polynomial division is not exact");
    return q;
}

// ---------------------------------------------------------------------------
// Content and gcd

Monomial Polynomial::monomial_content() const {
    if (is_zero()) return Monomial();
    Monomial g = terms().front().mono;
    for (const auto& t : terms()) {
        if (g.is_one()) break;
        g = Monomial::gcd(g, t.mono);
    }
    return g;
}

bool Polynomial::is_unit_monomial() const {
    return terms().size() == 1 && terms()[0].coeff == 1;
}

mpz_class Polynomial::content() const {
    mpz_class g = 0;
    for (const auto& t : terms()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
        if (g == 1) break;
    }
    if (!is_zero() && leading().coeff < 0) g = -g;
    return g;
}

namespace {

// Divides every term of p by the monomial m (must divide them all).
Polynomial shift_down(const Polynomial& p, const Monomial& m) {
    if (m.is_one()) return p;
    std::vector<Term> ts;
    ts.reserve(p.terms().size());
    for (const auto& t : p.terms()) ts.push_back(Term{m.divide_into(t.mono), t.coeff});
    return Polynomial::from_terms(std::move(ts));
}

Monomial common_monomial(const Polynomial& p) {
    Monomial g = p.terms().front().mono;
    for (const auto& t : p.terms()) {
        if (g.is_one()) break;
        g = Monomial::gcd(g, t.mono);
    }
    return g;
}

// Coefficients of p viewed as a univariate polynomial in x, slot k holding
// the coefficient of x^k with x struck from the monomials.
std::vector<Polynomial> coefficients_in(const Polynomial& p, int x) {
    std::vector<std::vector<Term>> slices(p.degree_in(x) + 1);
    Monomial unused;
    for (const auto& t : p.terms()) {
        int32_t e = t.mono.exponent(x);
        Monomial rest = Monomial::variable(x, e).divide_into(t.mono);
        slices[e].push_back(Term{std::move(rest), t.coeff});
    }
    std::vector<Polynomial> out;
    out.reserve(slices.size());
    for (auto& s : slices) out.push_back(Polynomial::from_terms(std::move(s)));
    return out;
}

Polynomial assemble_in(const std::vector<Polynomial>& coeffs, int x) {
    std::vector<Term> ts;
    for (size_t e = 0; e < coeffs.size(); ++e) {
        Monomial xe = Monomial::variable(x, static_cast<int32_t>(e));
        for (const auto& t : coeffs[e].terms()) ts.push_back(Term{t.mono * xe, t.coeff});
    }
    return Polynomial::from_terms(std::move(ts));
}

Polynomial leading_coefficient_in(const Polynomial& p, int x) {
    int32_t d = p.degree_in(x);
    std::vector<Term> ts;
    for (const auto& t : p.terms())
        if (t.mono.exponent(x) == d)
            ts.push_back(Term{Monomial::variable(x, d).divide_into(t.mono), t.coeff});
    return Polynomial::from_terms(std::move(ts));
}

// gcd of the x-coefficients of p.
Polynomial content_in(const Polynomial& p, int x) {
    Polynomial g;
    for (const auto& c : coefficients_in(p, x)) {
        if (c.is_zero()) continue;
        g = Polynomial::gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

// Pseudo-remainder of a by b with respect to x (deg_x a >= deg_x b > 0);
// multiplies by powers of lc_x(b), which the primitive PRS strips again.
Polynomial pseudo_rem(Polynomial a, const Polynomial& b, int x) {
    const int32_t db = b.degree_in(x);
    const Polynomial lcb = leading_coefficient_in(b, x);
    while (!a.is_zero() && a.degree_in(x) >= db) {
        const int32_t da = a.degree_in(x);
        Polynomial lca = leading_coefficient_in(a, x);
        Polynomial shift = Polynomial::variable(x, da - db);
        a = a * lcb - b * (lca * shift);
    }
    return a;
}

// ---------------------------------------------------------------------------
// Heuristic gcd (evaluate at a large integer, integer gcd, digit
// reconstruction in the balanced base, verify by exact division); falls back
// to the primitive PRS when the evaluation point is unlucky.

mpz_class coefficient_height(const Polynomial& p) {
    mpz_class h = 0;
    for (const auto& t : p.terms()) {
        mpz_class a = abs(t.coeff);
        if (a > h) h = a;
    }
    return h;
}

// p with variable x evaluated at the integer xi.
Polynomial eval_var(const Polynomial& p, int x, const mpz_class& xi) {
    std::vector<Term> ts;
    ts.reserve(p.terms().size());
    for (const auto& t : p.terms()) {
        int32_t e = t.mono.exponent(x);
        mpz_class c = t.coeff;
        if (e > 0) {
            mpz_class pw;
            mpz_pow_ui(pw.get_mpz_t(), xi.get_mpz_t(), e);
            c *= pw;
        }
        ts.push_back(Term{Monomial::variable(x, e).divide_into(t.mono), std::move(c)});
    }
    return Polynomial::from_terms(std::move(ts));
}

// balanced remainder in (-xi/2, xi/2]
mpz_class smod(const mpz_class& c, const mpz_class& xi) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), xi.get_mpz_t());
    if (r * 2 > xi) r -= xi;
    return r;
}

// Reconstructs G with G(x = xi) = g by balanced base-xi digits.
Polynomial reconstruct_poly(Polynomial g, int x, const mpz_class& xi) {
    std::vector<Term> out;
    int32_t e = 0;
    while (!g.is_zero()) {
        std::vector<Term> digit;
        std::vector<Term> rest;
        for (const auto& t : g.terms()) {
            mpz_class d = smod(t.coeff, xi);
            if (d != 0)
                out.push_back(Term{t.mono * Monomial::variable(x, e), d});
            mpz_class carry = (t.coeff - d) / xi;
            if (carry != 0) rest.push_back(Term{t.mono, std::move(carry)});
        }
        g = Polynomial::from_terms(std::move(rest));
        ++e;
        if (e > 4096) return Polynomial();  // runaway; treat as failure
    }
    return Polynomial::from_terms(std::move(out));
}

// Integer contents are split off at entry and multiplied back at exit, so
// the gcd of the primitive parts is itself primitive and the reconstructed
// candidate may always be primitivized before the division check.
std::optional<Polynomial> heuristic_gcd(const Polynomial& a_in, const Polynomial& b_in,
                                        int depth = 0) {
    if (depth > 8) return std::nullopt;
    mpz_class ca = a_in.content(), cb = b_in.content();
    if (ca < 0) ca = -ca;
    if (cb < 0) cb = -cb;
    mpz_class cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    Polynomial a = ca == 1 ? a_in : Polynomial::divexact(a_in, Polynomial::constant(ca));
    Polynomial b = cb == 1 ? b_in : Polynomial::divexact(b_in, Polynomial::constant(cb));

    std::vector<int> vars = a.variables();
    for (int v : b.variables())
        if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    if (vars.empty()) return Polynomial::constant(cg);

    int x = vars.back();
    mpz_class ha = coefficient_height(a), hb = coefficient_height(b);
    mpz_class xi = 2 * (ha < hb ? ha : hb) + 2;
    if (xi < 2) xi = 2;
    for (int attempt = 0; attempt < 6; ++attempt) {
        Polynomial av = eval_var(a, x, xi);
        Polynomial bv = eval_var(b, x, xi);
        if (!av.is_zero() && !bv.is_zero()) {
            auto sub = heuristic_gcd(av, bv, depth + 1);
            if (sub) {
                Polynomial g = reconstruct_poly(*sub, x, xi);
                if (!g.is_zero()) {
                    mpz_class c = g.content();
                    if (c != 1 && c != 0 && c != -1)
                        g = Polynomial::divexact(g, Polynomial::constant(c));
                    Polynomial dummy;
                    if (Polynomial::try_divexact(a, g, dummy) &&
                        Polynomial::try_divexact(b, g, dummy))
                        return g * Polynomial::constant(cg);
                }
            }
        }
        xi = xi * 73794 / 27011 + 1;
    }
    return std::nullopt;
}

// Main variable heuristic: among the variables occurring in both inputs,
// the one of smallest max degree; -1 when the inputs share no variable.
int choose_main_variable(const Polynomial& a, const Polynomial& b) {
    int best = -1;
    int32_t best_deg = 0;
    for (int v : a.variables()) {
        if (b.degree_in(v) == 0) continue;
        int32_t d = std::max(a.degree_in(v), b.degree_in(v));
        if (best < 0 || d < best_deg) {
            best = v;
            best_deg = d;
        }
    }
    return best;
}

Polynomial sign_normalized(Polynomial p) {
    if (!p.is_zero() && p.leading().coeff < 0) return -p;
    return p;
}

}  // namespace

namespace {

// gcd when one side is a single term: shared integer content times the
// componentwise-min monomial against every term of the other side.
Polynomial monomial_gcd_path(const Term& t, const Polynomial& other) {
    mpz_class c = t.coeff < 0 ? mpz_class(-t.coeff) : t.coeff;
    Monomial m = t.mono;
    for (const auto& o : other.terms()) {
        mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), o.coeff.get_mpz_t());
        m = Monomial::gcd(m, o.mono);
        if (c == 1 && m.is_one()) break;
    }
    return Polynomial::monomial(std::move(m), std::move(c));
}

}  // namespace

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return sign_normalized(b);
    if (b.is_zero()) return sign_normalized(a);
    if (a.is_one() || b.is_one()) return constant(1);
    if (a.is_monomial()) return monomial_gcd_path(a.terms()[0], b);
    if (b.is_monomial()) return monomial_gcd_path(b.terms()[0], a);
    if (a == b) return sign_normalized(a);

    mpz_class ca = a.content(), cb = b.content();
    mpz_class cg;
    mpz_gcd(cg.get_mpz_t(), cg.get_mpz_t(), ca.get_mpz_t());
    mpz_gcd(cg.get_mpz_t(), cg.get_mpz_t(), cb.get_mpz_t());

    Monomial ma = common_monomial(a), mb = common_monomial(b);
    Monomial mg = Monomial::gcd(ma, mb);

    Polynomial pa = shift_down(a, ma);
    Polynomial pb = shift_down(b, mb);
    if (ca != 1) pa = divexact(pa, constant(ca));
    if (cb != 1) pb = divexact(pb, constant(cb));

    Polynomial core = constant(1);
    if (!pa.is_constant() && !pb.is_constant()) {
        int x = choose_main_variable(pa, pb);
        if (x < 0) {
            // No shared variable: coprime apart from contents.
            core = constant(1);
        } else if (auto heu = heuristic_gcd(pa, pb)) {
            core = sign_normalized(*heu);
        } else {
            Polynomial conta = content_in(pa, x);
            Polynomial contb = content_in(pb, x);
            Polynomial cont = gcd(conta, contb);
            Polynomial A = divexact(pa, conta);
            Polynomial B = divexact(pb, contb);
            if (A.degree_in(x) < B.degree_in(x)) std::swap(A, B);
            while (true) {
                if (B.is_zero()) {
                    core = A;
                    break;
                }
                if (B.degree_in(x) == 0) {
                    core = constant(1);
                    break;
                }
                Polynomial r = pseudo_rem(A, B, x);
                if (!r.is_zero()) {
                    Polynomial rc = content_in(r, x);
                    r = divexact(r, rc);
                }
                A = B;
                B = r;
            }
            core = sign_normalized(core);
            mpz_class cc = core.content();
            if (cc != 1 && cc != 0) core = divexact(core, constant(cc));
            core = core * cont;
        }
    }

    Polynomial result = core * monomial(mg, cg);
    return sign_normalized(result);
}

// ---------------------------------------------------------------------------
// Text form

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    const ParamSet& ps = ParamSet::global();
    std::string out;
    bool first = true;
    for (const auto& t : terms()) {
        mpz_class c = t.coeff;
        if (first) {
            if (c < 0) {
                out += "-";
                c = -c;
            }
            first = false;
        } else {
            if (c < 0) {
                out += "-";
                c = -c;
            } else {
                out += "+";
            }
        }
        std::string vars;
        for (int i = 0; i < t.mono.width(); ++i) {
            int32_t e = t.mono.exponent(i);
            if (e == 0) continue;
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
    return out;
}

}  // namespace uqaw
