#include "uqaw/uq.hpp"

#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "uqaw/errors.hpp"

namespace uqaw {

size_t UMonomial::hash() const {
    size_t h = 1469598103934665603ull;
    for (int32_t v : {f, k, e}) {
        h ^= static_cast<size_t>(static_cast<uint32_t>(v));
        h *= 1099511628211ull;
    }
    return h;
}

UElement UElement::one() { return monomial(UMonomial{}, Scalar(1)); }

UElement UElement::monomial(UMonomial m, Scalar c) {
    UElement r;
    if (!c.is_zero()) r.terms_.emplace(m, std::move(c));
    return r;
}

UElement UElement::E() { return monomial(UMonomial{0, 0, 1}, Scalar(1)); }
UElement UElement::F() { return monomial(UMonomial{1, 0, 0}, Scalar(1)); }
UElement UElement::K() { return monomial(UMonomial{0, 1, 0}, Scalar(1)); }
UElement UElement::Kinv() { return monomial(UMonomial{0, -1, 0}, Scalar(1)); }

Scalar UElement::coeff(const UMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

int32_t UElement::max_word_length() const {
    int32_t len = 0;
    for (const auto& [m, c] : terms_) len = std::max(len, m.word_length());
    return len;
}

void UElement::add_term(const UMonomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

UElement UElement::operator+(const UElement& other) const {
    UElement r = *this;
    for (const auto& [m, c] : other.terms_) r.add_term(m, c);
    return r;
}

UElement UElement::operator-() const {
    UElement r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

UElement UElement::operator-(const UElement& other) const { return *this + (-other); }

UElement UElement::scaled(const Scalar& c) const {
    if (c.is_zero()) return UElement();
    UElement r;
    for (const auto& [m, s] : terms_) {
        Scalar v = s * c;
        if (!v.is_zero()) r.terms_.emplace(m, std::move(v));
    }
    return r;
}

// ---------------------------------------------------------------------------
// Right multiplication by single letters.
//
// The only nontrivial step is passing E^c over F.  The cached elements
// ecf[c] hold the normal form of E^c F, from
//   E^c F = (E^{c-1} F) E + [1/(q-q^-1)] (q^{-2(c-1)} K - q^{2(c-1)} K^-1) E^{c-1}.

namespace {

std::mutex& ecf_mutex() {
    static std::mutex m;
    return m;
}

const UElement& ecf(int32_t c) {
    static std::vector<UElement> cache;
    std::lock_guard lock(ecf_mutex());
    if (cache.empty()) cache.push_back(UElement::F());  // E^0 F
    while (static_cast<int32_t>(cache.size()) <= c) {
        int32_t n = static_cast<int32_t>(cache.size());  // computing E^n F
        Scalar kappa = Scalar(1) / (Scalar::q() - Scalar::q().inverse());
        UElement r;
        for (const auto& [m, s] : cache[n - 1].terms())
            r.add_term(UMonomial{m.f, m.k, m.e + 1}, s);
        r.add_term(UMonomial{0, 1, n - 1}, kappa * Scalar::q().pow(-2 * (n - 1)));
        r.add_term(UMonomial{0, -1, n - 1}, -kappa * Scalar::q().pow(2 * (n - 1)));
        cache.push_back(std::move(r));
    }
    return cache[c];
}

void accumulate_right_letter(UElement& out, const UMonomial& m, const Scalar& c,
                             ULetter letter) {
    switch (letter) {
        case ULetter::E:
            out.add_term(UMonomial{m.f, m.k, m.e + 1}, c);
            return;
        case ULetter::K:
            out.add_term(UMonomial{m.f, m.k + 1, m.e}, c * Scalar::q().pow(-2 * m.e));
            return;
        case ULetter::Kinv:
            out.add_term(UMonomial{m.f, m.k - 1, m.e}, c * Scalar::q().pow(2 * m.e));
            return;
        case ULetter::F: {
            // F^f K^k (E^e F) with K^k commuted past the one F in each term.
            const UElement& w = ecf(m.e);
            for (const auto& [wm, wc] : w.terms()) {
                Scalar coeff = c * wc;
                if (m.k != 0 && wm.f != 0)
                    coeff = coeff * Scalar::q().pow(-2 * m.k * wm.f);
                out.add_term(UMonomial{m.f + wm.f, m.k + wm.k, wm.e}, coeff);
            }
            return;
        }
    }
}

UElement right_multiply_letter(const UElement& x, ULetter letter) {
    UElement out;
    for (const auto& [m, c] : x.terms()) accumulate_right_letter(out, m, c, letter);
    return out;
}

}  // namespace

namespace {

UElement compute_monomial_product(const UMonomial& m1, const UMonomial& m2) {
    // (F^f1 K^k1 E^e1)(F^f2 K^k2 E^e2): pass E^e1 over F^f2 letter by letter,
    // then absorb K^k2 and E^e2 in one step.
    UElement acc = UElement::monomial(m1, Scalar(1));
    for (int32_t i = 0; i < m2.f; ++i) acc = right_multiply_letter(acc, ULetter::F);
    UElement out;
    for (const auto& [m, c] : acc.terms()) {
        Scalar coeff = c;
        if (m2.k != 0 && m.e != 0) coeff = coeff * Scalar::q().pow(-2 * m2.k * m.e);
        out.add_term(UMonomial{m.f, m.k + m2.k, m.e + m2.e}, coeff);
    }
    return out;
}

struct UMonomialPair {
    UMonomial a, b;
    bool operator==(const UMonomialPair&) const = default;
};

struct UMonomialPairHash {
    size_t operator()(const UMonomialPair& p) const {
        return p.a.hash() * 1000003ull ^ p.b.hash();
    }
};

}  // namespace

const UElement& u_monomial_product(const UMonomial& a, const UMonomial& b) {
    static std::unordered_map<UMonomialPair, std::unique_ptr<const UElement>,
                              UMonomialPairHash>
        cache;
    static std::shared_mutex mutex;
    UMonomialPair key{a, b};
    {
        std::shared_lock lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return *it->second;
    }
    auto value = std::make_unique<const UElement>(compute_monomial_product(a, b));
    std::unique_lock lock(mutex);
    auto [it, inserted] = cache.try_emplace(key, std::move(value));
    return *it->second;
}

UElement u_multiply(const UElement& x, const UElement& y) {
    UElement out;
    for (const auto& [m1, c1] : x.terms())
        for (const auto& [m2, c2] : y.terms()) {
            const UElement& p = u_monomial_product(m1, m2);
            Scalar c = c1 * c2;
            for (const auto& [m, pc] : p.terms()) out.add_term(m, pc * c);
        }
    return out;
}

UElement UElement::operator*(const UElement& other) const {
    return u_multiply(*this, other);
}

UElement u_pow(const UElement& x, uint32_t e) {
    UElement r = UElement::one();
    for (uint32_t i = 0; i < e; ++i) r = u_multiply(r, x);
    return r;
}

// ---------------------------------------------------------------------------
// Word kernel

UElement normalize_word(const UWordLetters& word, RewriteStrategy strategy) {
    const Scalar kappa = Scalar(1) / (Scalar::q() - Scalar::q().inverse());
    const Scalar qm2 = Scalar::q().pow(-2);
    const Scalar qp2 = Scalar::q().pow(2);

    struct State {
        UWordLetters w;
        Scalar c;
    };
    std::vector<State> stack;
    stack.push_back({word, Scalar(1)});
    UElement out;

    auto is_redex = [](ULetter a, ULetter b) {
        if (a == ULetter::K && b == ULetter::Kinv) return true;
        if (a == ULetter::Kinv && b == ULetter::K) return true;
        if (a == ULetter::E && b != ULetter::E) return true;  // E before F/K/Kinv
        if ((a == ULetter::K || a == ULetter::Kinv) && b == ULetter::F) return true;
        return false;
    };

    while (!stack.empty()) {
        State st = std::move(stack.back());
        stack.pop_back();
        const UWordLetters& w = st.w;

        int redex = -1;
        if (strategy == RewriteStrategy::Leftmost) {
            for (size_t i = 0; i + 1 < w.size(); ++i)
                if (is_redex(w[i], w[i + 1])) {
                    redex = static_cast<int>(i);
                    break;
                }
        } else {
            for (size_t i = w.size(); i-- > 1;)
                if (is_redex(w[i - 1], w[i])) {
                    redex = static_cast<int>(i - 1);
                    break;
                }
        }

        if (redex < 0) {
            UMonomial m;
            for (ULetter l : w) {
                switch (l) {
                    case ULetter::F: m.f += 1; break;
                    case ULetter::K: m.k += 1; break;
                    case ULetter::Kinv: m.k -= 1; break;
                    case ULetter::E: m.e += 1; break;
                }
            }
            out.add_term(m, st.c);
            continue;
        }

        size_t i = static_cast<size_t>(redex);
        ULetter a = w[i], b = w[i + 1];
        auto rest_without_pair = [&]() {
            UWordLetters r;
            r.reserve(w.size() - 2);
            r.insert(r.end(), w.begin(), w.begin() + i);
            r.insert(r.end(), w.begin() + i + 2, w.end());
            return r;
        };
        auto swapped = [&]() {
            UWordLetters r = w;
            std::swap(r[i], r[i + 1]);
            return r;
        };
        auto replaced_by = [&](ULetter l) {
            UWordLetters r;
            r.reserve(w.size() - 1);
            r.insert(r.end(), w.begin(), w.begin() + i);
            r.push_back(l);
            r.insert(r.end(), w.begin() + i + 2, w.end());
            return r;
        };

        if ((a == ULetter::K && b == ULetter::Kinv) ||
            (a == ULetter::Kinv && b == ULetter::K)) {
            stack.push_back({rest_without_pair(), st.c});
        } else if (a == ULetter::E && b == ULetter::F) {
            // EF = FE + (K - K^-1)/(q - q^-1)
            stack.push_back({swapped(), st.c});
            stack.push_back({replaced_by(ULetter::K), st.c * kappa});
            stack.push_back({replaced_by(ULetter::Kinv), -(st.c * kappa)});
        } else if (a == ULetter::E && b == ULetter::K) {
            stack.push_back({swapped(), st.c * qm2});
        } else if (a == ULetter::E && b == ULetter::Kinv) {
            stack.push_back({swapped(), st.c * qp2});
        } else if (a == ULetter::K && b == ULetter::F) {
            stack.push_back({swapped(), st.c * qm2});
        } else if (a == ULetter::Kinv && b == ULetter::F) {
            stack.push_back({swapped(), st.c * qp2});
        } else {
            throw error("internal: unhandled redex");
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Expression evaluation

std::optional<UElement> UqTraits::letter(const std::string& name) {
    if (name == "E") return UElement::E();
    if (name == "F") return UElement::F();
    if (name == "K") return UElement::K();
    if (name == "Kinv") return UElement::Kinv();
    return std::nullopt;
}

std::optional<UElement> UqTraits::letter_power(const std::string& name, long e) {
    if (name == "K")
        return UElement::monomial(UMonomial{0, static_cast<int32_t>(e), 0}, Scalar(1));
    if (name == "Kinv")
        return UElement::monomial(UMonomial{0, static_cast<int32_t>(-e), 0}, Scalar(1));
    if ((name == "E" || name == "F") && e >= 0) {
        UMonomial m;
        if (name == "E") m.e = static_cast<int32_t>(e);
        else m.f = static_cast<int32_t>(e);
        return UElement::monomial(m, Scalar(1));
    }
    return std::nullopt;
}

UElement u_normal_form(const ExprPtr& expr, long word_cap) {
    if (word_cap <= 0) word_cap = default_word_cap();
    return eval_algebra_expression<UqTraits>(expr, word_cap);
}

UElement u_normal_form(const std::string& expr, long word_cap) {
    return u_normal_form(parse_expression(expr), word_cap);
}

UElement u_casimir() {
    Scalar q = Scalar::q();
    Scalar w = (q - q.inverse()) * (q - q.inverse());
    UElement r;
    r.add_term(UMonomial{1, 0, 1}, w);
    r.add_term(UMonomial{0, 1, 0}, q);
    r.add_term(UMonomial{0, -1, 0}, q.inverse());
    return r;
}

std::map<int32_t, UElement> u_grade(const UElement& x) {
    std::map<int32_t, UElement> out;
    for (const auto& [m, c] : x.terms()) out[m.degree()].add_term(m, c);
    return out;
}

UElement u_casimir_pow(uint32_t i) {
    static std::vector<UElement> cache;
    static std::mutex m;
    std::lock_guard lock(m);
    if (cache.empty()) cache.push_back(UElement::one());
    while (cache.size() <= i) cache.push_back(u_multiply(cache.back(), u_casimir()));
    return cache[i];
}

UElement u_central_basis_element(int32_t i, int32_t h, int32_t n) {
    // Lambda^i K^h E^n for n >= 0, Lambda^i K^h F^|n| for n < 0.
    UElement khx;
    if (n >= 0) {
        khx = UElement::monomial(UMonomial{0, h, n}, Scalar(1));
    } else {
        khx = UElement::monomial(UMonomial{-n, h, 0}, Scalar::q().pow(2 * h * n));
    }
    return u_multiply(u_casimir_pow(static_cast<uint32_t>(i)), khx);
}

CentralForm u_central_form(const UElement& x, int32_t n) {
    for (const auto& [m, c] : x.terms())
        if (m.degree() != n)
            throw not_homogeneous("element is not homogeneous of degree " +
                                  std::to_string(n));
    CentralForm out;
    UElement rest = x;
    while (!rest.is_zero()) {
        // Strip the terms of maximal Lambda-layer l = min(f, e); the basis
        // element Lambda^l K^h X^|n| has a unique PBW monomial at that layer,
        // so dividing by its coefficient and subtracting is triangular.
        int32_t l = 0;
        for (const auto& [m, c] : rest.terms()) l = std::max(l, std::min(m.f, m.e));
        UMonomial top;
        for (const auto& [m, c] : rest.terms())
            if (std::min(m.f, m.e) == l) {
                top = m;
                break;
            }
        UElement basis = u_central_basis_element(l, top.k, n);
        Scalar t = basis.coeff(top);
        if (t.is_zero()) throw error("internal: central basis top term missing");
        Scalar coeff = rest.coeff(top) / t;
        out[{l, top.k}] += coeff;
        rest = rest - basis.scaled(coeff);
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

UElement u_from_central_form(const CentralForm& form, int32_t n) {
    UElement r;
    for (const auto& [ih, c] : form)
        r = r + u_central_basis_element(ih.first, ih.second, n).scaled(c);
    return r;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

std::string umonomial_string(const UMonomial& m) {
    std::string out;
    auto piece = [&out](const char* letter, int32_t e) {
        if (e == 0) return;
        if (!out.empty()) out += "*";
        out += letter;
        if (e != 1) out += "^" + std::to_string(e);
    };
    piece("F", m.f);
    piece("K", m.k);
    piece("E", m.e);
    return out.empty() ? "1" : out;
}

}  // namespace

std::string UElement::pretty() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) out += " + ";
        first = false;
        std::string mono = umonomial_string(m);
        if (mono == "1") {
            if (c.is_integer() && c.num().leading().coeff >= 0) out += c.pretty();
            else out += "(" + c.pretty() + ")";
        } else if (c.is_one()) {
            out += mono;
        } else {
            out += "(" + c.pretty() + ")*" + mono;
        }
    }
    return out;
}

}  // namespace uqaw
