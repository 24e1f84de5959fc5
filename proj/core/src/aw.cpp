#include "uqaw/aw.hpp"

#include <chrono>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "uqaw/errors.hpp"

namespace uqaw {

size_t AWMonomial::hash() const {
    size_t h = 1469598103934665603ull;
    for (int32_t v : {a, b, c, r, s, t}) {
        h ^= static_cast<size_t>(static_cast<uint32_t>(v));
        h *= 1099511628211ull;
    }
    return h;
}

AWElement AWElement::one() { return monomial(AWMonomial{}, Scalar(1)); }

AWElement AWElement::monomial(AWMonomial m, Scalar c) {
    AWElement r;
    if (!c.is_zero()) r.terms_.emplace(m, std::move(c));
    return r;
}

AWElement AWElement::letter(AWLetter l) {
    AWMonomial m;
    switch (l) {
        case AWLetter::A: m.a = 1; break;
        case AWLetter::B: m.b = 1; break;
        case AWLetter::C: m.c = 1; break;
        case AWLetter::Alpha: m.r = 1; break;
        case AWLetter::Beta: m.s = 1; break;
        case AWLetter::Gamma: m.t = 1; break;
    }
    return monomial(m, Scalar(1));
}

Scalar AWElement::coeff(const AWMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

int32_t AWElement::max_word_length() const {
    int32_t len = 0;
    for (const auto& [m, c] : terms_) len = std::max(len, m.word_length());
    return len;
}

void AWElement::add_term(const AWMonomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AWElement AWElement::operator+(const AWElement& other) const {
    AWElement r = *this;
    for (const auto& [m, c] : other.terms_) r.add_term(m, c);
    return r;
}

AWElement AWElement::operator-() const {
    AWElement r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

AWElement AWElement::operator-(const AWElement& other) const { return *this + (-other); }

AWElement AWElement::scaled(const Scalar& c) const {
    if (c.is_zero()) return AWElement();
    AWElement r;
    for (const auto& [m, s] : terms_) {
        Scalar v = s * c;
        if (!v.is_zero()) r.terms_.emplace(m, std::move(v));
    }
    return r;
}

// ---------------------------------------------------------------------------
// Rewriting.  The derived rules, each algebraically forced by the central
// combinations defining alpha, beta, gamma:
//   BA = q^2 AB + q(q^2 - q^-2) C - q(q - q^-1) gamma
//   CA = q^-2 AC + q^-1 (q - q^-1) beta - q^-1 (q^2 - q^-2) B
//   CB = q^2 BC - q(q - q^-1) alpha + q(q^2 - q^-2) A

namespace {

struct RuleScalars {
    Scalar q2, qm2, q_qq, q_q2q2, qm_qq, qm_q2q2;
};

const RuleScalars& rules() {
    static const RuleScalars r = [] {
        Scalar q = Scalar::q();
        Scalar qq = q - q.inverse();
        Scalar q2q2 = q.pow(2) - q.pow(-2);
        return RuleScalars{q.pow(2),      q.pow(-2),          q * qq,
                           q * q2q2,      q.inverse() * qq,   q.inverse() * q2q2};
    }();
    return r;
}

struct MonoLetterKey {
    AWMonomial m;
    AWLetter l;
    bool operator==(const MonoLetterKey&) const = default;
};
struct MonoLetterHash {
    size_t operator()(const MonoLetterKey& k) const {
        return k.m.hash() * 31 + static_cast<size_t>(k.l);
    }
};

AWElement mono_mul_letter_right(const AWMonomial& m, AWLetter l);

const AWElement& mono_mul_letter_right_cached(const AWMonomial& m, AWLetter l) {
    static std::unordered_map<MonoLetterKey, std::unique_ptr<const AWElement>,
                              MonoLetterHash>
        cache;
    static std::shared_mutex mutex;
    MonoLetterKey key{m, l};
    {
        std::shared_lock lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return *it->second;
    }
    auto value = std::make_unique<const AWElement>(mono_mul_letter_right(m, l));
    std::unique_lock lock(mutex);
    auto [it, inserted] = cache.try_emplace(key, std::move(value));
    return *it->second;
}

AWElement elem_mul_letter_right(const AWElement& x, AWLetter l) {
    AWElement out;
    for (const auto& [m, c] : x.terms()) {
        const AWElement& p = mono_mul_letter_right_cached(m, l);
        for (const auto& [pm, pc] : p.terms()) out.add_term(pm, pc * c);
    }
    return out;
}

AWElement mono_mul_letter_right(const AWMonomial& m, AWLetter l) {
    const RuleScalars& R = rules();
    AWMonomial n = m;
    switch (l) {
        case AWLetter::Alpha: n.r += 1; return AWElement::monomial(n, Scalar(1));
        case AWLetter::Beta: n.s += 1; return AWElement::monomial(n, Scalar(1));
        case AWLetter::Gamma: n.t += 1; return AWElement::monomial(n, Scalar(1));
        case AWLetter::C: n.c += 1; return AWElement::monomial(n, Scalar(1));
        case AWLetter::B: {
            if (m.c == 0) {
                n.b += 1;
                return AWElement::monomial(n, Scalar(1));
            }
            // ... C^c B = ... C^{c-1} (CB)
            AWMonomial head = m;
            head.c -= 1;
            AWElement viaB = elem_mul_letter_right(
                mono_mul_letter_right_cached(head, AWLetter::B), AWLetter::C);
            AWElement viaA = mono_mul_letter_right_cached(head, AWLetter::A);
            AWMonomial withAlpha = head;
            withAlpha.r += 1;
            AWElement out = viaB.scaled(R.q2);
            out = out + AWElement::monomial(withAlpha, -R.q_qq);
            out = out + viaA.scaled(R.q_q2q2);
            return out;
        }
        case AWLetter::A: {
            if (m.b == 0 && m.c == 0) {
                n.a += 1;
                return AWElement::monomial(n, Scalar(1));
            }
            if (m.c > 0) {
                // ... C^c A = ... C^{c-1} (CA)
                AWMonomial head = m;
                head.c -= 1;
                AWElement viaA = elem_mul_letter_right(
                    mono_mul_letter_right_cached(head, AWLetter::A), AWLetter::C);
                AWElement viaB = mono_mul_letter_right_cached(head, AWLetter::B);
                AWMonomial withBeta = head;
                withBeta.s += 1;
                AWElement out = viaA.scaled(R.qm2);
                out = out + AWElement::monomial(withBeta, R.qm_qq);
                out = out - viaB.scaled(R.qm_q2q2);
                return out;
            }
            // ... B^b A = ... B^{b-1} (BA)
            AWMonomial head = m;
            head.b -= 1;
            AWElement viaA = elem_mul_letter_right(
                mono_mul_letter_right_cached(head, AWLetter::A), AWLetter::B);
            AWMonomial withC = head;
            withC.c += 1;
            AWMonomial withGamma = head;
            withGamma.t += 1;
            AWElement out = viaA.scaled(R.q2);
            out = out + AWElement::monomial(withC, R.q_q2q2);
            out = out + AWElement::monomial(withGamma, -R.q_qq);
            return out;
        }
    }
    throw error("internal: unhandled letter");
}

}  // namespace

AWElement aw_mul_letter_right(const AWElement& x, AWLetter l) {
    return elem_mul_letter_right(x, l);
}

AWElement aw_mul_letter_left(AWLetter l, const AWElement& x) {
    const RuleScalars& R = rules();
    AWElement out;
    for (const auto& [m, c] : x.terms()) {
        switch (l) {
            case AWLetter::A: {
                AWMonomial n = m;
                n.a += 1;
                out.add_term(n, c);
                break;
            }
            case AWLetter::Alpha: {
                AWMonomial n = m;
                n.r += 1;
                out.add_term(n, c);
                break;
            }
            case AWLetter::Beta: {
                AWMonomial n = m;
                n.s += 1;
                out.add_term(n, c);
                break;
            }
            case AWLetter::Gamma: {
                AWMonomial n = m;
                n.t += 1;
                out.add_term(n, c);
                break;
            }
            case AWLetter::B: {
                if (m.a == 0) {
                    AWMonomial n = m;
                    n.b += 1;
                    out.add_term(n, c);
                    break;
                }
                // B A^a ... = (BA) A^{a-1} ...
                AWMonomial tail = m;
                tail.a -= 1;
                AWElement t1 = aw_mul_letter_left(
                    AWLetter::A,
                    aw_mul_letter_left(AWLetter::B,
                                       AWElement::monomial(tail, Scalar(1))));
                AWElement t2 = aw_mul_letter_left(AWLetter::C,
                                                  AWElement::monomial(tail, Scalar(1)));
                AWMonomial withGamma = tail;
                withGamma.t += 1;
                out = out + t1.scaled(c * R.q2) + t2.scaled(c * R.q_q2q2) +
                      AWElement::monomial(withGamma, -(c * R.q_qq));
                break;
            }
            case AWLetter::C: {
                if (m.a == 0 && m.b == 0) {
                    AWMonomial n = m;
                    n.c += 1;
                    out.add_term(n, c);
                    break;
                }
                if (m.a > 0) {
                    // C A^a ... = (CA) A^{a-1} ...
                    AWMonomial tail = m;
                    tail.a -= 1;
                    AWElement t1 = aw_mul_letter_left(
                        AWLetter::A, aw_mul_letter_left(
                                         AWLetter::C,
                                         AWElement::monomial(tail, Scalar(1))));
                    AWElement t2 = aw_mul_letter_left(
                        AWLetter::B, AWElement::monomial(tail, Scalar(1)));
                    AWMonomial withBeta = tail;
                    withBeta.s += 1;
                    out = out + t1.scaled(c * R.qm2) +
                          AWElement::monomial(withBeta, c * R.qm_qq) -
                          t2.scaled(c * R.qm_q2q2);
                    break;
                }
                // C B^b ... = (CB) B^{b-1} ...
                AWMonomial tail = m;
                tail.b -= 1;
                AWElement t1 = aw_mul_letter_left(
                    AWLetter::B,
                    aw_mul_letter_left(AWLetter::C,
                                       AWElement::monomial(tail, Scalar(1))));
                AWElement t2 = aw_mul_letter_left(AWLetter::A,
                                                  AWElement::monomial(tail, Scalar(1)));
                AWMonomial withAlpha = tail;
                withAlpha.r += 1;
                out = out + t1.scaled(c * R.q2) +
                      AWElement::monomial(withAlpha, -(c * R.q_qq)) +
                      t2.scaled(c * R.q_q2q2);
                break;
            }
        }
    }
    return out;
}

AWElement aw_multiply(const AWElement& x, const AWElement& y) {
    AWElement out;
    for (const auto& [m2, c2] : y.terms()) {
        AWElement acc = x.scaled(c2);
        for (int32_t i = 0; i < m2.a; ++i) acc = elem_mul_letter_right(acc, AWLetter::A);
        for (int32_t i = 0; i < m2.b; ++i) acc = elem_mul_letter_right(acc, AWLetter::B);
        for (int32_t i = 0; i < m2.c; ++i) acc = elem_mul_letter_right(acc, AWLetter::C);
        // centrals: bump exponents directly
        for (const auto& [m, c] : acc.terms()) {
            AWMonomial n = m;
            n.r += m2.r;
            n.s += m2.s;
            n.t += m2.t;
            out.add_term(n, c);
        }
    }
    return out;
}

AWElement AWElement::operator*(const AWElement& other) const {
    return aw_multiply(*this, other);
}

AWElement aw_pow(const AWElement& x, uint32_t e) {
    AWElement r = AWElement::one();
    for (uint32_t i = 0; i < e; ++i) r = aw_multiply(r, x);
    return r;
}

std::optional<AWElement> AwTraits::letter(const std::string& name) {
    if (name == "A") return AWElement::A();
    if (name == "B") return AWElement::B();
    if (name == "C") return AWElement::C();
    if (name == "alpha") return AWElement::alpha();
    if (name == "beta") return AWElement::beta();
    if (name == "gamma") return AWElement::gamma();
    return std::nullopt;
}

std::optional<AWElement> AwTraits::letter_power(const std::string& name, long e) {
    if (e < 0) return std::nullopt;
    AWMonomial m;
    if (name == "A") m.a = static_cast<int32_t>(e);
    else if (name == "B") m.b = static_cast<int32_t>(e);
    else if (name == "C") m.c = static_cast<int32_t>(e);
    else if (name == "alpha") m.r = static_cast<int32_t>(e);
    else if (name == "beta") m.s = static_cast<int32_t>(e);
    else if (name == "gamma") m.t = static_cast<int32_t>(e);
    else return std::nullopt;
    return AWElement::monomial(m, Scalar(1));
}

AWElement aw_normal_form(const ExprPtr& expr, long word_cap) {
    if (word_cap <= 0) word_cap = default_word_cap();
    return eval_algebra_expression<AwTraits>(expr, word_cap);
}

AWElement aw_normal_form(const std::string& expr, long word_cap) {
    return aw_normal_form(parse_expression(expr), word_cap);
}

AWElement aw_casimir() {
    Scalar q = Scalar::q();
    AWElement r;
    r.add_term(AWMonomial{1, 1, 1, 0, 0, 0}, q);
    r.add_term(AWMonomial{2, 0, 0, 0, 0, 0}, q.pow(2));
    r.add_term(AWMonomial{0, 2, 0, 0, 0, 0}, q.pow(-2));
    r.add_term(AWMonomial{0, 0, 2, 0, 0, 0}, q.pow(2));
    r.add_term(AWMonomial{1, 0, 0, 1, 0, 0}, -q);
    r.add_term(AWMonomial{0, 1, 0, 0, 1, 0}, -q.inverse());
    r.add_term(AWMonomial{0, 0, 1, 0, 0, 1}, -q);
    return r;
}

CheckReport aw_presentation_check() {
    CheckReport report;
    report.title = "askey-wilson presentation";

    auto timed = [&](const std::string& name, auto&& residue_fn) {
        auto start = std::chrono::steady_clock::now();
        long residue = residue_fn();
        auto stop = std::chrono::steady_clock::now();
        CheckItem item;
        item.name = name;
        item.pass = residue == 0;
        item.residue_terms = residue;
        item.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
        report.add(std::move(item));
    };

    Scalar q = Scalar::q();
    Scalar three = q_bracket(3);
    Scalar w = (q.pow(2) - q.pow(-2)).pow(2);
    AWElement A = AWElement::A(), B = AWElement::B();
    AWElement AB = aw_multiply(A, B), BA = aw_multiply(B, A);

    timed("A^3 B - [3] A^2 B A + [3] A B A^2 - B A^3 = (q^2-q^-2)^2 (BA - AB)", [&]() {
        AWElement lhs = aw_multiply(aw_pow(A, 3), B) -
                        aw_multiply(aw_multiply(aw_pow(A, 2), B), A).scaled(three) +
                        aw_multiply(aw_multiply(A, B), aw_pow(A, 2)).scaled(three) -
                        aw_multiply(B, aw_pow(A, 3));
        AWElement rhs = (BA - AB).scaled(w);
        return static_cast<long>((lhs - rhs).size());
    });
    timed("B^3 A - [3] B^2 A B + [3] B A B^2 - A B^3 = (q^2-q^-2)^2 (AB - BA)", [&]() {
        AWElement lhs = aw_multiply(aw_pow(B, 3), A) -
                        aw_multiply(aw_multiply(aw_pow(B, 2), A), B).scaled(three) +
                        aw_multiply(aw_multiply(B, A), aw_pow(B, 2)).scaled(three) -
                        aw_multiply(A, aw_pow(B, 3));
        AWElement rhs = (AB - BA).scaled(w);
        return static_cast<long>((lhs - rhs).size());
    });
    timed("B^2 A^2 - (q^2+q^-2) BABA + (q^2+q^-2) ABAB - A^2 B^2 = (q-q^-1)^2 (AB - BA) gamma",
          [&]() {
              Scalar qq = q.pow(2) + q.pow(-2);
              AWElement lhs = aw_multiply(aw_pow(B, 2), aw_pow(A, 2)) -
                              aw_pow(BA, 2).scaled(qq) + aw_pow(AB, 2).scaled(qq) -
                              aw_multiply(aw_pow(A, 2), aw_pow(B, 2));
              AWElement rhs = aw_multiply(AB - BA, AWElement::gamma())
                                  .scaled((q - q.inverse()).pow(2));
              return static_cast<long>((lhs - rhs).size());
          });
    timed("gamma is central against A and B", [&]() {
        AWElement g = AWElement::gamma();
        return static_cast<long>((aw_multiply(g, A) - aw_multiply(A, g)).size() +
                                 (aw_multiply(g, B) - aw_multiply(B, g)).size());
    });
    for (AWLetter central : {AWLetter::Alpha, AWLetter::Beta, AWLetter::Gamma}) {
        std::string cname = central == AWLetter::Alpha  ? "alpha"
                            : central == AWLetter::Beta ? "beta"
                                                        : "gamma";
        timed(cname + " commutes with A, B, C", [&]() {
            AWElement z = AWElement::letter(central);
            long residue = 0;
            for (AWLetter g : {AWLetter::A, AWLetter::B, AWLetter::C}) {
                AWElement x = AWElement::letter(g);
                residue += static_cast<long>(
                    (aw_multiply(z, x) - aw_multiply(x, z)).size());
            }
            return residue;
        });
    }
    return report;
}

// ---------------------------------------------------------------------------

namespace {

std::string aw_monomial_string(const AWMonomial& m) {
    std::string out;
    auto piece = [&out](const char* letter, int32_t e) {
        if (e == 0) return;
        if (!out.empty()) out += "*";
        out += letter;
        if (e != 1) out += "^" + std::to_string(e);
    };
    piece("A", m.a);
    piece("B", m.b);
    piece("C", m.c);
    piece("alpha", m.r);
    piece("beta", m.s);
    piece("gamma", m.t);
    return out.empty() ? "1" : out;
}

}  // namespace

std::string AWElement::pretty() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) out += " + ";
        first = false;
        std::string mono = aw_monomial_string(m);
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
