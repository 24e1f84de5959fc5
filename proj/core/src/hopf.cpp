#include "uqaw/hopf.hpp"

#include <chrono>
#include <mutex>

#include "uqaw/errors.hpp"

namespace uqaw {

namespace {

TElement delta_E() {
    TElement r(2);
    r.add_term({UMonomial{0, 0, 1}, UMonomial{}}, Scalar(1));      // E (x) 1
    r.add_term({UMonomial{0, 1, 0}, UMonomial{0, 0, 1}}, Scalar(1));  // K (x) E
    return r;
}

TElement delta_F() {
    TElement r(2);
    r.add_term({UMonomial{1, 0, 0}, UMonomial{0, -1, 0}}, Scalar(1));  // F (x) K^-1
    r.add_term({UMonomial{}, UMonomial{1, 0, 0}}, Scalar(1));          // 1 (x) F
    return r;
}

TElement delta_K_pow(int32_t k) {
    TElement r(2);
    r.add_term({UMonomial{0, k, 0}, UMonomial{0, k, 0}}, Scalar(1));
    return r;
}

// coproduct of a PBW monomial, memoized
const TElement& delta_monomial(const UMonomial& m) {
    static std::map<UMonomial, TElement> cache;
    static std::mutex mutex;
    std::lock_guard lock(mutex);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    TElement r = delta_K_pow(m.k);
    static const TElement dF = delta_F();
    static const TElement dE = delta_E();
    for (int32_t i = 0; i < m.f; ++i) r = t_multiply(dF, r);
    // so far: Delta(F)^f Delta(K)^k; multiply Delta(E)^e on the right
    for (int32_t i = 0; i < m.e; ++i) r = t_multiply(r, dE);
    return cache.emplace(m, std::move(r)).first->second;
}

}  // namespace

TElement comultiply(const UElement& x) {
    TElement out(2);
    for (const auto& [m, c] : x.terms()) {
        const TElement& d = delta_monomial(m);
        for (const auto& [tm, tc] : d.terms()) out.add_term(tm, tc * c);
    }
    return out;
}

Scalar counit(const UElement& x) {
    Scalar out(0);
    for (const auto& [m, c] : x.terms())
        if (m.f == 0 && m.e == 0) out += c;
    return out;
}

UElement antipode(const UElement& x) {
    // S(F^f K^k E^e) = S(E)^e S(K)^k S(F)^f with S(E) = -K^-1 E, S(F) = -FK.
    static const UElement sE = UElement::monomial(UMonomial{0, -1, 1}, Scalar(-1));
    static const UElement sF = UElement::monomial(UMonomial{1, 1, 0}, Scalar(-1));
    UElement out;
    for (const auto& [m, c] : x.terms()) {
        UElement t = UElement::monomial(UMonomial{0, -m.k, 0}, c);
        t = u_multiply(u_pow(sE, m.e), t);
        t = u_multiply(t, u_pow(sF, m.f));
        out = out + t;
    }
    return out;
}

TElement comultiply_slot(const TElement& x, int slot) {
    if (slot < 0 || slot >= x.arity())
        throw invalid_position("comultiply_slot out of range");
    TElement out(x.arity() + 1);
    for (const auto& [m, c] : x.terms()) {
        const TElement& d = delta_monomial(m[slot]);
        for (const auto& [dm, dc] : d.terms()) {
            TMonomial mono;
            mono.reserve(m.size() + 1);
            mono.insert(mono.end(), m.begin(), m.begin() + slot);
            mono.push_back(dm[0]);
            mono.push_back(dm[1]);
            mono.insert(mono.end(), m.begin() + slot + 1, m.end());
            out.add_term(mono, c * dc);
        }
    }
    return out;
}

TElement n_fold_comultiply(int n, const UElement& x) {
    if (n < 0) throw invalid_argument_error("n_fold_comultiply needs n >= 0");
    TElement r = t_inject(x, 0, 1);
    for (int i = 1; i <= n; ++i) r = comultiply_slot(r, r.arity() - 1);
    return r;
}

CheckReport hopf_axiom_check() {
    CheckReport report;
    report.title = "hopf axioms";

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

    std::vector<std::pair<std::string, UElement>> gens = {
        {"E", UElement::E()},
        {"F", UElement::F()},
        {"K", UElement::K()},
        {"Kinv", UElement::Kinv()},
        {"Lambda", u_casimir()},
    };

    for (const auto& [name, g] : gens) {
        timed("antipode axiom (1(x)S) on " + name, [&]() {
            TElement d = comultiply(g);
            UElement folded;
            for (const auto& [m, c] : d.terms()) {
                UElement left = UElement::monomial(m[0], Scalar(1));
                UElement right = antipode(UElement::monomial(m[1], Scalar(1)));
                folded = folded + u_multiply(left, right).scaled(c);
            }
            UElement expected = UElement::one().scaled(counit(g));
            return static_cast<long>((folded - expected).size());
        });
        timed("antipode axiom (S(x)1) on " + name, [&]() {
            TElement d = comultiply(g);
            UElement folded;
            for (const auto& [m, c] : d.terms()) {
                UElement left = antipode(UElement::monomial(m[0], Scalar(1)));
                UElement right = UElement::monomial(m[1], Scalar(1));
                folded = folded + u_multiply(left, right).scaled(c);
            }
            UElement expected = UElement::one().scaled(counit(g));
            return static_cast<long>((folded - expected).size());
        });
        timed("coassociativity on " + name, [&]() {
            TElement d = comultiply(g);
            TElement left = comultiply_slot(d, 0);
            TElement right = comultiply_slot(d, 1);
            return static_cast<long>((left - right).size());
        });
        timed("iterated coproduct slot independence (n = 2) on " + name, [&]() {
            TElement base = n_fold_comultiply(1, g);
            TElement reference = comultiply_slot(base, base.arity() - 1);
            long residue = 0;
            for (int slot = 0; slot < base.arity(); ++slot) {
                TElement other = comultiply_slot(base, slot);
                residue += static_cast<long>((reference - other).size());
            }
            return residue;
        });
    }
    return report;
}

}  // namespace uqaw
