#include "uqaw/tensor.hpp"

#include "uqaw/errors.hpp"

namespace uqaw {

TElement TElement::one(int arity) {
    return monomial(TMonomial(arity), Scalar(1));
}

TElement TElement::monomial(TMonomial m, Scalar c) {
    TElement r(static_cast<int>(m.size()));
    if (!c.is_zero()) r.terms_.emplace(std::move(m), std::move(c));
    return r;
}

Scalar TElement::coeff(const TMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

int32_t TElement::max_word_length() const {
    int32_t len = 0;
    for (const auto& [m, c] : terms_) {
        int32_t l = 0;
        for (const auto& slot : m) l += slot.word_length();
        len = std::max(len, l);
    }
    return len;
}

void TElement::add_term(const TMonomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    if (static_cast<int>(m.size()) != arity_)
        throw arity_mismatch("tensor term arity mismatch");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TElement TElement::operator+(const TElement& other) const {
    if (arity_ != other.arity_) throw arity_mismatch("tensor sum arity mismatch");
    TElement r = *this;
    for (const auto& [m, c] : other.terms_) r.add_term(m, c);
    return r;
}

TElement TElement::operator-() const {
    TElement r(arity_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

TElement TElement::operator-(const TElement& other) const { return *this + (-other); }

TElement TElement::scaled(const Scalar& c) const {
    if (c.is_zero()) return TElement(arity_);
    TElement r(arity_);
    for (const auto& [m, s] : terms_) {
        Scalar v = s * c;
        if (!v.is_zero()) r.terms_.emplace(m, std::move(v));
    }
    return r;
}

TElement t_multiply(const TElement& x, const TElement& y) {
    if (x.arity() != y.arity())
        throw arity_mismatch("t_multiply needs equal arities");
    const int k = x.arity();
    TElement out(k);
    for (const auto& [mx, cx] : x.terms())
        for (const auto& [my, cy] : y.terms()) {
            // slotwise PBW products, then the cross product of their terms
            std::vector<const UElement*> slot_products(k);
            for (int s = 0; s < k; ++s)
                slot_products[s] = &u_monomial_product(mx[s], my[s]);
            TMonomial mono(k);
            Scalar base = cx * cy;
            // iterative cross product over slot expansions
            std::vector<UElement::TermMap::const_iterator> its(k);
            for (int s = 0; s < k; ++s) {
                if (slot_products[s]->is_zero()) goto next_pair;
                its[s] = slot_products[s]->terms().begin();
            }
            while (true) {
                Scalar c = base;
                for (int s = 0; s < k; ++s) {
                    mono[s] = its[s]->first;
                    c = c * its[s]->second;
                }
                out.add_term(mono, c);
                int s = k - 1;
                while (s >= 0) {
                    ++its[s];
                    if (its[s] != slot_products[s]->terms().end()) break;
                    its[s] = slot_products[s]->terms().begin();
                    --s;
                }
                if (s < 0) break;
            }
        next_pair:;
        }
    return out;
}

TElement TElement::operator*(const TElement& other) const {
    return t_multiply(*this, other);
}

TElement t_pow(const TElement& x, uint32_t e) {
    TElement r = TElement::one(x.arity());
    for (uint32_t i = 0; i < e; ++i) r = t_multiply(r, x);
    return r;
}

namespace {
MultiDegree degree_of(const TMonomial& m) {
    MultiDegree d(m.size());
    for (size_t s = 0; s < m.size(); ++s) d[s] = m[s].degree();
    return d;
}
}  // namespace

std::map<MultiDegree, TElement> t_components(const TElement& x) {
    std::map<MultiDegree, TElement> out;
    for (const auto& [m, c] : x.terms()) {
        MultiDegree d = degree_of(m);
        auto it = out.find(d);
        if (it == out.end()) it = out.emplace(d, TElement(x.arity())).first;
        it->second.add_term(m, c);
    }
    return out;
}

std::pair<MultiDegree, TElement> t_leading(const TElement& x) {
    if (x.is_zero()) throw zero_element("leading component of zero");
    auto comps = t_components(x);
    auto it = std::prev(comps.end());  // map is ascending; last key is lex-max
    return {it->first, it->second};
}

TElement t_inject(const UElement& u, int position, int arity) {
    if (position < 0 || position >= arity)
        throw invalid_position("t_inject position out of range");
    TElement out(arity);
    for (const auto& [m, c] : u.terms()) {
        TMonomial mono(arity);
        mono[position] = m;
        out.add_term(mono, c);
    }
    return out;
}

TElement t_tensor(const std::vector<UElement>& factors) {
    const int k = static_cast<int>(factors.size());
    TElement out(k);
    TMonomial mono(k);
    // cross product over the factors' terms
    std::vector<UElement::TermMap::const_iterator> its(k);
    for (int s = 0; s < k; ++s) {
        if (factors[s].is_zero()) return out;
        its[s] = factors[s].terms().begin();
    }
    while (true) {
        Scalar c(1);
        for (int s = 0; s < k; ++s) {
            mono[s] = its[s]->first;
            c = c * its[s]->second;
        }
        out.add_term(mono, c);
        int s = k - 1;
        while (s >= 0) {
            ++its[s];
            if (its[s] != factors[s].terms().end()) break;
            its[s] = factors[s].terms().begin();
            --s;
        }
        if (s < 0) break;
    }
    return out;
}

TElement t_embed(const TElement& x, int offset, int arity) {
    if (offset < 0 || offset + x.arity() > arity)
        throw invalid_position("t_embed window out of range");
    TElement out(arity);
    for (const auto& [m, c] : x.terms()) {
        TMonomial mono(arity);
        for (int s = 0; s < x.arity(); ++s) mono[offset + s] = m[s];
        out.add_term(mono, c);
    }
    return out;
}

UElement t_fold_multiply(const TElement& x) {
    UElement out;
    for (const auto& [m, c] : x.terms()) {
        UElement prod = UElement::monomial(m[0], Scalar(1));
        for (size_t s = 1; s < m.size(); ++s)
            prod = u_multiply(prod, UElement::monomial(m[s], Scalar(1)));
        out = out + prod.scaled(c);
    }
    return out;
}

std::string TElement::pretty() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) out += " + ";
        first = false;
        std::string mono;
        for (size_t s = 0; s < m.size(); ++s) {
            if (s) mono += " (x) ";
            mono += UElement::monomial(m[s], Scalar(1)).pretty();
        }
        if (c.is_one()) out += mono;
        else out += "(" + c.pretty() + ")*[" + mono + "]";
    }
    return out;
}

}  // namespace uqaw
