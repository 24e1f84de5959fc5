#include "uqaw/embedding.hpp"

#include <chrono>
#include <functional>
#include <mutex>

#include "uqaw/errors.hpp"
#include "uqaw/golden.hpp"

namespace uqaw {

namespace {

CheckItem timed_residue(const std::string& name, const std::function<long()>& fn) {
    auto start = std::chrono::steady_clock::now();
    long residue = fn();
    auto stop = std::chrono::steady_clock::now();
    CheckItem item;
    item.name = name;
    item.pass = residue == 0;
    item.residue_terms = residue;
    item.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return item;
}

}  // namespace

const TElement& FlatImages::of(AWLetter l) const {
    switch (l) {
        case AWLetter::A: return a;
        case AWLetter::B: return b;
        case AWLetter::C: return c;
        case AWLetter::Alpha: return alpha;
        case AWLetter::Beta: return beta;
        case AWLetter::Gamma: return gamma;
    }
    throw error("internal: unknown letter");
}

const FlatImages& flat_generators() {
    static const FlatImages images = [] {
        FlatImages im;
        UElement lam = u_casimir();
        TElement dl = comultiply(lam);
        TElement d2l = n_fold_comultiply(2, lam);
        TElement lam0 = t_inject(lam, 0, 3);
        TElement lam1 = t_inject(lam, 1, 3);
        TElement lam2 = t_inject(lam, 2, 3);

        im.a = t_embed(dl, 0, 3);
        im.b = t_embed(dl, 1, 3);
        im.alpha = t_multiply(lam0, lam1) + t_multiply(lam2, d2l);
        im.beta = t_multiply(lam1, lam2) + t_multiply(lam0, d2l);
        im.gamma = t_multiply(lam0, lam2) + t_multiply(lam1, d2l);

        Scalar q = Scalar::q();
        im.c = im.gamma.scaled((q + q.inverse()).inverse()) +
               (t_multiply(im.b, im.a).scaled(q.inverse()) -
                t_multiply(im.a, im.b).scaled(q))
                   .scaled((q.pow(2) - q.pow(-2)).inverse());
        return im;
    }();
    return images;
}

const TElement& flat_power(AWLetter l, int32_t e) {
    static std::map<AWLetter, std::vector<TElement>> cache;
    static std::mutex mutex;
    std::lock_guard lock(mutex);
    auto& powers = cache[l];
    if (powers.empty()) powers.push_back(TElement::one(3));
    while (static_cast<int32_t>(powers.size()) <= e)
        powers.push_back(t_multiply(powers.back(), flat_generators().of(l)));
    return powers[e];
}

TElement apply_flat_monomial(const AWMonomial& m) {
    TElement r = flat_power(AWLetter::A, m.a);
    auto mul = [&r](const TElement& x) {
        if (x.size() == 1 && x.terms().begin()->first == TMonomial(3) &&
            x.terms().begin()->second.is_one())
            return;  // identity factor
        r = t_multiply(r, x);
    };
    mul(flat_power(AWLetter::B, m.b));
    mul(flat_power(AWLetter::C, m.c));
    mul(flat_power(AWLetter::Alpha, m.r));
    mul(flat_power(AWLetter::Beta, m.s));
    mul(flat_power(AWLetter::Gamma, m.t));
    return r;
}

TElement apply_flat(const AWElement& x) {
    TElement out(3);
    for (const auto& [m, c] : x.terms()) out = out + apply_flat_monomial(m).scaled(c);
    return out;
}

CheckReport verify_embedding() {
    CheckReport report;
    report.title = "embedding verification";
    const FlatImages& im = flat_generators();
    Scalar q = Scalar::q();
    Scalar central_div = (q + q.inverse()).inverse();
    Scalar comm_div = (q.pow(2) - q.pow(-2)).inverse();

    report.add(timed_residue("alpha-image identity", [&]() {
        TElement rhs = im.a + (t_multiply(im.b, im.c).scaled(q) -
                               t_multiply(im.c, im.b).scaled(q.inverse()))
                                  .scaled(comm_div);
        return static_cast<long>((im.alpha.scaled(central_div) - rhs).size());
    }));
    report.add(timed_residue("beta-image identity", [&]() {
        TElement rhs = im.b + (t_multiply(im.c, im.a).scaled(q) -
                               t_multiply(im.a, im.c).scaled(q.inverse()))
                                  .scaled(comm_div);
        return static_cast<long>((im.beta.scaled(central_div) - rhs).size());
    }));
    report.add(timed_residue("gamma-image identity", [&]() {
        TElement rhs = im.c + (t_multiply(im.a, im.b).scaled(q) -
                               t_multiply(im.b, im.a).scaled(q.inverse()))
                                  .scaled(comm_div);
        return static_cast<long>((im.gamma.scaled(central_div) - rhs).size());
    }));

    for (AWLetter central : {AWLetter::Alpha, AWLetter::Beta, AWLetter::Gamma}) {
        std::string cname = central == AWLetter::Alpha  ? "alpha"
                            : central == AWLetter::Beta ? "beta"
                                                        : "gamma";
        for (AWLetter gen : {AWLetter::A, AWLetter::B, AWLetter::C}) {
            std::string gname = gen == AWLetter::A ? "A" : gen == AWLetter::B ? "B" : "C";
            report.add(timed_residue("[" + cname + "-image, " + gname + "-image]",
                                     [&]() {
                                         const TElement& z = im.of(central);
                                         const TElement& x = im.of(gen);
                                         return static_cast<long>(
                                             (t_multiply(z, x) - t_multiply(x, z))
                                                 .size());
                                     }));
        }
    }
    return report;
}

CheckReport casimir_image_check() {
    CheckReport report;
    report.title = "casimir image";
    Scalar q = Scalar::q();
    UElement lam = u_casimir();
    UElement lam2 = u_multiply(lam, lam);
    TElement d2l = n_fold_comultiply(2, lam);

    TElement closed =
        TElement::one(3).scaled((q + q.inverse()).pow(2)) - t_inject(lam2, 0, 3) -
        t_inject(lam2, 1, 3) - t_inject(lam2, 2, 3) -
        t_multiply(t_tensor({lam, lam, lam}), d2l) - t_multiply(d2l, d2l);

    TElement image = apply_flat(aw_casimir());

    report.add(timed_residue("casimir image equals the closed expression", [&]() {
        return static_cast<long>((image - closed).size());
    }));
    report.add(timed_residue("componentwise comparison of both expansions", [&]() {
        auto ci = t_components(image);
        auto cc = t_components(closed);
        long residue = 0;
        if (ci.size() != cc.size())
            residue += static_cast<long>(ci.size() + cc.size());
        for (const auto& [d, comp] : ci) {
            auto it = cc.find(d);
            if (it == cc.end()) residue += static_cast<long>(comp.size());
            else residue += static_cast<long>((comp - it->second).size());
        }
        return residue;
    }));
    return report;
}

CheckReport centralizer_check() {
    CheckReport report;
    report.title = "centralizer of the iterated coproduct";
    const FlatImages& im = flat_generators();
    std::vector<std::pair<std::string, UElement>> gens = {
        {"E", UElement::E()},
        {"F", UElement::F()},
        {"K", UElement::K()},
        {"Kinv", UElement::Kinv()},
    };
    std::vector<std::pair<std::string, const TElement*>> images = {
        {"A-image", &im.a}, {"B-image", &im.b}, {"C-image", &im.c}};
    for (const auto& [xname, x] : images)
        for (const auto& [gname, g] : gens) {
            TElement dg = n_fold_comultiply(2, g);
            report.add(timed_residue("[" + xname + ", Delta_2(" + gname + ")]",
                                     [&]() {
                                         return static_cast<long>(
                                             (t_multiply(*x, dg) - t_multiply(dg, *x))
                                                 .size());
                                     }));
        }
    return report;
}

CheckReport component_tables_check() {
    CheckReport report;
    report.title = "generator image component tables";
    const FlatImages& im = flat_generators();
    std::vector<std::pair<std::string, const TElement*>> images = {
        {"A", &im.a},     {"B", &im.b},       {"C", &im.c},
        {"alpha", &im.alpha}, {"beta", &im.beta}, {"gamma", &im.gamma}};
    for (const auto& [name, x] : images) {
        report.add(timed_residue("component table for " + name + "-image", [&]() {
            auto computed = t_components(*x);
            auto expected = golden::table_components(name);
            long residue = 0;
            for (const auto& [d, comp] : expected) {
                auto it = computed.find(d);
                if (it == computed.end()) residue += static_cast<long>(comp.size());
                else residue += static_cast<long>((comp - it->second).size());
            }
            for (const auto& [d, comp] : computed)
                if (!expected.count(d)) residue += static_cast<long>(comp.size());
            return residue;
        }));
    }
    return report;
}

std::pair<MultiDegree, TElement> leading_data(int32_t i, int32_t j, int32_t k,
                                              int32_t r, int32_t s, int32_t t) {
    if (i < 0 || j < 0 || k < 0 || r < 0 || s < 0 || t < 0)
        throw invalid_argument_error("leading_data needs nonnegative exponents");
    AWMonomial m{i, j, k, r, s, t};
    if (m.word_length() == 0)
        return {MultiDegree{0, 0, 0}, TElement::one(3)};
    return t_leading(apply_flat_monomial(m));
}

std::pair<MultiDegree, TElement> leading_closed_form(int32_t i, int32_t j, int32_t k,
                                                     int32_t r, int32_t s, int32_t t) {
    Scalar q = Scalar::q();
    MultiDegree degree{i + k + r + s + t, j - i, -j - k - r - s - t};
    if (i + j + k + r + s + t == 0) return {degree, TElement::one(3)};

    UElement lam = u_casimir();
    // slot 1: Lambda^s E^{i+k+r+s+t}
    UElement slot1 = u_multiply(u_casimir_pow(s),
                                UElement::monomial(UMonomial{0, 0, degree[0]}, Scalar(1)));
    // slot 2: Lambda^t K^k prod_{h=1}^{min(i,j)} (...) X^{|j-i|}
    UElement slot2 = u_multiply(u_casimir_pow(t),
                                UElement::monomial(UMonomial{0, k, 0}, Scalar(1)));
    for (int32_t h = 1; h <= std::min(i, j); ++h) {
        UElement factor = lam - UElement::K().scaled(q.pow(1 - 2 * (h - i))) -
                          UElement::Kinv().scaled(q.pow(2 * (h - i) - 1));
        slot2 = u_multiply(slot2, factor);
    }
    UMonomial x_part;
    if (i <= j) x_part.e = j - i;
    else x_part.f = i - j;
    slot2 = u_multiply(slot2, UElement::monomial(x_part, Scalar(1)));
    // slot 3: Lambda^r F^{j+k+r+s+t}
    UElement slot3 = u_multiply(u_casimir_pow(r),
                                UElement::monomial(UMonomial{-degree[2], 0, 0}, Scalar(1)));

    Scalar coeff = q.pow(2 * (i - j) * k) *
                   (q - q.inverse()).pow(2 * (std::max(i, j) + k + r + s + t));
    return {degree, t_tensor({slot1, slot2, slot3}).scaled(coeff)};
}

std::pair<long, long> flat_independence_rank(int32_t max_total) {
    // Sparse row reduction over the term monomials: each image is a vector in
    // the free module spanned by TMonomials.
    std::map<TMonomial, std::map<TMonomial, Scalar>> pivots;
    long rank = 0, count = 0;

    std::vector<AWMonomial> monos;
    for (int32_t total = 0; total <= max_total; ++total)
        for (int32_t i = 0; i <= total; ++i)
            for (int32_t j = 0; i + j <= total; ++j)
                for (int32_t k = 0; i + j + k <= total; ++k)
                    for (int32_t r = 0; i + j + k + r <= total; ++r)
                        for (int32_t s = 0; i + j + k + r + s <= total; ++s) {
                            int32_t t = total - i - j - k - r - s;
                            monos.push_back(AWMonomial{i, j, k, r, s, t});
                        }

    for (const AWMonomial& m : monos) {
        ++count;
        TElement image = apply_flat_monomial(m);
        std::map<TMonomial, Scalar> row(image.terms().begin(), image.terms().end());
        while (!row.empty()) {
            const TMonomial& lead = row.rbegin()->first;
            auto p = pivots.find(lead);
            if (p == pivots.end()) break;
            Scalar factor = row.rbegin()->second;
            for (const auto& [tm, c] : p->second) {
                auto it = row.find(tm);
                Scalar v = (it == row.end() ? Scalar(0) : it->second) - factor * c;
                if (v.is_zero()) {
                    if (it != row.end()) row.erase(it);
                } else if (it == row.end()) {
                    row.emplace(tm, std::move(v));
                } else {
                    it->second = std::move(v);
                }
            }
        }
        if (!row.empty()) {
            // normalize so the pivot entry is 1
            Scalar lead = row.rbegin()->second;
            TMonomial key = row.rbegin()->first;
            for (auto& [tm, c] : row) c = c / lead;
            pivots.emplace(std::move(key), std::move(row));
            ++rank;
        }
    }
    return {rank, count};
}

}  // namespace uqaw
