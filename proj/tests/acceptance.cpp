// Acceptance suite: runs every top-level criterion at its stated budget and
// prints one PASS/FAIL line per criterion.  Exit code is the number of
// failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "uqaw/decompose.hpp"
#include "uqaw/golden.hpp"
#include "uqaw/json_io.hpp"
#include "uqaw/modules.hpp"

using namespace uqaw;

namespace {

struct Criterion {
    std::string name;
    double limit_seconds;
    std::function<bool(std::string&)> run;
};

bool check_tables(const std::string& table, const TElement& computed, std::string& why) {
    auto expected = golden::table_components(table);
    auto comps = t_components(computed);
    if (comps.size() != expected.size()) {
        why = table + ": component count mismatch";
        return false;
    }
    for (const auto& [deg, comp] : expected) {
        auto it = comps.find(deg);
        if (it == comps.end() || !(it->second == comp)) {
            why = table + ": component mismatch";
            return false;
        }
    }
    return true;
}

// 1. coproduct tables of the Casimir element against the golden files
bool criterion_hopf_tables(std::string& why) {
    return check_tables("delta_lambda", comultiply(u_casimir()), why) &&
           check_tables("delta2_lambda", n_fold_comultiply(2, u_casimir()), why);
}

// 2. embedding identities, centrality, and negative controls
bool criterion_embedding(std::string& why) {
    CheckReport r = verify_embedding();
    if (!r.all_pass()) {
        why = "an embedding residue is nonzero";
        return false;
    }
    const FlatImages& im = flat_generators();
    Scalar q = Scalar::q();
    Scalar central_div = (q + q.inverse()).inverse();
    Scalar comm_div = (q.pow(2) - q.pow(-2)).inverse();
    // sign-flipped second identity must not vanish
    TElement mutant2 = im.beta.scaled(central_div) - im.b -
                       (t_multiply(im.c, im.a).scaled(q.inverse()) -
                        t_multiply(im.a, im.c).scaled(q))
                           .scaled(comm_div);
    // wrong central divisor in the first identity must not vanish
    TElement mutant1 = im.alpha.scaled(comm_div) - im.a -
                       (t_multiply(im.b, im.c).scaled(q) -
                        t_multiply(im.c, im.b).scaled(q.inverse()))
                           .scaled(comm_div);
    if (mutant2.is_zero() || mutant1.is_zero()) {
        why = "a mutated identity vanished";
        return false;
    }
    return true;
}

// 3. image of the Casimir element equals the closed expression
bool criterion_casimir_image(std::string& why) {
    CheckReport r = casimir_image_check();
    if (!r.all_pass()) why = "casimir image residue is nonzero";
    return r.all_pass();
}

// 4. images commute with the iterated coproduct
bool criterion_centralizer(std::string& why) {
    CheckReport r = centralizer_check();
    if (!r.all_pass()) why = "a centralizer commutator is nonzero";
    return r.all_pass();
}

// 5. all six generator-image component tables
bool criterion_component_tables(std::string& why) {
    CheckReport r = component_tables_check();
    if (!r.all_pass()) why = "an image component table differs";
    return r.all_pass();
}

// 6. leading components for total exponent <= 4 plus the independence rank
bool criterion_leading(std::string& why) {
    for (int32_t total = 0; total <= 4; ++total)
        for (int32_t i = 0; i <= total; ++i)
            for (int32_t j = 0; i + j <= total; ++j)
                for (int32_t k = 0; i + j + k <= total; ++k)
                    for (int32_t r = 0; i + j + k + r <= total; ++r)
                        for (int32_t s = 0; i + j + k + r + s <= total; ++s) {
                            int32_t t = total - i - j - k - r - s;
                            auto got = leading_data(i, j, k, r, s, t);
                            auto want = leading_closed_form(i, j, k, r, s, t);
                            if (got.first != want.first ||
                                !(got.second == want.second)) {
                                why = "leading component mismatch at (" +
                                      std::to_string(i) + "," + std::to_string(j) +
                                      "," + std::to_string(k) + "," +
                                      std::to_string(r) + "," + std::to_string(s) +
                                      "," + std::to_string(t) + ")";
                                return false;
                            }
                        }
    auto [rank, count] = flat_independence_rank(3);
    if (rank != count) {
        why = "independence rank " + std::to_string(rank) + " of " +
              std::to_string(count);
        return false;
    }
    return true;
}

// 7. rewriting confluence and the product-formula identities
bool criterion_confluence(std::string& why) {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<int> uq_len(0, 8), uq_letter(0, 3);
    for (int trial = 0; trial < 500; ++trial) {
        UWordLetters w(uq_len(rng));
        for (auto& l : w) l = static_cast<ULetter>(uq_letter(rng));
        UElement left = normalize_word(w, RewriteStrategy::Leftmost);
        UElement right = normalize_word(w, RewriteStrategy::Rightmost);
        UElement folded = UElement::one();
        for (ULetter l : w)
            folded = u_multiply(folded, l == ULetter::E      ? UElement::E()
                                        : l == ULetter::F    ? UElement::F()
                                        : l == ULetter::K    ? UElement::K()
                                                             : UElement::Kinv());
        if (!(left == right) || !(left == folded)) {
            why = "uq word normal forms disagree";
            return false;
        }
    }
    std::uniform_int_distribution<int> aw_len(0, 6), aw_letter(0, 5);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<AWLetter> w(aw_len(rng));
        for (auto& l : w) l = static_cast<AWLetter>(aw_letter(rng));
        AWElement right = AWElement::one();
        for (AWLetter l : w) right = aw_mul_letter_right(right, l);
        AWElement left = AWElement::one();
        for (auto it = w.rbegin(); it != w.rend(); ++it)
            left = aw_mul_letter_left(*it, left);
        if (!(left == right)) {
            why = "aw reduction orders disagree";
            return false;
        }
    }
    // product-formula identities up to the fourth power
    Scalar q = Scalar::q();
    Scalar w2 = (q - q.inverse()).pow(2);
    UElement lam = u_casimir();
    for (int i = 1; i <= 4; ++i) {
        UElement eifi = u_multiply(u_pow(UElement::E(), i), u_pow(UElement::F(), i));
        UElement fiei = u_multiply(u_pow(UElement::F(), i), u_pow(UElement::E(), i));
        UElement prod_i = UElement::one(), prod_ii = UElement::one();
        for (int h = 1; h <= i; ++h) {
            prod_i = u_multiply(prod_i, lam - UElement::K().scaled(q.pow(1 - 2 * h)) -
                                            UElement::Kinv().scaled(q.pow(2 * h - 1)))
                         .scaled(w2.inverse());
            prod_ii = u_multiply(prod_ii, lam - UElement::K().scaled(q.pow(2 * h - 1)) -
                                              UElement::Kinv().scaled(q.pow(1 - 2 * h)))
                          .scaled(w2.inverse());
        }
        if (!(eifi == prod_i) || !(fiei == prod_ii)) {
            why = "product formula fails at power " + std::to_string(i);
            return false;
        }
    }
    if (!aw_presentation_check().all_pass()) {
        why = "a presentation residue is nonzero";
        return false;
    }
    return true;
}

// 8. module relation checks and Casimir scalars
bool criterion_modules(std::string& why) {
    Scalar q = Scalar::q();
    for (long n = 0; n <= 5; ++n)
        for (int eps : {1, -1}) {
            UqModule m = finite_uq_module(n, eps);
            if (!module_relation_check(m).all_pass()) {
                why = "finite module relations fail at n = " + std::to_string(n);
                return false;
            }
            auto s = module_matrix(m, u_casimir()).as_scalar_multiple_of_identity();
            if (!s || !(*s == Scalar(eps) * (q.pow(n + 1) + q.pow(-n - 1)))) {
                why = "finite Casimir scalar wrong at n = " + std::to_string(n);
                return false;
            }
        }
    ParamSet::global().declare("lambda");
    Scalar lam = Scalar::variable("lambda");
    for (long N = 2; N <= 8; ++N) {
        UqModule m = truncated_verma(lam, N);
        if (!module_relation_check(m).all_pass()) {
            why = "Verma relations fail at window " + std::to_string(N);
            return false;
        }
        auto s = module_matrix(m, u_casimir()).as_scalar_multiple_of_identity();
        if (!s || !(*s == lam * q + lam.inverse() * q.inverse())) {
            why = "Verma Casimir scalar wrong at window " + std::to_string(N);
            return false;
        }
    }
    return true;
}

// 9. coupling coefficients: closed form vs recurrence and the vanishing rule
bool criterion_cg(std::string& why) {
    for (long m = 0; m <= 4; ++m)
        for (long n = 0; n <= 4; ++n)
            for (long h = 0; h <= std::min(m, n); ++h)
                for (long k = 0; k <= m + n - 2 * h; ++k)
                    for (long i = 0; i <= m; ++i)
                        for (long j = 0; j <= n; ++j) {
                            CGIndex idx{m, n, h, i, j, k};
                            Scalar closed = cg_finite(idx);
                            Scalar rec = cg_finite_recurrence(idx);
                            if (!(closed == rec)) {
                                why = "finite coefficient mismatch";
                                return false;
                            }
                            if (h + k != i + j && !closed.is_zero()) {
                                why = "finite vanishing rule violated";
                                return false;
                            }
                        }
    ParamSet::global().declare("kappa");
    ParamSet::global().declare("lambda");
    Scalar kap = Scalar::variable("kappa");
    Scalar lam = Scalar::variable("lambda");
    for (long h = 0; h <= 3; ++h)
        for (long i = 0; i <= 3; ++i)
            for (long j = 0; j <= 3; ++j)
                for (long k = 0; k <= 3; ++k) {
                    Scalar closed = cg_verma(kap, lam, h, i, j, k);
                    if (h + k != i + j) {
                        if (!closed.is_zero() ||
                            !cg_verma_recurrence(kap, lam, h, i, j, k).is_zero()) {
                            why = "Verma vanishing rule violated";
                            return false;
                        }
                        continue;
                    }
                    if (!(closed == cg_verma_recurrence(kap, lam, h, i, j, k))) {
                        why = "Verma coefficient mismatch";
                        return false;
                    }
                }
    return true;
}

// 10. finite decompositions for every total weight up to six
bool criterion_decompose_finite(std::string& why) {
    for (long m = 0; m <= 6; ++m)
        for (long n = 0; n + m <= 6; ++n)
            for (long p = 0; p + n + m <= 6; ++p) {
                DecompositionReport r = decompose_finite(m, n, p);
                if (!r.pass() || !r.dims_ok) {
                    why = "decomposition fails at (" + std::to_string(m) + "," +
                          std::to_string(n) + "," + std::to_string(p) + ")";
                    return false;
                }
                for (const auto& blk : r.blocks)
                    if (!blk.leonard_direct || !blk.leonard_criterion) {
                        why = "a block is not a Leonard triple at (" +
                              std::to_string(m) + "," + std::to_string(n) + "," +
                              std::to_string(p) + ")";
                        return false;
                    }
            }
    return true;
}

// 11. Verma decomposition with symbolic weights
bool criterion_decompose_verma(std::string& why) {
    DecompositionReport r = decompose_verma(2, 1, 7);
    if (!r.pass()) {
        why = "a Verma block check failed";
        return false;
    }
    // parameter formulas of the isomorphism type
    ParamSet::global().declare("kappa");
    ParamSet::global().declare("lambda");
    ParamSet::global().declare("mu");
    Scalar kap = Scalar::variable("kappa");
    Scalar lam = Scalar::variable("lambda");
    Scalar mu = Scalar::variable("mu");
    Scalar q = Scalar::q();
    for (const auto& blk : r.blocks) {
        long d = blk.d;
        if (!(blk.a == (kap * lam).inverse() * q.pow(d - 1)) ||
            !(blk.b == (lam * mu).inverse() * q.pow(d - 1)) ||
            !(blk.c == (mu * kap).inverse() * q.pow(d - 1))) {
            why = "block parameters differ from the displayed formulas";
            return false;
        }
        if (!blk.phi1_identity) {
            why = "the phi_1 identity failed";
            return false;
        }
        // triple criterion: mu kappa generic avoids {+-q^n | 0 <= n <= 2d-2}
        bool criterion_e = !is_plus_minus_q_power(mu * kap, 0, 2 * d - 2);
        if (criterion_e != blk.leonard_criterion || !blk.leonard_agree) {
            why = "triple criteria disagree";
            return false;
        }
    }
    return true;
}

// 12. index combinatorics: the three h-window characterizations and the
//     closed nonemptiness test
bool criterion_combinatorics(std::string& why) {
    for (long m = 0; m <= 8; ++m)
        for (long n = 0; n <= 8; ++n)
            for (long p = 0; p <= 8; ++p)
                for (long l = 0; l <= 8; ++l) {
                    bool any = false;
                    for (long h = -6; h <= 14; ++h) {
                        bool i1 = 0 <= h && h <= std::min(m, n) && 0 <= l - h &&
                                  l - h <= std::min(m + n - 2 * h, p);
                        bool i2 = std::max(0L, l - p) <= h &&
                                  h <= std::min(std::min(m, n), std::min(l, m + n - l));
                        bool i3 = l - std::min(p, l) <= h &&
                                  h <= std::min(m, l) + std::min(n, l) - l;
                        if (i1 != i2 || i2 != i3) {
                            why = "window characterizations disagree";
                            return false;
                        }
                        any = any || i1;
                    }
                    if (any != sigma_level_nonempty(m, n, p, l)) {
                        why = "nonemptiness test disagrees with the scan";
                        return false;
                    }
                    auto [lo, hi] = h_range(m, n, p, l);
                    if ((lo <= hi) != any) {
                        why = "h_range emptiness disagrees";
                        return false;
                    }
                }
    return true;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"hopf coproduct tables match the golden files", 5, criterion_hopf_tables},
        {"embedding identities hold; mutants are nonzero", 60, criterion_embedding},
        {"casimir image equals the closed expression", 60, criterion_casimir_image},
        {"images centralize the iterated coproduct", 30, criterion_centralizer},
        {"all six image component tables match", 30, criterion_component_tables},
        {"leading components and independence rank", 300, criterion_leading},
        {"rewriting confluence and product formulas", 120, criterion_confluence},
        {"module relations and Casimir scalars", 60, criterion_modules},
        {"coupling coefficients: closed = recurrence", 120, criterion_cg},
        {"finite decompositions for m+n+p <= 6", 600, criterion_decompose_finite},
        {"verma decomposition (symbolic weights)", 600, criterion_decompose_verma},
        {"index combinatorics scan", 10, criterion_combinatorics},
    };

    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        std::string why;
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = criteria[i].run(why);
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        auto stop = std::chrono::steady_clock::now();
        double secs = std::chrono::duration<double>(stop - start).count();
        bool in_time = secs < criteria[i].limit_seconds;
        bool pass = ok && in_time;
        std::printf("%s  [%2zu] %s (%.1f s, limit %.0f s)%s%s\n",
                    pass ? "PASS" : "FAIL", i + 1, criteria[i].name.c_str(), secs,
                    criteria[i].limit_seconds, why.empty() ? "" : " -- ",
                    why.c_str());
        std::fflush(stdout);
        if (!pass) ++failures;
    }
    std::printf("%d of %zu criteria passed\n",
                static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures;
}
