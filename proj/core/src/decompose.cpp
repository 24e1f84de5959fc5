#include "uqaw/decompose.hpp"

#include <chrono>

#include "uqaw/errors.hpp"

namespace uqaw {

namespace {

using TensorVec = std::map<std::array<long, 3>, Scalar>;

// Slot model: a finite module V(n, +1) or a truncated Verma module.
struct Slot {
    bool finite = true;
    long n = 0;          // finite dimension parameter
    Scalar lambda;       // Verma highest weight
    long window = 0;     // Verma truncation

    long dim() const { return finite ? n + 1 : window; }

    // K-eigenvalue of the basis vector with index i.
    Scalar k_eigen(long i) const {
        Scalar q = Scalar::q();
        return finite ? q.pow(n - 2 * i) : lambda * q.pow(-2 * i);
    }

    // action of the PBW monomial F^f K^k E^e on basis index i
    bool act(const UMonomial& m, long i, Scalar& coeff, long& out) const {
        Scalar q = Scalar::q();
        Scalar c(1);
        // E^e first
        for (int32_t t = 0; t < m.e; ++t) {
            if (i == 0) return false;
            c *= finite ? q_bracket(n - i + 1) : param_bracket(lambda, 1 - i);
            if (c.is_zero()) return false;
            --i;
        }
        if (m.k != 0) c *= k_eigen(i).pow(m.k);
        for (int32_t t = 0; t < m.f; ++t) {
            if (finite ? i == n : i + 1 >= window) return false;
            c *= q_bracket(i + 1);
            ++i;
        }
        coeff = std::move(c);
        out = i;
        return true;
    }
};

void add_to(TensorVec& v, const std::array<long, 3>& idx, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = v.find(idx);
    if (it == v.end()) {
        v.emplace(idx, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) v.erase(it);
    }
}

TensorVec apply_telement(const std::array<Slot, 3>& slots, const TElement& x,
                         const TensorVec& v) {
    TensorVec out;
    for (const auto& [idx, vc] : v) {
        for (const auto& [mono, mc] : x.terms()) {
            std::array<long, 3> target = idx;
            Scalar c = vc * mc;
            bool alive = true;
            for (int s = 0; s < 3 && alive; ++s) {
                if (mono[s] == UMonomial{}) continue;
                Scalar sc;
                long ni;
                alive = slots[s].act(mono[s], idx[s], sc, ni);
                if (alive) {
                    c *= sc;
                    target[s] = ni;
                }
            }
            if (alive) add_to(out, target, c);
        }
    }
    return out;
}

TensorVec scaled_vec(const TensorVec& v, const Scalar& c) {
    TensorVec out;
    if (c.is_zero()) return out;
    for (const auto& [idx, vc] : v) {
        Scalar x = vc * c;
        if (!x.is_zero()) out.emplace(idx, std::move(x));
    }
    return out;
}

TensorVec vec_sub(const TensorVec& a, const TensorVec& b) {
    TensorVec out = a;
    for (const auto& [idx, c] : b) add_to(out, idx, -c);
    return out;
}

TensorVec vec_add(const TensorVec& a, const TensorVec& b) {
    TensorVec out = a;
    for (const auto& [idx, c] : b) add_to(out, idx, c);
    return out;
}

// rank of a family of sparse vectors, by sparse elimination
long vec_rank(std::vector<TensorVec> vecs) {
    std::map<std::array<long, 3>, TensorVec> pivots;
    long rank = 0;
    for (auto& v : vecs) {
        while (!v.empty()) {
            const auto& lead = v.rbegin()->first;
            auto p = pivots.find(lead);
            if (p == pivots.end()) break;
            Scalar factor = v.rbegin()->second;
            for (const auto& [idx, c] : p->second) add_to(v, idx, -(factor * c));
        }
        if (v.empty()) continue;
        Scalar lead = v.rbegin()->second;
        std::array<long, 3> key = v.rbegin()->first;
        TensorVec normalized;
        for (const auto& [idx, c] : v) normalized.emplace(idx, c / lead);
        pivots.emplace(key, std::move(normalized));
        ++rank;
    }
    return rank;
}

struct BlockInputs {
    std::array<Slot, 3> slots;
    long l, k, d;
    Scalar a, b, c;
    Scalar block_casimir_eigen;             // Delta_2(Lambda) eigenvalue
    long weight;                            // common index sum of the block
    std::vector<TensorVec> u_vecs, w_vecs;  // coupled bases
    std::vector<Scalar> u_eigen, w_eigen;   // displayed eigenvalue formulas
    Scalar alpha_expected, beta_expected, gamma_expected;
};

// All block checks shared by the finite and Verma cases.
DecompositionBlock run_block_checks(const BlockInputs& in) {
    DecompositionBlock blk;
    blk.l = in.l;
    blk.k = in.k;
    blk.d = in.d;
    blk.a = in.a;
    blk.b = in.b;
    blk.c = in.c;
    blk.a_eigenvalues = in.u_eigen;
    blk.b_eigenvalues = in.w_eigen;

    const FlatImages& im = flat_generators();
    Scalar q = Scalar::q();
    AWScalarFamily fam = aw_scalar_family(in.a, in.b, in.c, q.pow(in.d));
    blk.alpha_scalar = fam.omega();
    blk.beta_scalar = fam.omega_star();
    blk.gamma_scalar = fam.omega_eps();

    // 1. A-eigenvectors: the first coupled family, with the displayed
    //    eigenvalues agreeing with the theta family.
    blk.u_eigencheck = in.u_vecs.size() == static_cast<size_t>(in.d) + 1;
    for (size_t h = 0; h < in.u_vecs.size() && blk.u_eigencheck; ++h) {
        if (!(in.u_eigen[h] == fam.theta(static_cast<long>(h)))) {
            blk.u_eigencheck = false;
            break;
        }
        TensorVec lhs = apply_telement(in.slots, im.a, in.u_vecs[h]);
        if (!vec_sub(lhs, scaled_vec(in.u_vecs[h], in.u_eigen[h])).empty())
            blk.u_eigencheck = false;
    }

    // 2. B-eigenvectors: the second coupled family.
    blk.w_eigencheck = in.w_vecs.size() == static_cast<size_t>(in.d) + 1;
    for (size_t h = 0; h < in.w_vecs.size() && blk.w_eigencheck; ++h) {
        if (!(in.w_eigen[h] == fam.theta_star(static_cast<long>(h)))) {
            blk.w_eigencheck = false;
            break;
        }
        TensorVec lhs = apply_telement(in.slots, im.b, in.w_vecs[h]);
        if (!vec_sub(lhs, scaled_vec(in.w_vecs[h], in.w_eigen[h])).empty())
            blk.w_eigencheck = false;
    }

    // 3. central elements act by the displayed scalars
    blk.central_scalars = in.alpha_expected == fam.omega() &&
                          in.beta_expected == fam.omega_star() &&
                          in.gamma_expected == fam.omega_eps();
    for (const TensorVec& v : in.u_vecs) {
        if (!blk.central_scalars) break;
        blk.central_scalars =
            vec_sub(apply_telement(in.slots, im.alpha, v),
                    scaled_vec(v, in.alpha_expected))
                .empty() &&
            vec_sub(apply_telement(in.slots, im.beta, v),
                    scaled_vec(v, in.beta_expected))
                .empty() &&
            vec_sub(apply_telement(in.slots, im.gamma, v),
                    scaled_vec(v, in.gamma_expected))
                .empty();
    }

    // 4. kernel cross-check: the block is the joint eigenspace of the
    //    diagonal weight operator and the iterated-coproduct Casimir.
    {
        static const TElement d2l = n_fold_comultiply(2, u_casimir());
        std::vector<std::array<long, 3>> basis;
        for (long i = 0; i < in.slots[0].dim(); ++i)
            for (long j = 0; j < in.slots[1].dim(); ++j) {
                long kk = in.weight - i - j;
                if (kk < 0 || kk >= in.slots[2].dim()) continue;
                basis.push_back({i, j, kk});
            }
        std::map<std::array<long, 3>, int> pos;
        for (size_t t = 0; t < basis.size(); ++t) pos.emplace(basis[t], t);
        const int nb = static_cast<int>(basis.size());
        Matrix M(nb, nb);
        bool closed = true;
        for (int col = 0; col < nb; ++col) {
            TensorVec e;
            e.emplace(basis[col], Scalar(1));
            TensorVec img = apply_telement(in.slots, d2l, e);
            for (const auto& [idx, c] : img) {
                auto it = pos.find(idx);
                if (it == pos.end()) {
                    closed = false;
                    break;
                }
                M.at(it->second, col) = c;
            }
            if (!closed) break;
        }
        blk.kernel_crosscheck = closed;
        if (closed) {
            auto kernel = nullspace(
                M - Matrix::identity(nb).scaled(in.block_casimir_eigen));
            blk.kernel_crosscheck = kernel.size() == static_cast<size_t>(in.d) + 1;
            // the u-vectors lie in the kernel and span it
            for (const TensorVec& v : in.u_vecs) {
                if (!blk.kernel_crosscheck) break;
                TensorVec lhs = apply_telement(in.slots, d2l, v);
                blk.kernel_crosscheck =
                    vec_sub(lhs, scaled_vec(v, in.block_casimir_eigen)).empty();
            }
            if (blk.kernel_crosscheck)
                blk.kernel_crosscheck =
                    vec_rank(in.u_vecs) == static_cast<long>(in.d) + 1;
        }
    }

    // 5. intertwiner from V_d(a,b,c): v_0 -> w_first, propagated by the
    //    A-action; its columns must reproduce the standard matrices.
    {
        AWModule vd = aw_vd_module(in.d, in.a, in.b, in.c);
        std::vector<TensorVec> tilde(in.d + 1);
        tilde[0] = in.w_vecs[0];
        bool ok = true;
        for (long i = 0; i < in.d && ok; ++i) {
            TensorVec av = apply_telement(in.slots, im.a, tilde[i]);
            tilde[i + 1] = vec_sub(av, scaled_vec(tilde[i], fam.theta(i)));
        }
        // top annihilation: (A - theta_d) tilde_d = 0
        {
            TensorVec av = apply_telement(in.slots, im.a, tilde[in.d]);
            ok = vec_sub(av, scaled_vec(tilde[in.d], fam.theta(in.d))).empty();
        }
        // B and C columns
        for (long i = 0; i <= in.d && ok; ++i) {
            TensorVec bv = apply_telement(in.slots, im.b, tilde[i]);
            TensorVec expected = scaled_vec(tilde[i], vd.B.mat.at(i, i));
            if (i >= 1)
                expected = vec_add(expected, scaled_vec(tilde[i - 1], vd.B.mat.at(i - 1, i)));
            ok = vec_sub(bv, expected).empty();
            if (!ok) break;
            TensorVec cv = apply_telement(in.slots, im.c, tilde[i]);
            TensorVec cexp = scaled_vec(tilde[i], vd.C.mat.at(i, i));
            if (i >= 1)
                cexp = vec_add(cexp, scaled_vec(tilde[i - 1], vd.C.mat.at(i - 1, i)));
            if (i + 1 <= in.d)
                cexp = vec_add(cexp, scaled_vec(tilde[i + 1], vd.C.mat.at(i + 1, i)));
            ok = vec_sub(cv, cexp).empty();
        }
        blk.conjugation_matches = ok;
        blk.intertwiner_invertible =
            vec_rank(tilde) == static_cast<long>(in.d) + 1;
        blk.intertwiner = tilde;

        // the universal-property identity (B - theta*_1)(A - theta_0) w = phi_1 w
        TensorVec w0 = in.w_vecs[0];
        TensorVec step = vec_sub(apply_telement(in.slots, im.a, w0),
                                 scaled_vec(w0, fam.theta(0)));
        TensorVec lhs = vec_sub(apply_telement(in.slots, im.b, step),
                                scaled_vec(step, fam.theta_star(1)));
        blk.phi1_identity = vec_sub(lhs, scaled_vec(w0, fam.phi(1))).empty();
    }

    // 6. Leonard triple on the standard module the block is isomorphic to.
    {
        LeonardTripleResult lt = leonard_check_triple(aw_vd_module(in.d, in.a, in.b, in.c));
        blk.leonard_direct = lt.direct;
        blk.leonard_criterion = lt.criterion;
        blk.leonard_agree = lt.agree;
    }
    return blk;
}

}  // namespace

DecompositionReport decompose_finite(long m, long n, long p) {
    if (m < 0 || n < 0 || p < 0)
        throw invalid_argument_error("decompose_finite needs m, n, p >= 0");
    auto start = std::chrono::steady_clock::now();
    DecompositionReport report;
    report.m = m;
    report.n = n;
    report.p = p;
    report.expected_dim = (m + 1) * (n + 1) * (p + 1);

    Scalar q = Scalar::q();
    std::array<Slot, 3> slots;
    slots[0] = Slot{true, m, Scalar(), 0};
    slots[1] = Slot{true, n, Scalar(), 0};
    slots[2] = Slot{true, p, Scalar(), 0};

    // per-(m,n,h,i) cache of the expanded two-slot coupled vectors
    std::map<std::pair<long, long>, std::vector<Scalar>> coupled01, coupled12;

    for (const auto& [l, k] : sigma_index_set(m, n, p)) {
        long d = std::min(m, l) + std::min(n, l) + std::min(p, l) - 2 * l;
        Scalar a = q.pow(std::min(m, l) + std::min(n, l) - std::min(p, l) - m - n - 1);
        Scalar b = q.pow(std::min(n, l) + std::min(p, l) - std::min(m, l) - n - p - 1);
        Scalar c = q.pow(std::min(p, l) + std::min(m, l) - std::min(n, l) - p - m - 1);

        BlockInputs in;
        in.slots = slots;
        in.l = l;
        in.k = k;
        in.d = d;
        in.a = a;
        in.b = b;
        in.c = c;
        in.weight = k + l;
        in.block_casimir_eigen =
            q.pow(m + n + p - 2 * l + 1) + q.pow(2 * l - m - n - p - 1);

        auto [hu_lo, hu_hi] = h_range(m, n, p, l);
        for (long h = hu_lo; h <= hu_hi; ++h) {
            // u = sum CG(m+n-2h, p, l-h; i, j, k) (v_i^(m,n;h) (x) v_j^(p))
            TensorVec u;
            long mm = m + n - 2 * h;
            for (long i = 0; i <= mm; ++i) {
                long j = (l - h) + k - i;
                if (j < 0 || j > p) continue;
                Scalar cg = cg_finite(CGIndex{mm, p, l - h, i, j, k});
                if (cg.is_zero()) continue;
                auto key = std::make_pair(h, i);
                auto it = coupled01.find(key);
                if (it == coupled01.end())
                    it = coupled01.emplace(key, coupled_vector_finite(m, n, h, i)).first;
                const auto& inner = it->second;
                for (long x = 0; x <= m; ++x)
                    for (long y = 0; y <= n; ++y) {
                        const Scalar& w = inner[x * (n + 1) + y];
                        if (w.is_zero()) continue;
                        add_to(u, {x, y, j}, cg * w);
                    }
            }
            in.u_vecs.push_back(std::move(u));
            in.u_eigen.push_back(q.pow(m + n - 2 * h + 1) + q.pow(2 * h - m - n - 1));
        }

        auto [hw_lo, hw_hi] = h_range_w(m, n, p, l);
        for (long h = hw_lo; h <= hw_hi; ++h) {
            TensorVec w;
            long nn = n + p - 2 * h;
            for (long i = 0; i <= m; ++i) {
                long j = (l - h) + k - i;
                if (j < 0 || j > nn) continue;
                Scalar cg = cg_finite(CGIndex{m, nn, l - h, i, j, k});
                if (cg.is_zero()) continue;
                auto key = std::make_pair(h, j);
                auto it = coupled12.find(key);
                if (it == coupled12.end())
                    it = coupled12.emplace(key, coupled_vector_finite(n, p, h, j)).first;
                const auto& inner = it->second;
                for (long x = 0; x <= n; ++x)
                    for (long y = 0; y <= p; ++y) {
                        const Scalar& v = inner[x * (p + 1) + y];
                        if (v.is_zero()) continue;
                        add_to(w, {i, x, y}, cg * v);
                    }
            }
            in.w_vecs.push_back(std::move(w));
            in.w_eigen.push_back(q.pow(n + p - 2 * h + 1) + q.pow(2 * h - n - p - 1));
        }

        Scalar block_cas = in.block_casimir_eigen;
        in.alpha_expected = (q.pow(m + 1) + q.pow(-m - 1)) * (q.pow(n + 1) + q.pow(-n - 1)) +
                            (q.pow(p + 1) + q.pow(-p - 1)) * block_cas;
        in.beta_expected = (q.pow(n + 1) + q.pow(-n - 1)) * (q.pow(p + 1) + q.pow(-p - 1)) +
                           (q.pow(m + 1) + q.pow(-m - 1)) * block_cas;
        in.gamma_expected = (q.pow(p + 1) + q.pow(-p - 1)) * (q.pow(m + 1) + q.pow(-m - 1)) +
                            (q.pow(n + 1) + q.pow(-n - 1)) * block_cas;

        DecompositionBlock blk = run_block_checks(in);
        report.total_dim += d + 1;
        report.blocks.push_back(std::move(blk));
    }

    report.dims_ok = report.total_dim == report.expected_dim;
    auto stop = std::chrono::steady_clock::now();
    report.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return report;
}

DecompositionReport decompose_verma(long dmax, long kmax, long window) {
    if (dmax < 0 || kmax < 0)
        throw invalid_argument_error("decompose_verma needs dmax, kmax >= 0");
    if (window <= dmax + kmax + 2)
        throw window_too_small("window must exceed dmax + kmax + 2");
    auto start = std::chrono::steady_clock::now();

    ParamSet::global().declare("kappa");
    ParamSet::global().declare("lambda");
    ParamSet::global().declare("mu");
    Scalar kap = Scalar::variable("kappa");
    Scalar lam = Scalar::variable("lambda");
    Scalar mu = Scalar::variable("mu");
    Scalar q = Scalar::q();

    DecompositionReport report;
    report.verma = true;
    report.dmax = dmax;
    report.kmax = kmax;
    report.window = window;

    std::array<Slot, 3> slots;
    slots[0] = Slot{false, 0, kap, window};
    slots[1] = Slot{false, 0, lam, window};
    slots[2] = Slot{false, 0, mu, window};

    for (long d = 0; d <= dmax; ++d) {
        for (long k = 0; k <= kmax; ++k) {
            BlockInputs in;
            in.slots = slots;
            in.l = d;
            in.k = k;
            in.d = d;
            in.a = kap.inverse() * lam.inverse() * q.pow(d - 1);
            in.b = lam.inverse() * mu.inverse() * q.pow(d - 1);
            in.c = mu.inverse() * kap.inverse() * q.pow(d - 1);
            in.weight = d + k;
            in.block_casimir_eigen = kap * lam * mu * q.pow(1 - 2 * d) +
                                     (kap * lam * mu).inverse() * q.pow(2 * d - 1);

            for (long h = 0; h <= d; ++h) {
                // u = sum CG(kappa lambda q^-2h, mu; d-h; i, j, k)
                //         (m_i^(kappa,lambda;h) (x) m_j^(mu))
                TensorVec u;
                Scalar kl = kap * lam * q.pow(-2 * h);
                for (long i = 0; i <= (d - h) + k; ++i) {
                    long j = (d - h) + k - i;
                    Scalar cg = cg_verma(kl, mu, d - h, i, j, k);
                    if (cg.is_zero()) continue;
                    auto inner = coupled_vector_verma(kap, lam, h, i, window);
                    for (const auto& [xy, w] : inner)
                        add_to(u, {xy.first, xy.second, j}, cg * w);
                }
                in.u_vecs.push_back(std::move(u));
                in.u_eigen.push_back(kap * lam * q.pow(1 - 2 * h) +
                                     (kap * lam).inverse() * q.pow(2 * h - 1));

                TensorVec w;
                Scalar lm = lam * mu * q.pow(-2 * h);
                for (long i = 0; i <= (d - h) + k; ++i) {
                    long j = (d - h) + k - i;
                    Scalar cg = cg_verma(kap, lm, d - h, i, j, k);
                    if (cg.is_zero()) continue;
                    auto inner = coupled_vector_verma(lam, mu, h, j, window);
                    for (const auto& [xy, v] : inner)
                        add_to(w, {i, xy.first, xy.second}, cg * v);
                }
                in.w_vecs.push_back(std::move(w));
                in.w_eigen.push_back(lam * mu * q.pow(1 - 2 * h) +
                                     (lam * mu).inverse() * q.pow(2 * h - 1));
            }

            Scalar block_cas = in.block_casimir_eigen;
            auto pair = [&q](const Scalar& x) { return x * q + x.inverse() * q.inverse(); };
            in.alpha_expected = pair(kap) * pair(lam) + pair(mu) * block_cas;
            in.beta_expected = pair(lam) * pair(mu) + pair(kap) * block_cas;
            in.gamma_expected = pair(mu) * pair(kap) + pair(lam) * block_cas;

            DecompositionBlock blk = run_block_checks(in);
            report.total_dim += d + 1;
            report.blocks.push_back(std::move(blk));
        }
    }

    report.dims_ok = true;
    auto stop = std::chrono::steady_clock::now();
    report.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return report;
}

}  // namespace uqaw
