#include "uqaw/cg.hpp"

#include <algorithm>

#include "uqaw/errors.hpp"

namespace uqaw {

namespace {

void check_index(const CGIndex& x) {
    if (x.m < 0 || x.n < 0 || x.h < 0 || x.h > std::min(x.m, x.n) || x.i < 0 ||
        x.i > x.m || x.j < 0 || x.j > x.n || x.k < 0 || x.k > x.m + x.n - 2 * x.h)
        throw invalid_index("coupling coefficient index out of range");
}

}  // namespace

Scalar cg_finite(const CGIndex& x) {
    check_index(x);
    if (x.h + x.k != x.i + x.j) return Scalar(0);
    Scalar q = Scalar::q();
    Scalar sum(0);
    for (long r = 0; r <= x.h; ++r) {
        Scalar term = q_binomial(x.m - x.h + r, r) * q_binomial(x.i, x.h - r) *
                      q_binomial(x.j, r) / q_binomial(x.n, r);
        Scalar sign((x.h - r) % 2 == 0 ? 1 : -1);
        sum += sign * q.pow((x.h - r) * (x.m + x.n - 2 * x.h - x.k + 1)) * term;
    }
    return q.pow(x.i * (x.h + x.j - x.n)) * sum;
}

Scalar cg_finite_recurrence(const CGIndex& x) {
    check_index(x);
    if (x.h + x.k != x.i + x.j) return Scalar(0);
    if (x.k == 0) {
        // top coupled vector: (-1)^i q^{i(m-i+1)} [m-i : h-i] [n : h-i]^-1
        if (x.i > x.h) return Scalar(0);
        Scalar sign(x.i % 2 == 0 ? 1 : -1);
        return sign * Scalar::q().pow(x.i * (x.m - x.i + 1)) *
               q_binomial(x.m - x.i, x.h - x.i) / q_binomial(x.n, x.h - x.i);
    }
    Scalar q = Scalar::q();
    Scalar acc(0);
    if (x.i >= 1)
        acc += q.pow(2 * x.j - x.n) * q_bracket(x.i) *
               cg_finite_recurrence(CGIndex{x.m, x.n, x.h, x.i - 1, x.j, x.k - 1});
    if (x.j >= 1)
        acc += q_bracket(x.j) *
               cg_finite_recurrence(CGIndex{x.m, x.n, x.h, x.i, x.j - 1, x.k - 1});
    return acc / q_bracket(x.k);
}

Scalar cg_verma(const Scalar& kappa, const Scalar& lambda, long h, long i, long j,
                long k) {
    if (h < 0 || i < 0 || j < 0 || k < 0)
        throw invalid_index("Verma coupling index must be nonnegative");
    if (h + k != i + j) return Scalar(0);
    Scalar q = Scalar::q();
    Scalar sum(0);
    for (long r = 0; r <= h; ++r) {
        Scalar prod(1);
        for (long s = 1; s <= r; ++s)
            prod *= param_bracket(kappa, s - h) / param_bracket(lambda, 1 - s);
        Scalar sign((r - h) % 2 == 0 ? 1 : -1);
        sum += sign * q.pow((r - h) * (2 * h + k - 1)) * kappa.pow(h - r) *
               lambda.pow(h - r - i) * q_binomial(i, h - r) * q_binomial(j, r) * prod;
    }
    return q.pow(i * (h + j)) * sum;
}

Scalar cg_verma_recurrence(const Scalar& kappa, const Scalar& lambda, long h, long i,
                           long j, long k) {
    if (h < 0 || i < 0 || j < 0 || k < 0)
        throw invalid_index("Verma coupling index must be nonnegative");
    if (h + k != i + j) return Scalar(0);
    if (k == 0) {
        // top vector: (-1)^i kappa^i q^{i(1-i)} prod_{l=1}^{j} [kappa;l-h]/[lambda;l-j]
        Scalar sign(i % 2 == 0 ? 1 : -1);
        Scalar prod(1);
        for (long l = 1; l <= j; ++l)
            prod *= param_bracket(kappa, l - h) / param_bracket(lambda, l - j);
        return sign * kappa.pow(i) * Scalar::q().pow(i * (1 - i)) * prod;
    }
    Scalar q = Scalar::q();
    Scalar acc(0);
    if (i >= 1)
        acc += lambda.inverse() * q.pow(2 * j) * q_bracket(i) *
               cg_verma_recurrence(kappa, lambda, h, i - 1, j, k - 1);
    if (j >= 1)
        acc += q_bracket(j) * cg_verma_recurrence(kappa, lambda, h, i, j - 1, k - 1);
    return acc / q_bracket(k);
}

std::vector<Scalar> coupled_vector_finite(long m, long n, long h, long k) {
    if (h < 0 || h > std::min(m, n) || k < 0 || k > m + n - 2 * h)
        throw invalid_index("coupled vector index out of range");
    std::vector<Scalar> v((m + 1) * (n + 1));
    for (long i = 0; i <= m; ++i)
        for (long j = 0; j <= n; ++j)
            v[i * (n + 1) + j] = cg_finite(CGIndex{m, n, h, i, j, k});
    return v;
}

std::map<std::pair<long, long>, Scalar> coupled_vector_verma(const Scalar& kappa,
                                                             const Scalar& lambda,
                                                             long h, long k,
                                                             long window) {
    if (h < 0 || k < 0) throw invalid_index("coupled vector index out of range");
    if (h + k > window - 1)
        throw window_too_small("coupled Verma vector support exceeds the window");
    std::map<std::pair<long, long>, Scalar> v;
    // support: i + j = h + k
    for (long i = 0; i <= h + k; ++i) {
        long j = h + k - i;
        Scalar c = cg_verma(kappa, lambda, h, i, j, k);
        if (!c.is_zero()) v.emplace(std::make_pair(i, j), std::move(c));
    }
    return v;
}

std::vector<std::pair<long, long>> sigma_index_set(long m, long n, long p) {
    if (m < 0 || n < 0 || p < 0)
        throw invalid_argument_error("sigma_index_set needs m, n, p >= 0");
    long lmax = std::min(std::min(m + n, n + p), std::min(p + m, (m + n + p) / 2));
    std::vector<std::pair<long, long>> out;
    for (long l = 0; l <= lmax; ++l)
        for (long k = 0; k <= m + n + p - 2 * l; ++k) out.push_back({l, k});
    return out;
}

std::pair<long, long> h_range(long m, long n, long p, long l) {
    long lo = std::max(0L, l - p);
    long hi = std::min(std::min(m, n), std::min(l, m + n - l));
    return {lo, hi};
}

std::pair<long, long> h_range_w(long m, long n, long p, long l) {
    long lo = l - std::min(m, l);
    long hi = std::min(n, l) + std::min(p, l) - l;
    return {lo, hi};
}

bool sigma_level_nonempty(long m, long n, long p, long l) {
    return 2 * l <= std::min(m, l) + std::min(n, l) + std::min(p, l) && l >= 0;
}

}  // namespace uqaw
