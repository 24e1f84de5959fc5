#ifndef UQAW_CG_HPP
#define UQAW_CG_HPP

#include <map>
#include <utility>
#include <vector>

#include "uqaw/scalar.hpp"

namespace uqaw {

/// Index of a finite coupling coefficient: the coefficient of
/// v_i^(m) (x) v_j^(n) in the coupled vector v_k^(m,n;h).
/// Valid ranges: 0 <= h <= min(m,n), 0 <= i <= m, 0 <= j <= n,
/// 0 <= k <= m+n-2h.
struct CGIndex {
    long m, n, h, i, j, k;
};

/// Closed-form finite coupling coefficient; throws invalid_index when the
/// index ranges are violated.  Vanishes when h + k != i + j.
Scalar cg_finite(const CGIndex& idx);

/// Same coefficient from the lowering recurrence
/// [k] c(i,j,k) = q^{2j-n} [i] c(i-1,j,k-1) + [j] c(i,j-1,k-1).
Scalar cg_finite_recurrence(const CGIndex& idx);

/// Verma coupling coefficient for weights kappa, lambda (arbitrary nonzero
/// scalars): the coefficient of m_i (x) m_j in the coupled vector at level h,
/// lowering index k.  Vanishes when h + k != i + j.
Scalar cg_verma(const Scalar& kappa, const Scalar& lambda, long h, long i, long j,
                long k);

/// Same coefficient from the recurrence with the top-row initial values.
Scalar cg_verma_recurrence(const Scalar& kappa, const Scalar& lambda, long h, long i,
                           long j, long k);

/// Coupled vector v_k^(m,n;h) in tensor coordinates, index (i, j) flattened
/// as i*(n+1) + j.  Built from the top vector by the divided lowering map.
std::vector<Scalar> coupled_vector_finite(long m, long n, long h, long k);

/// Sparse coupled Verma vector m_k^(kappa,lambda;h) within a truncation of
/// the given window; throws window_too_small when the support would leave it.
std::map<std::pair<long, long>, Scalar> coupled_vector_verma(const Scalar& kappa,
                                                             const Scalar& lambda,
                                                             long h, long k,
                                                             long window);

/// All (l, k) blocks of the triple-product decomposition:
/// 0 <= l <= min(m+n, n+p, p+m, (m+n+p)/2), 0 <= k <= m+n+p-2l.
std::vector<std::pair<long, long>> sigma_index_set(long m, long n, long p);

/// Inclusive h-range of the first-coupled family at level l:
/// max(0, l-p) <= h <= min(m, n, l, m+n-l); empty when min < max.
std::pair<long, long> h_range(long m, long n, long p, long l);

/// Inclusive h-range of the second-coupled family:
/// l - min(m,l) <= h <= min(n,l) + min(p,l) - l.
std::pair<long, long> h_range_w(long m, long n, long p, long l);

/// The closed nonemptiness test 2l <= min(m,l) + min(n,l) + min(p,l).
bool sigma_level_nonempty(long m, long n, long p, long l);

}  // namespace uqaw

#endif
