#ifndef UQAW_DECOMPOSE_HPP
#define UQAW_DECOMPOSE_HPP

#include <array>

#include "uqaw/cg.hpp"
#include "uqaw/embedding.hpp"
#include "uqaw/modules.hpp"

namespace uqaw {

/// One irreducible block of a triple tensor product viewed through the
/// Askey-Wilson generators: parameters, eigenvalue data, the coupled bases
/// and the intertwiner onto the standard module V_d(a,b,c), plus the flags
/// of every verification run on it.
struct DecompositionBlock {
    long l = 0;  // coupling level (the Casimir level d for the Verma case)
    long k = 0;  // lowering index
    long d = 0;  // block dimension - 1
    Scalar a, b, c;
    std::vector<Scalar> a_eigenvalues;  // on the first coupled family
    std::vector<Scalar> b_eigenvalues;  // on the second coupled family
    Scalar alpha_scalar, beta_scalar, gamma_scalar;

    /// Coordinates of the intertwiner images of v_0..v_d (sparse tensor
    /// coordinates, one map per basis vector).
    std::vector<std::map<std::array<long, 3>, Scalar>> intertwiner;

    bool u_eigencheck = false;
    bool w_eigencheck = false;
    bool central_scalars = false;
    bool kernel_crosscheck = false;
    bool intertwiner_invertible = false;
    bool conjugation_matches = false;
    bool phi1_identity = false;
    bool leonard_direct = false;
    bool leonard_criterion = false;
    bool leonard_agree = false;

    bool pass() const {
        return u_eigencheck && w_eigencheck && central_scalars && kernel_crosscheck &&
               intertwiner_invertible && conjugation_matches && phi1_identity &&
               leonard_agree;
    }
};

struct DecompositionReport {
    bool verma = false;
    long m = 0, n = 0, p = 0;              // finite case
    long dmax = 0, kmax = 0, window = 0;   // Verma case
    std::vector<DecompositionBlock> blocks;
    long total_dim = 0;
    long expected_dim = 0;  // (m+1)(n+1)(p+1) in the finite case
    bool dims_ok = false;
    double wall_ms = 0.0;

    bool pass() const {
        if (!verma && !dims_ok) return false;
        for (const auto& b : blocks)
            if (!b.pass()) return false;
        return true;
    }
};

/// Decomposes V(m) (x) V(n) (x) V(p) into irreducible blocks and verifies
/// eigenvalues, central scalars, the intertwiner onto V_d(a,b,c) and the
/// Leonard-triple property on every block.
DecompositionReport decompose_finite(long m, long n, long p);

/// Same for a triple of Verma modules with symbolic highest weights kappa,
/// lambda, mu, truncated to the given window (must exceed dmax + kmax + 2).
DecompositionReport decompose_verma(long dmax, long kmax, long window);

}  // namespace uqaw

#endif
