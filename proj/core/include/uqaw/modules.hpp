#ifndef UQAW_MODULES_HPP
#define UQAW_MODULES_HPP

#include "uqaw/aw.hpp"
#include "uqaw/matrix.hpp"
#include "uqaw/report.hpp"
#include "uqaw/uq.hpp"

namespace uqaw {

/// Matrix model of a U_q(sl2)-module: the finite irreducible V(n, eps) or a
/// truncated Verma module.  For a truncation of window N the top basis
/// vector loses its F-image, so the defining relations are only guaranteed
/// on the first N-1 columns (the sound window).
struct UqModule {
    enum class Kind { Finite, VermaTruncated };
    Kind kind;
    long n = 0;
    int eps = 1;        // finite case
    Scalar lambda;      // highest weight of the Verma case
    long window = 0;    // truncation size N

    LinearOperator E, F, K, Kinv;

    int dim() const { return K.mat.rows(); }
    int sound_cols() const {
        return kind == Kind::Finite ? dim() : dim() - 1;
    }
};

/// V(n, eps): K v_i = eps q^{n-2i} v_i, F v_i = [i+1] v_{i+1},
/// E v_i = eps [n-i+1] v_{i-1}.
UqModule finite_uq_module(long n, int eps);

/// Truncated Verma module: K m_i = lambda q^{-2i} m_i, F m_i = [i+1] m_{i+1}
/// (dropped at the top), E m_i = [lambda; 1-i] m_{i-1}.
UqModule truncated_verma(const Scalar& lambda, long window);

/// Matrix of a PBW element acting on the module.
Matrix module_matrix(const UqModule& m, const UElement& x);

/// Defining relations and the Casimir scalar on the sound window.
CheckReport module_relation_check(const UqModule& m);

// ---------------------------------------------------------------------------
// Irreducibility predicates (decided syntactically on canonical scalars;
// symbolic parameters count as generic).

/// Verma module M(lambda): irreducible iff lambda is not +-q^n, n >= 0.
bool verma_irreducible(const Scalar& lambda);
/// V(n, eps): irreducible iff q^{2i} != 1 for 1 <= i <= n (generic q: always).
bool vn_irreducible(long n);
/// V_d(a,b,c): both conditions of the closed criterion.
bool vd_irreducible(long d, const Scalar& a, const Scalar& b, const Scalar& c);

/// True when x equals eps q^n for some n in the given inclusive range
/// (eps = +-1); used by the Verma and Leonard criteria.
bool is_plus_minus_q_power(const Scalar& x, long n_min, long n_max);

// ---------------------------------------------------------------------------
// The scalar family attached to (a, b, c, nu)

struct AWScalarFamily {
    Scalar a, b, c, nu;

    Scalar theta(long i) const;       // a q^{2i} nu^-1 + a^-1 q^{-2i} nu
    Scalar theta_star(long i) const;  // b q^{2i} nu^-1 + b^-1 q^{-2i} nu
    Scalar theta_eps(long i) const;   // c q^{2i} nu^-1 + c^-1 q^{-2i} nu
    Scalar phi(long i) const;
    Scalar omega() const;
    Scalar omega_star() const;
    Scalar omega_eps() const;
};

AWScalarFamily aw_scalar_family(const Scalar& a, const Scalar& b, const Scalar& c,
                                const Scalar& nu);

/// (d+1)-dimensional module V_d(a,b,c): A lower bidiagonal, B upper
/// bidiagonal, C tridiagonal; alpha, beta, gamma act as the omega scalars.
struct AWModule {
    long d = 0;
    AWScalarFamily family;
    LinearOperator A, B, C;
    Scalar alpha, beta, gamma;

    int dim() const { return static_cast<int>(d) + 1; }
};

AWModule aw_vd_module(long d, const Scalar& a, const Scalar& b, const Scalar& c);

/// Matrix of an Askey-Wilson element on the module (central letters act as
/// the stored scalars).
Matrix aw_module_matrix(const AWModule& m, const AWElement& x);

/// Defining relations of the presentation as matrix identities.
CheckReport aw_module_relation_check(const AWModule& m);

// ---------------------------------------------------------------------------
// Leonard pair / triple checks

enum class LeonardPair { AB, BC, CA };

struct LeonardPairResult {
    bool module_irreducible = false;
    /// Direct route: both operators diagonalizable with the explicit simple
    /// eigenvalue sequences, each irreducible tridiagonal in the other's
    /// eigenbasis.
    bool direct = false;
    /// Closed criterion route on the parameter squares.
    bool criterion = false;
    bool agree = false;
    std::string detail;
};

struct LeonardTripleResult {
    bool module_irreducible = false;
    LeonardPairResult ab, bc, ca;
    bool direct = false;
    bool criterion = false;
    bool agree = false;
};

LeonardPairResult leonard_check_pair(const AWModule& m, LeonardPair which);
LeonardTripleResult leonard_check_triple(const AWModule& m);

}  // namespace uqaw

#endif
