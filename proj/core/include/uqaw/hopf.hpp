#ifndef UQAW_HOPF_HPP
#define UQAW_HOPF_HPP

#include "uqaw/report.hpp"
#include "uqaw/tensor.hpp"

namespace uqaw {

/// Comultiplication: E -> E(x)1 + K(x)E, F -> F(x)K^-1 + 1(x)F, K -> K(x)K,
/// extended as an algebra homomorphism over PBW monomials.
TElement comultiply(const UElement& x);

/// Counit: E, F -> 0, K -> 1.
Scalar counit(const UElement& x);

/// Antipode: S(E) = -K^-1 E, S(F) = -F K, S(K) = K^-1, extended as an algebra
/// antiautomorphism (products reversed).
UElement antipode(const UElement& x);

/// Applies the coproduct to one slot of a tensor element (arity grows by 1).
TElement comultiply_slot(const TElement& x, int slot);

/// n-fold comultiplication: arity n+1, with Delta_0 the identity.
TElement n_fold_comultiply(int n, const UElement& x);

/// Verifies both antipode axioms and coassociativity on E, F, K, K^-1 and
/// the Casimir element, plus slot independence of the iterated coproduct.
CheckReport hopf_axiom_check();

}  // namespace uqaw

#endif
