#ifndef UQAW_EMBEDDING_HPP
#define UQAW_EMBEDDING_HPP

#include "uqaw/aw.hpp"
#include "uqaw/hopf.hpp"
#include "uqaw/report.hpp"
#include "uqaw/tensor.hpp"

namespace uqaw {

/// Images of the six Askey-Wilson generators inside the triple tensor power
/// of U_q(sl2):
///   A  -> Delta(Lambda) (x) 1
///   B  -> 1 (x) Delta(Lambda)
///   alpha -> Lambda(x)Lambda(x)1 + (1(x)1(x)Lambda) Delta_2(Lambda)
///   beta  -> 1(x)Lambda(x)Lambda + (Lambda(x)1(x)1) Delta_2(Lambda)
///   gamma -> Lambda(x)1(x)Lambda + (1(x)Lambda(x)1) Delta_2(Lambda)
///   C  -> gamma-image/(q+q^-1)
///         + [q^-1 (1(x)Delta(Lambda))(Delta(Lambda)(x)1)
///            - q (Delta(Lambda)(x)1)(1(x)Delta(Lambda))]/(q^2-q^-2)
struct FlatImages {
    TElement a{3}, b{3}, c{3}, alpha{3}, beta{3}, gamma{3};

    const TElement& of(AWLetter l) const;
};

/// The images above, computed once from the Hopf and tensor primitives.
const FlatImages& flat_generators();

/// Cached powers of a single generator image.
const TElement& flat_power(AWLetter l, int32_t e);

/// Image of a PBW monomial (product of cached generator powers).
TElement apply_flat_monomial(const AWMonomial& m);

/// Homomorphic extension to the whole algebra.
TElement apply_flat(const AWElement& x);

/// Normalizes the three defining identities of the images and the
/// centrality of the alpha/beta/gamma images against all six images.
CheckReport verify_embedding();

/// apply_flat(Casimir) minus the closed Casimir-image expression, plus the
/// componentwise comparison of the two expansions.
CheckReport casimir_image_check();

/// Commutators of the A/B/C images with the iterated coproducts of the
/// generators of U_q(sl2).
CheckReport centralizer_check();

/// Computed homogeneous components of all six images against the reference
/// tables, row for row.
CheckReport component_tables_check();

/// Leading (lex-maximal) component of the image of a PBW monomial.
std::pair<MultiDegree, TElement> leading_data(int32_t i, int32_t j, int32_t k,
                                              int32_t r, int32_t s, int32_t t);

/// The closed form the leading component must equal: degree
/// (i+k+r+s+t, j-i, -j-k-r-s-t) and coefficient
/// q^{2(i-j)k} (q-q^-1)^{2(max(i,j)+k+r+s+t)} times
/// Lambda^s (x) Lambda^t K^k prod_{h=1}^{min(i,j)}
///   (Lambda - q^{1-2(h-i)} K - q^{2(h-i)-1} K^-1) X^|j-i| (x) Lambda^r F^{...}.
std::pair<MultiDegree, TElement> leading_closed_form(int32_t i, int32_t j, int32_t k,
                                                     int32_t r, int32_t s, int32_t t);

/// Rank of the joint coefficient matrix of the images of all PBW monomials
/// with total exponent <= max_total (the injectivity witness); returns
/// {rank, count}.
std::pair<long, long> flat_independence_rank(int32_t max_total);

}  // namespace uqaw

#endif
