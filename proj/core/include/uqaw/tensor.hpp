#ifndef UQAW_TENSOR_HPP
#define UQAW_TENSOR_HPP

#include <boost/container/small_vector.hpp>
#include <map>
#include <utility>
#include <vector>

#include "uqaw/uq.hpp"

namespace uqaw {

/// Length-k sequence of PBW monomials, one per tensor slot.
using TMonomial = boost::container::small_vector<UMonomial, 3>;

/// Componentwise Z-degree (slot degrees e - f); lex compare is slot 0 first.
using MultiDegree = boost::container::small_vector<int32_t, 3>;

struct TMonomialDesc {
    bool operator()(const TMonomial& a, const TMonomial& b) const { return b < a; }
};

/// Sparse element of the k-fold tensor power of U_q(sl2), every slot in PBW
/// normal form.
class TElement {
public:
    using TermMap = std::map<TMonomial, Scalar, TMonomialDesc>;

    explicit TElement(int arity = 1) : arity_(arity) {}
    static TElement zero(int arity) { return TElement(arity); }
    static TElement one(int arity);
    static TElement monomial(TMonomial m, Scalar c);

    int arity() const { return arity_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    Scalar coeff(const TMonomial& m) const;
    int32_t max_word_length() const;

    void add_term(const TMonomial& m, const Scalar& c);

    TElement operator+(const TElement& other) const;
    TElement operator-(const TElement& other) const;
    TElement operator-() const;
    TElement operator*(const TElement& other) const;
    TElement scaled(const Scalar& c) const;

    bool operator==(const TElement& other) const {
        return arity_ == other.arity_ && terms_ == other.terms_;
    }
    bool operator!=(const TElement& other) const { return !(*this == other); }

    std::string pretty() const;

private:
    int arity_;
    TermMap terms_;
};

/// Slotwise product, each slot normalized to PBW form.
TElement t_multiply(const TElement& x, const TElement& y);
TElement t_pow(const TElement& x, uint32_t e);

/// Direct-sum decomposition by multidegree.
std::map<MultiDegree, TElement> t_components(const TElement& x);

/// Lex-maximal nonzero homogeneous component; throws zero_element on zero.
std::pair<MultiDegree, TElement> t_leading(const TElement& x);

/// 1 (x) ... (x) u (x) ... (x) 1 with u at the given slot.
TElement t_inject(const UElement& u, int position, int arity);

/// Pure tensor u_0 (x) ... (x) u_{k-1}.
TElement t_tensor(const std::vector<UElement>& factors);

/// Places an arity-j element into consecutive slots starting at `offset`,
/// identities elsewhere.
TElement t_embed(const TElement& x, int offset, int arity);

/// Multiplies all slots together left to right (the algebra fold map).
UElement t_fold_multiply(const TElement& x);

}  // namespace uqaw

#endif
