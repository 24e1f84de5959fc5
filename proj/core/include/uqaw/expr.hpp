#ifndef UQAW_EXPR_HPP
#define UQAW_EXPR_HPP

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "uqaw/errors.hpp"
#include "uqaw/scalar.hpp"

namespace uqaw {

/// Parsed form of the ASCII expression grammar shared by every algebra:
/// identifiers, integers, + - * / ^, parentheses.  Unicode parameter and
/// generator names are folded to their ASCII spellings by the lexer.
struct ExprNode {
    enum class Kind { Integer, Symbol, Sum, Difference, Product, Quotient, Power, Negate };
    Kind kind;
    mpz_class value;                 // Integer
    std::string name;                // Symbol
    long exponent = 0;               // Power
    std::vector<std::shared_ptr<const ExprNode>> children;
};

using ExprPtr = std::shared_ptr<const ExprNode>;

/// Parses the grammar; throws malformed_expression on any syntax error.
ExprPtr parse_expression(const std::string& text);

/// Evaluates an expression all of whose symbols are declared parameters.
Scalar eval_scalar_expression(const ExprPtr& expr);

/// Generic evaluator over the scalar field plus an algebra.  Traits supply:
///   using Element;
///   static std::optional<Element> letter(const std::string& name);
///   static Element from_scalar(const Scalar&);
///   static Element add(const Element&, const Element&);
///   static Element mul(const Element&, const Element&);
///   static Element scale(const Element&, const Scalar&);
///   static std::optional<Element> letter_power(const std::string&, long);
///   static long word_length(const Element&);
template <class Traits>
typename Traits::Element eval_algebra_expression(const ExprPtr& expr, long word_cap);

/// Word-length cap used by the CLI guards; reads UQAW_MAX_WORD_LEN,
/// defaulting to 64.
long default_word_cap();

// ---------------------------------------------------------------------------
// Template implementation

namespace detail {

template <class Traits>
struct AlgValue {
    std::variant<Scalar, typename Traits::Element> v;
    bool is_scalar() const { return v.index() == 0; }
    const Scalar& scalar() const { return std::get<0>(v); }
    const typename Traits::Element& element() const { return std::get<1>(v); }
};

template <class Traits>
void check_cap(const typename Traits::Element& e, long cap) {
    if (cap > 0 && Traits::word_length(e) > cap)
        throw malformed_expression("word length exceeds cap of " + std::to_string(cap));
}

template <class Traits>
AlgValue<Traits> eval_value(const ExprPtr& expr, long cap) {
    using E = typename Traits::Element;
    using V = AlgValue<Traits>;
    switch (expr->kind) {
        case ExprNode::Kind::Integer:
            return V{Scalar::integer(expr->value)};
        case ExprNode::Kind::Symbol: {
            if (auto el = Traits::letter(expr->name)) return V{*el};
            if (ParamSet::global().index_of(expr->name))
                return V{Scalar::variable(expr->name)};
            throw malformed_expression("unknown identifier: " + expr->name);
        }
        case ExprNode::Kind::Negate: {
            V a = eval_value<Traits>(expr->children[0], cap);
            if (a.is_scalar()) return V{-a.scalar()};
            return V{Traits::scale(a.element(), Scalar(-1))};
        }
        case ExprNode::Kind::Sum:
        case ExprNode::Kind::Difference: {
            V a = eval_value<Traits>(expr->children[0], cap);
            V b = eval_value<Traits>(expr->children[1], cap);
            bool minus = expr->kind == ExprNode::Kind::Difference;
            if (a.is_scalar() && b.is_scalar())
                return V{minus ? a.scalar() - b.scalar() : a.scalar() + b.scalar()};
            E ae = a.is_scalar() ? Traits::from_scalar(a.scalar()) : a.element();
            E be = b.is_scalar() ? Traits::from_scalar(b.scalar()) : b.element();
            if (minus) be = Traits::scale(be, Scalar(-1));
            return V{Traits::add(ae, be)};
        }
        case ExprNode::Kind::Product: {
            V a = eval_value<Traits>(expr->children[0], cap);
            V b = eval_value<Traits>(expr->children[1], cap);
            if (a.is_scalar() && b.is_scalar()) return V{a.scalar() * b.scalar()};
            if (a.is_scalar()) return V{Traits::scale(b.element(), a.scalar())};
            if (b.is_scalar()) return V{Traits::scale(a.element(), b.scalar())};
            E r = Traits::mul(a.element(), b.element());
            check_cap<Traits>(r, cap);
            return V{r};
        }
        case ExprNode::Kind::Quotient: {
            V a = eval_value<Traits>(expr->children[0], cap);
            V b = eval_value<Traits>(expr->children[1], cap);
            if (!b.is_scalar())
                throw malformed_expression("division by a non-scalar expression");
            if (b.scalar().is_zero()) throw division_by_zero("division by zero");
            Scalar inv = b.scalar().inverse();
            if (a.is_scalar()) return V{a.scalar() * inv};
            return V{Traits::scale(a.element(), inv)};
        }
        case ExprNode::Kind::Power: {
            const ExprPtr& base = expr->children[0];
            long e = expr->exponent;
            // K^-1 style letter powers resolve before generic evaluation.
            if (base->kind == ExprNode::Kind::Symbol) {
                if (auto el = Traits::letter_power(base->name, e)) {
                    check_cap<Traits>(*el, cap);
                    return V{*el};
                }
            }
            V a = eval_value<Traits>(base, cap);
            if (a.is_scalar()) return V{a.scalar().pow(e)};
            if (e < 0)
                throw malformed_expression("negative power of a non-invertible element");
            E r = Traits::from_scalar(Scalar(1));
            for (long i = 0; i < e; ++i) {
                r = Traits::mul(r, a.element());
                check_cap<Traits>(r, cap);
            }
            return V{r};
        }
    }
    throw malformed_expression("unreachable expression node");
}

}  // namespace detail

template <class Traits>
typename Traits::Element eval_algebra_expression(const ExprPtr& expr, long word_cap) {
    auto v = detail::eval_value<Traits>(expr, word_cap);
    if (v.is_scalar()) return Traits::from_scalar(v.scalar());
    return v.element();
}

}  // namespace uqaw

#endif
