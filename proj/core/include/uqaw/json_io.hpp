#ifndef UQAW_JSON_IO_HPP
#define UQAW_JSON_IO_HPP

#include <string>

#include "uqaw/aw.hpp"
#include "uqaw/decompose.hpp"
#include "uqaw/tensor.hpp"

namespace uqaw {

/// JSON forms (schema 1).  Terms are emitted in the canonical sorted order
/// of the element maps; scalars as canonical text, so equal elements have
/// byte-identical serializations.
std::string to_json(const UElement& x);
std::string to_json(const AWElement& x);
std::string to_json(const TElement& x);

UElement uelement_from_json(const std::string& text);
AWElement awelement_from_json(const std::string& text);
TElement telement_from_json(const std::string& text);

std::string to_json(const DecompositionReport& r);
std::string to_table(const DecompositionReport& r);

}  // namespace uqaw

#endif
