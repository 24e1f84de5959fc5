#ifndef UQAW_GOLDEN_HPP
#define UQAW_GOLDEN_HPP

#include <string>

#include "uqaw/tensor.hpp"

namespace uqaw {
namespace golden {

/// Reference homogeneous-component tables for Delta(Lambda), Delta_2(Lambda)
/// and the six images of the Askey-Wilson generators in the triple tensor
/// product, as JSON strings (schema: {"components": [[degree, terms...]]}).
std::string delta_lambda_json();
std::string delta2_lambda_json();
std::string flat_images_json();

/// The same tables materialized as elements.
TElement delta_lambda();
TElement delta2_lambda();
TElement flat_image(const std::string& name);  // A B C alpha beta gamma

/// Per-degree components of a named table: "delta_lambda", "delta2_lambda",
/// or one of the generator names above.
std::map<MultiDegree, TElement> table_components(const std::string& table);

}  // namespace golden
}  // namespace uqaw

#endif
