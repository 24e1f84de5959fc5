#ifndef UQAW_PARAMS_HPP
#define UQAW_PARAMS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace uqaw {

/// Process-wide ordered set of formal parameter names.
///
/// Position 0 is always the deformation variable `q`; further parameters
/// (kappa, lambda, mu, a, b, c, nu, ...) are interned on first declaration
/// and keep their index for the lifetime of the process.  Polynomials store
/// exponent vectors indexed by these positions, so the declaration order is
/// the canonical variable order of every serialized scalar.
class ParamSet {
public:
    /// The singleton used by all scalars of this process.
    static ParamSet& global();

    /// Index of `q`, always 0.
    static constexpr int q_index = 0;

    /// Declares a parameter (no-op when it already exists) and returns its index.
    int declare(const std::string& name);

    /// Index of a declared parameter, or nullopt.
    std::optional<int> index_of(const std::string& name) const;

    /// Index of a declared parameter; throws unknown_parameter otherwise.
    int require(const std::string& name) const;

    std::string name(int index) const;

    int size() const;

    std::vector<std::string> names() const;

private:
    ParamSet();
    std::vector<std::string> names_;
};

}  // namespace uqaw

#endif
