#ifndef UQAW_ERRORS_HPP
#define UQAW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace uqaw {

/// Base class of every error this library throws on contract violations.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

struct division_by_zero : error {
    explicit division_by_zero(const std::string& what = "DivisionByZero")
        : error(what) {}
};

struct invalid_argument_error : error {
    explicit invalid_argument_error(const std::string& what = "InvalidArgument")
        : error(what) {}
};

struct unknown_parameter : error {
    explicit unknown_parameter(const std::string& what = "UnknownParameter")
        : error(what) {}
};

struct pole_at_specialization : error {
    explicit pole_at_specialization(const std::string& what = "PoleAtSpecialization")
        : error(what) {}
};

struct malformed_expression : error {
    explicit malformed_expression(const std::string& what = "MalformedExpression")
        : error(what) {}
};

struct not_homogeneous : error {
    explicit not_homogeneous(const std::string& what = "NotHomogeneous")
        : error(what) {}
};

struct arity_mismatch : error {
    explicit arity_mismatch(const std::string& what = "ArityMismatch")
        : error(what) {}
};

struct zero_element : error {
    explicit zero_element(const std::string& what = "ZeroElement") : error(what) {}
};

struct invalid_position : error {
    explicit invalid_position(const std::string& what = "InvalidPosition")
        : error(what) {}
};

struct invalid_index : error {
    explicit invalid_index(const std::string& what = "InvalidIndex") : error(what) {}
};

struct window_too_small : error {
    explicit window_too_small(const std::string& what = "WindowTooSmall")
        : error(what) {}
};

}  // namespace uqaw

#endif
