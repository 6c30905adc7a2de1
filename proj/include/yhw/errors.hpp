#pragma once

#include <stdexcept>
#include <string>

namespace yhw {

/// Malformed or out-of-contract input.  The CLI maps these to exit code 2.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A coefficient-form polynomial does not split into linear factors over Q.
class NonRationalRoot : public InputError {
public:
    NonRationalRoot() : InputError("non-rational root") {}
};

/// A weight component has no rational-function form, so the module is
/// infinite-dimensional.  This is an answer, not an operational failure.
class NonRationalComponent : public std::runtime_error {
public:
    explicit NonRationalComponent(std::size_t component)
        : std::runtime_error("non-rational component " + std::to_string(component)), component_(component) {}
    std::size_t component() const { return component_; }

private:
    std::size_t component_;
};

class DimensionCapExceeded : public InputError {
public:
    DimensionCapExceeded(std::size_t dim, std::size_t cap)
        : InputError("module dimension " + std::to_string(dim) + " exceeds cap " + std::to_string(cap)) {}
};

}  // namespace yhw
