#pragma once

#include <stdexcept>
#include <string>

namespace wgauss {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad argument or violated precondition.
struct DomainError : Error {
    using Error::Error;
};

struct MixedFieldError : Error {
    MixedFieldError() : Error("operands live over different fields") {}
    using Error::Error;
};

// Requested combination of model / dimension / field is not implemented.
struct UnsupportedError : Error {
    using Error::Error;
};

struct ExtensionOverflow : UnsupportedError {
    explicit ExtensionOverflow(int need, int cap)
        : UnsupportedError("extension degree " + std::to_string(need) + " exceeds cap " +
                           std::to_string(cap)) {}
};

struct SingularError : Error {
    using Error::Error;
};

// Gauss map undefined: l(D) >= 2.
struct NotInWnError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct SamplingError : Error {
    using Error::Error;
};

}  // namespace wgauss
