#ifndef FAIRDIV_ERRORS_HPP
#define FAIRDIV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fairdiv {

// base class for all errors raised by this library
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// malformed input: bad rational literal, bad JSON, wrong field types
struct ParseError : Error {
    using Error::Error;
};

// structurally well-formed input that violates an instance invariant
struct ValidationError : Error {
    using Error::Error;
};

// a configurable resource guard was exceeded (support size, misreport
// space, adaptive state count); never silently truncated
struct GuardError : Error {
    using Error::Error;
};

} // namespace fairdiv

#endif
