#ifndef DPCOLOR_ERRORS_HPP
#define DPCOLOR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dpcolor {

// Base for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid arguments: bad family parameters, malformed relabelings, ...
struct ParameterError : Error {
    using Error::Error;
};

// Input exceeds a documented cap or enumeration budget.
struct CapacityError : Error {
    using Error::Error;
};

// Graph lacks the structure an algorithm needs (e.g. not 2-connected).
struct StructureError : Error {
    using Error::Error;
};

// Disconnected input where a connected graph is required.
struct ConnectivityError : StructureError {
    using StructureError::StructureError;
};

// Cover is not in the normalized form an operation requires.
struct NormalizationError : Error {
    using Error::Error;
};

// Malformed graph or cover text input.
struct ParseError : Error {
    using Error::Error;
};

// An internal consistency check failed; signals an implementation bug.
struct InternalError : Error {
    using Error::Error;
};

} // namespace dpcolor

#endif
