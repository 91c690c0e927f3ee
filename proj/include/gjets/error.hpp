#pragma once

#include <stdexcept>
#include <string>

namespace gjets {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operands live in different rings.
struct RingMismatch : Error {
    using Error::Error;
};

// Monomial/polynomial division with a nonzero remainder.
struct NotDivisible : Error {
    using Error::Error;
};

// Input exceeds a configured enumeration cap (vertex count, variable count).
struct CapExceeded : Error {
    using Error::Error;
};

// A Groebner computation hit its basis-size or pair-degree limit.
struct ResourceLimit : Error {
    using Error::Error;
};

struct NotSquarefree : Error {
    using Error::Error;
};

struct NotMinimal : Error {
    using Error::Error;
};

struct NotEquigenerated : Error {
    using Error::Error;
};

struct SmoothVariety : Error {
    using Error::Error;
};

struct UnknownSuite : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

} // namespace gjets
