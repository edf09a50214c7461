#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ktwist {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mixing values from different ring contexts (arity, names, Laurent mode).
struct RingMismatchError : Error {
    using Error::Error;
};

// Invalid arguments: indices out of range, poles in Laurent evaluation, ...
struct DomainError : Error {
    using Error::Error;
};

struct ParseError : Error {
    std::size_t offset;
    ParseError(const std::string& msg, std::size_t off)
        : Error(msg + " at offset " + std::to_string(off)), offset(off) {}
};

struct NonSymmetricInputError : Error {
    using Error::Error;
};

// A construction-time self-check failed; indicates a bug, never a valid state.
struct ConsistencyError : Error {
    using Error::Error;
};

struct RankMismatchError : Error {
    using Error::Error;
};

struct NonIntegralStructureConstant : Error {
    using Error::Error;
};

struct NegativeStructureConstant : Error {
    using Error::Error;
};

struct IllConditionedError : Error {
    using Error::Error;
};

}  // namespace ktwist
