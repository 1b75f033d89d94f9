#pragma once

#include <stdexcept>
#include <string>

namespace gridgame {

// Error hierarchy used across the library. Every category the public
// operations document maps to one concrete type here.

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Case ingestion.
struct ParseError : Error {
    using Error::Error;
};
struct SchemaError : Error {
    using Error::Error;
};
struct ReferenceError : Error {
    using Error::Error;
};
struct InvalidCase : Error {
    using Error::Error;
};

// Enumeration / argument validation.
struct Infeasible : Error {
    using Error::Error;
};
struct InvalidArgument : Error {
    using Error::Error;
};
struct DomainError : Error {
    using Error::Error;
};

// Model / solver.
struct ModelError : Error {
    using Error::Error;
};
struct StatusError : Error {
    using Error::Error;
};
struct NumericalError : Error {
    using Error::Error;
};
struct TooLarge : Error {
    using Error::Error;
};

// Game tree evaluation.
struct LeafError : Error {
    LeafError(int leader_idx, int follower_idx, const std::string& what)
        : Error(what), leader(leader_idx), follower(follower_idx) {}
    int leader;
    int follower;
};

// Filesystem.
struct IoError : Error {
    using Error::Error;
};

}  // namespace gridgame
