#pragma once

#include <stdexcept>
#include <string>

namespace dsr {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or out-of-contract input: bad vertex ids, unparsable files,
// invalid sequences fed to converters, mismatched cotrees, and so on.
// The CLI maps this family to exit code 2.
struct InputError : Error {
    explicit InputError(const std::string& what) : Error(what) {}
};

// A query that is undefined for the given argument, e.g. eccentricity
// with unreachable vertices when the caller demanded connectivity.
struct DomainError : InputError {
    explicit DomainError(const std::string& what) : InputError(what) {}
};

// A configured guard was exceeded (state counts, key storage, search
// size limits). Carries how far the computation got. Exit code 3.
struct ResourceError : Error {
    std::size_t states_explored;
    ResourceError(const std::string& what, std::size_t explored)
        : Error(what), states_explored(explored) {}
};

} // namespace dsr
