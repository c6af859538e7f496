#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gsearch {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed graph6 or edge-list input. `location()` is a byte offset for
/// graph6 and a 1-based line number for edge lists.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t location)
        : Error(what), location_(location) {}

    std::size_t location() const noexcept { return location_; }

private:
    std::size_t location_;
};

/// Graph too large for an encoding or for an exhaustive check.
class SizeLimitError : public Error {
public:
    using Error::Error;
};

/// An operation that needs a connected graph received a disconnected one.
class DisconnectedGraphError : public Error {
public:
    using Error::Error;
};

/// Argument outside an operation's domain (bad vertex, non-permutation, ...).
class InvalidArgumentError : public Error {
public:
    using Error::Error;
};

/// A search state that does not belong to the graph it is used with.
class InternalStateError : public Error {
public:
    using Error::Error;
};

} // namespace gsearch
