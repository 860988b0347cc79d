#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace atomlat {

/// Caller passed arguments outside an operation's domain.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Request is valid but outside the desk-scale limits (e.g. n > 7 counting).
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input. `position` is a 1-based token or line index.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace atomlat

namespace atomlat {

/// A user-supplied closure function violated the closure axioms.
class OracleError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace atomlat
