#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace brauerpaths {

/// Malformed textual input (bad token, bad pair list, ...). `position` is the
/// 0-based offset of the offending character in the input when known.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position = npos)
        : std::runtime_error(message), position_(position) {}

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Structurally well-formed input that violates a domain invariant
/// (path leaves the strip, involution has a fixed point, degree mismatch, ...).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace brauerpaths
