#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rehearsal_lab {

/// Raised when an input file or flag cannot be interpreted. `line` is 0 when
/// the error is not tied to a line of a file.
class ConfigError : public std::runtime_error
{
public:
    ConfigError(const std::string& what, std::size_t line = 0, std::string field = {})
        : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line), field_(std::move(field))
    {}

    std::size_t line() const noexcept { return line_; }
    const std::string& field() const noexcept { return field_; }

private:
    std::size_t line_;
    std::string field_;
};

/// Raised when an instance exceeds a resource guard (enumeration budget,
/// brute-force size limit). The inputs are well formed, just too large.
class GuardViolation : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace rehearsal_lab
