#pragma once

#include <stdexcept>
#include <string>

namespace edcslab {

/// Error for malformed input files; carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, int line)
        : std::runtime_error(message + " (line " + std::to_string(line) + ")"),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

/// Raised when an augmenting path admits no valid witness. The message
/// contains a full dump of the offending instance.
class ClassificationError : public std::runtime_error {
public:
    explicit ClassificationError(const std::string& dump)
        : std::runtime_error(dump) {}
};

}  // namespace edcslab
