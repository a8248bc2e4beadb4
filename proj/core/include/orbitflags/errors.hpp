#pragma once

#include <stdexcept>
#include <string>

namespace orbitflags {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// The requested object cannot exist with the given parameters.
class Infeasible : public Error {
public:
    using Error::Error;
};

/// The computation would exceed a built-in size cap.
class ResourceCap : public Error {
public:
    using Error::Error;
};

/// A configuration file failed to parse. Carries a 1-based line number,
/// or 0 when no specific line applies.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

} // namespace orbitflags
