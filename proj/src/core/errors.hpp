#pragma once

#include <stdexcept>
#include <string>

namespace inductolink {

// Invariant violation in a domain type or a loaded catalog record.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally malformed catalog CSV; the message carries file and row.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// File could not be opened or written.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// No catalog pair satisfies the clamp-chain selection constraints.
class NoFeasiblePartError : public std::runtime_error {
public:
    explicit NoFeasiblePartError(const std::string& msg) : std::runtime_error(msg) {}
};

// Integration step too coarse (or absurdly fine) for the requested transient.
class ResolutionError : public std::runtime_error {
public:
    explicit ResolutionError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace inductolink
