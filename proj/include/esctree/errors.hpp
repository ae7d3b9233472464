#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace esctree {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Transport or HTTP failure after exhausting retries.
class RemoteError : public Error {
public:
    RemoteError(const std::string& what, int attempts)
        : Error(what), attempts_(attempts) {}

    /// Total request attempts made (1 initial + retries).
    int attempts() const noexcept { return attempts_; }

private:
    int attempts_ = 0;
};

/// Backend output could not be parsed against the documented reply grammar.
class MalformedResponse : public Error {
public:
    using Error::Error;
};

/// A backend emitted a score outside its documented range. Never clamped.
class OutOfRangeScore : public Error {
public:
    using Error::Error;
};

/// A node whose children were already generated was expanded again.
class DoubleExpansion : public Error {
public:
    using Error::Error;
};

/// A source strategy name with no mapping to the 8 categories.
class UnmappedStrategy : public Error {
public:
    using Error::Error;
};

/// Malformed record in a line-oriented data file; carries the 1-based line.
class SchemaError : public Error {
public:
    SchemaError(const std::string& what, std::size_t line)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_ = 0;
};

class IoError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class NonFiniteInput : public Error {
public:
    using Error::Error;
};

class EmptyDataset : public Error {
public:
    using Error::Error;
};

class LengthMismatch : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

}  // namespace esctree
