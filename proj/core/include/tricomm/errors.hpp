#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tricomm {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text. Carries the 1-based line number of the offending line.
class ParseError : public Error {
public:
    ParseError(const std::string &source, std::size_t line, const std::string &what)
        : Error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Well-formed input that violates a data-model constraint (unknown node id, bad feature value).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Operation requested on a graph that lacks what it needs (e.g. feature triangles without features).
class UnsupportedOperation : public Error {
public:
    using Error::Error;
};

/// Metric whose formula has no value for the given input (no edges, empty collection, no features).
class UndefinedMetric : public Error {
public:
    using Error::Error;
};

} // namespace tricomm
