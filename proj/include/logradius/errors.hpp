#pragma once

#include <stdexcept>
#include <string>

namespace logradius {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Evaluation or integration requested outside a profile's θ-domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Two profiles whose domains do not overlap on an interval of positive length.
class DisjointDomainError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Malformed caller input: bad parameters, bad sample arrays.
class InputError : public Error {
public:
    using Error::Error;
};

/// Document could not be parsed. Carries the 1-based line number (0 when unknown).
class ParseError : public InputError {
public:
    ParseError(std::size_t line, const std::string& what)
        : InputError(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Document declares a format_version newer than this build understands.
class VersionError : public ParseError {
public:
    using ParseError::ParseError;
};

/// exp() of the log-radius left the representable range.
class NumericRangeError : public Error {
public:
    using Error::Error;
};

/// Input cannot be expressed in the requested representation.
class RepresentabilityError : public Error {
public:
    using Error::Error;
};

/// Angle profile is not monotone; margin is min dθ/ds over the scan.
class ConvexityError : public RepresentabilityError {
public:
    ConvexityError(double margin, const std::string& what)
        : RepresentabilityError(what), margin_(margin) {}

    double margin() const noexcept { return margin_; }

private:
    double margin_;
};

/// Profile is aperiodic or its curve does not close.
class ClosureError : public RepresentabilityError {
public:
    using RepresentabilityError::RepresentabilityError;
};

/// Curve with zero extent.
class DegenerateCurveError : public Error {
public:
    using Error::Error;
};

/// Operation called on an argument that violates its documented precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

}  // namespace logradius
