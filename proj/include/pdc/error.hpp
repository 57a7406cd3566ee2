#pragma once

#include <stdexcept>
#include <string>

namespace pdc {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A vector argument whose length disagrees with the dimension it is used with.
class DimensionMismatch : public Error {
public:
    DimensionMismatch(std::size_t expected, std::size_t actual, const std::string& where)
        : Error(where + ": expected length " + std::to_string(expected) + ", got " +
                std::to_string(actual)),
          expected_(expected), actual_(actual) {}

    std::size_t expected() const noexcept { return expected_; }
    std::size_t actual() const noexcept { return actual_; }

private:
    std::size_t expected_;
    std::size_t actual_;
};

class EmptyPieceList : public Error {
public:
    using Error::Error;
};

class NotNormalized : public Error {
public:
    using Error::Error;
};

class MalformedProblem : public Error {
public:
    using Error::Error;
};

class NotSeparable : public Error {
public:
    using Error::Error;
};

/// Two formulations of the same condition returned different answers.
/// Never expected; it means the geometry kernel is wrong somewhere.
class RouteDisagreement : public Error {
public:
    using Error::Error;
};

/// A certificate failed its own substitution check.
class CertificateError : public Error {
public:
    using Error::Error;
};

class NonzeroOffset : public Error {
public:
    using Error::Error;
};

class InvalidGrid : public Error {
public:
    using Error::Error;
};

class GridTooLarge : public Error {
public:
    using Error::Error;
};

class UnsupportedDimension : public Error {
public:
    using Error::Error;
};

} // namespace pdc
