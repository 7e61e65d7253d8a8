#pragma once

#include <stdexcept>
#include <string>

namespace qreal {

/// Base for every reportable computation failure.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept { return "error"; }
};

/// Malformed input (bad literal, wrong degree, non-unimodular matrix...).
class InvalidInput : public Error {
  public:
    using Error::Error;
    const char* kind() const noexcept override { return "invalid input"; }
};

/// A divisor or radicand is indistinguishable from zero at the available order.
class InsufficientPrecision : public Error {
  public:
    using Error::Error;
    const char* kind() const noexcept override { return "insufficient precision"; }
};

class StabilizationNotReached : public Error {
  public:
    using Error::Error;
    const char* kind() const noexcept override { return "stabilization not reached"; }
};

class NoSeriesSquareRoot : public Error {
  public:
    using Error::Error;
    const char* kind() const noexcept override { return "no series square root"; }
};

class SquarefreeRequired : public Error {
  public:
    using Error::Error;
    const char* kind() const noexcept override { return "squarefree required"; }
};

/// A Hankel determinant needs coefficients at or beyond the series' exactness order.
class InsufficientSeriesOrder : public Error {
  public:
    using Error::Error;
    const char* kind() const noexcept override { return "insufficient series order"; }
};

}  // namespace qreal
