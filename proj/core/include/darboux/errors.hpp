#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace darboux {

// Root of every error the library throws on bad input or degenerate geometry.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A jet operation left the domain of the function (log of a non-positive
// value, division by a zero value, ...).
class JetDomainError : public Error {
 public:
  using Error::Error;
};

struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Jet domain failure re-raised with the span of the offending sub-expression.
class EvalError : public Error {
 public:
  EvalError(const std::string& message, SourceSpan span)
      : Error(message), span_(span) {}
  SourceSpan span() const noexcept { return span_; }

 private:
  SourceSpan span_;
};

// EG - F^2 fell below the regularity tolerance.
class RegularityError : public Error {
 public:
  RegularityError(const std::string& message, double u, double v)
      : Error(message), u_(u), v_(v) {}
  double u() const noexcept { return u_; }
  double v() const noexcept { return v_; }

 private:
  double u_;
  double v_;
};

// Curve speed vanished, or a unit-speed assertion did not hold.
class CurveError : public Error {
 public:
  using Error::Error;
};

// Scenario / checker preconditions that are the caller's fault.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace darboux
