#pragma once

#include <stdexcept>
#include <string>

namespace secrecy {

/// Input outside an operation's domain (negative power, correlation beyond
/// [-1, 1], empty region list, ...). The CLI maps this to exit status 2.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// A numerical procedure could not produce a result. The CLI maps every
/// subclass to exit status 3.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// Observation covariance is singular at the configured relative threshold.
class DegenerateModelError : public NumericalError {
 public:
  explicit DegenerateModelError(const std::string& what) : NumericalError(what) {}
};

/// Every coarse-grid point of a scalar search was non-finite.
class NoFeasiblePointError : public NumericalError {
 public:
  explicit NoFeasiblePointError(const std::string& what) : NumericalError(what) {}
};

/// Root bracketing was requested on an interval without a sign change.
class BracketingError : public NumericalError {
 public:
  explicit BracketingError(const std::string& what) : NumericalError(what) {}
};

/// The relay has zero forwarding power, so the quantization noise is unbounded.
class NoForwardingError : public DomainError {
 public:
  explicit NoForwardingError(const std::string& what) : DomainError(what) {}
};

}  // namespace secrecy
