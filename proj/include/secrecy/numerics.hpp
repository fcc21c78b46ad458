#pragma once

#include <functional>

namespace secrecy {

inline constexpr int kDefaultGrid = 512;
inline constexpr double kDefaultTol = 1e-9;

/// Grid points whose values agree within this margin count as ties; the
/// smallest argument wins.
inline constexpr double kTieMargin = 1e-12;

struct OptResult {
  double argument = 0.0;
  double value = 0.0;
  int evaluations = 0;
  double interval_width = 0.0;
};

using ScalarFunction = std::function<double(double)>;

/// Coarse scan of `grid` equally spaced points on [lo, hi] followed by
/// golden-section refinement inside the cell pair around the best point,
/// until the bracket is no wider than `tol`. Non-finite grid values are
/// skipped. The returned value never exceeds the best grid value.
///
/// Throws DomainError for lo >= hi, grid < 3 or tol <= 0, and
/// NoFeasiblePointError when every grid value is non-finite.
OptResult minimize_scalar(const ScalarFunction& objective, double lo, double hi,
                          int grid = kDefaultGrid, double tol = kDefaultTol);

/// minimize_scalar applied to -objective; `value` is reported unnegated.
OptResult maximize_scalar(const ScalarFunction& objective, double lo, double hi,
                          int grid = kDefaultGrid, double tol = kDefaultTol);

/// Bisection on a sign-changing bracket until its width is below `tol`.
/// Throws BracketingError when f(lo) and f(hi) share a sign.
double bisect_root(const ScalarFunction& f, double lo, double hi, double tol);

}  // namespace secrecy
