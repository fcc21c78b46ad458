#include "secrecy/numerics.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "secrecy/errors.hpp"

namespace secrecy {
namespace {

constexpr double kInvPhi = 0.6180339887498949;  // (sqrt(5) - 1) / 2

void validate_search(double lo, double hi, int grid, double tol) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw DomainError("scalar search needs finite lo < hi");
  }
  if (grid < 3) throw DomainError("scalar search needs grid >= 3");
  if (!(tol > 0.0)) throw DomainError("scalar search needs tol > 0");
}

double grid_point(double lo, double hi, int i, int grid) {
  if (i == grid - 1) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(grid - 1);
}

}  // namespace

OptResult minimize_scalar(const ScalarFunction& objective, double lo, double hi, int grid,
                          double tol) {
  validate_search(lo, hi, grid, tol);

  OptResult result;
  int best_index = -1;
  double best_value = std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid; ++i) {
    const double v = objective(grid_point(lo, hi, i, grid));
    ++result.evaluations;
    if (!std::isfinite(v)) continue;
    if (best_index < 0 || v < best_value - kTieMargin) {
      best_index = i;
      best_value = v;
    }
  }
  if (best_index < 0) {
    throw NoFeasiblePointError("every grid point of the scalar search is non-finite");
  }

  result.argument = grid_point(lo, hi, best_index, grid);
  result.value = best_value;

  double a = grid_point(lo, hi, best_index > 0 ? best_index - 1 : 0, grid);
  double b = grid_point(lo, hi, best_index < grid - 1 ? best_index + 1 : grid - 1, grid);

  auto eval = [&](double x) {
    const double v = objective(x);
    ++result.evaluations;
    return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
  };

  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = eval(c);
  double fd = eval(d);
  while (b - a > tol) {
    const double width = b - a;
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = eval(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = eval(d);
    }
    // Rounding can stall the bracket once it approaches machine spacing.
    if (!(b - a < width)) break;
  }
  result.interval_width = b - a;

  const double candidate = fc <= fd ? c : d;
  const double candidate_value = fc <= fd ? fc : fd;
  if (candidate_value < result.value) {
    result.argument = candidate;
    result.value = candidate_value;
  }
  return result;
}

OptResult maximize_scalar(const ScalarFunction& objective, double lo, double hi, int grid,
                          double tol) {
  OptResult r = minimize_scalar([&](double x) { return -objective(x); }, lo, hi, grid, tol);
  r.value = -r.value;
  return r;
}

double bisect_root(const ScalarFunction& f, double lo, double hi, double tol) {
  if (!(lo < hi)) throw DomainError("bisect_root needs lo < hi");
  if (!(tol > 0.0)) throw DomainError("bisect_root needs tol > 0");
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (!std::isfinite(flo) || !std::isfinite(fhi) || (flo < 0.0) == (fhi < 0.0)) {
    throw BracketingError("no sign change on [" + std::to_string(lo) + ", " + std::to_string(hi) +
                          "]");
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace secrecy
