#include "secrecy/core_rates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "secrecy/errors.hpp"

namespace secrecy {
namespace {

void require_nonnegative(double x, const char* what) {
  if (!std::isfinite(x) || x < 0.0) {
    throw DomainError(std::string(what) + " must be finite and nonnegative, got " +
                      std::to_string(x));
  }
}

// Row-major product rows * rows^T restricted to the given source columns.
std::vector<double> gram(const std::vector<const std::vector<double>*>& rows,
                         const std::vector<bool>& column_used) {
  const std::size_t n = rows.size();
  std::vector<double> out(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < column_used.size(); ++k) {
        if (column_used[k]) acc += (*rows[i])[k] * (*rows[j])[k];
      }
      out[i * n + j] = acc;
      out[j * n + i] = acc;
    }
  }
  return out;
}

double checked_log_det(const std::vector<double>& cov, std::size_t n, const char* label) {
  double diag_product = 1.0;
  for (std::size_t i = 0; i < n; ++i) diag_product *= cov[i * n + i];
  const double det = determinant(cov, n);
  if (!(diag_product > 0.0) || !(det > kSingularityThreshold * diag_product)) {
    throw DegenerateModelError(std::string(label) + " covariance is singular (det=" +
                               std::to_string(det) + ")");
  }
  return std::log2(det);
}

}  // namespace

double capacity(double x) {
  require_nonnegative(x, "SNR");
  return 0.5 * std::log1p(x) / std::numbers::ln2;
}

double pos_part(double x) { return x > 0.0 ? x : 0.0; }

double lemma1_f(double x, double y) {
  require_nonnegative(x, "x");
  require_nonnegative(y, "y");
  // (1+x)(1+y)/(1+x+y) = 1 + xy/(1+x+y)
  return 0.5 * std::log1p(x * y / (1.0 + x + y)) / std::numbers::ln2;
}

double lemma1_g(double x, double y) { return std::min(capacity(x), capacity(y)); }

double lemma1_h(double x, double y) {
  require_nonnegative(x, "x");
  require_nonnegative(y, "y");
  // With x <= y: h = 0.5 log2((1+x+y)/(1+y)) = 0.5 log2(1 + x/(1+y)), which
  // avoids the cancellation in g - f for large arguments.
  const double lo = std::min(x, y);
  const double hi = std::max(x, y);
  return 0.5 * std::log1p(lo / (1.0 + hi)) / std::numbers::ln2;
}

void GaussianLinearModel::validate() const {
  if (source_count == 0) throw DomainError("model needs at least one source");
  auto check_rows = [this](const std::vector<std::vector<double>>& rows, const char* side) {
    for (const auto& row : rows) {
      if (row.size() != source_count) {
        throw DomainError(std::string(side) + " row has " + std::to_string(row.size()) +
                          " coefficients, expected " + std::to_string(source_count));
      }
      for (double c : row) {
        if (!std::isfinite(c)) throw DomainError(std::string(side) + " row has a non-finite coefficient");
      }
    }
  };
  check_rows(left_rows, "left");
  check_rows(right_rows, "right");
  std::vector<bool> seen(source_count, false);
  for (std::size_t t : target_indices) {
    if (t >= source_count) throw DomainError("target index out of range");
    if (seen[t]) throw DomainError("duplicate target index");
    seen[t] = true;
  }
}

double determinant(std::span<const double> matrix, std::size_t n) {
  if (matrix.size() != n * n) throw DomainError("determinant: matrix size mismatch");
  std::vector<double> a(matrix.begin(), matrix.end());
  double det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r * n + col]) > std::abs(a[pivot * n + col])) pivot = r;
    }
    if (a[pivot * n + col] == 0.0) return 0.0;
    if (pivot != col) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a[col * n + k], a[pivot * n + k]);
      det = -det;
    }
    const double p = a[col * n + col];
    det *= p;
    for (std::size_t r = col + 1; r < n; ++r) {
      const double factor = a[r * n + col] / p;
      if (factor == 0.0) continue;
      for (std::size_t k = col; k < n; ++k) a[r * n + k] -= factor * a[col * n + k];
    }
  }
  return det;
}

double gaussian_mi(const GaussianLinearModel& model, bool use_left, bool use_right) {
  if (!use_left && !use_right) throw DomainError("gaussian_mi: select at least one observation side");
  model.validate();

  std::vector<const std::vector<double>*> rows;
  if (use_left) {
    for (const auto& r : model.left_rows) rows.push_back(&r);
  }
  if (use_right) {
    for (const auto& r : model.right_rows) rows.push_back(&r);
  }
  const std::size_t n = rows.size();
  if (n == 0) throw DomainError("gaussian_mi: selected observation set is empty");
  if (n > kMaxObservationDim) throw DomainError("gaussian_mi: observation dimension exceeds 8");
  if (model.target_indices.empty()) return 0.0;

  const std::vector<bool> all(model.source_count, true);
  const std::vector<double> cov_obs = gram(rows, all);

  // Cross-covariance between observations and the (unit-variance, mutually
  // independent) targets is just the target columns of the rows, so the
  // Schur complement S - C I^{-1} C^T subtracts their outer products.
  std::vector<double> conditional = cov_obs;
  for (std::size_t t : model.target_indices) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        conditional[i * n + j] -= (*rows[i])[t] * (*rows[j])[t];
      }
    }
  }

  const double log_det_obs = checked_log_det(cov_obs, n, "observation");
  const double log_det_cond = checked_log_det(conditional, n, "conditional observation");
  return std::max(0.0, 0.5 * (log_det_obs - log_det_cond));
}

}  // namespace secrecy
