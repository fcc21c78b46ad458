#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace secrecy {

/// Gaussian channel capacity 0.5 * log2(1 + x) in bits per channel use.
/// Throws DomainError for negative or non-finite x.
double capacity(double x);

/// max(x, 0)
double pos_part(double x);

/// 0.5 * log2((1 + x)(1 + y) / (1 + x + y)): the sum rate that survives when
/// one signal of power y jams another of power x at an eavesdropper.
double lemma1_f(double x, double y);

/// min(capacity(x), capacity(y))
double lemma1_g(double x, double y);

/// lemma1_g - lemma1_f; always lies in [0, 0.5].
double lemma1_h(double x, double y);

/// Linear model over independent zero-mean unit-variance scalar Gaussian
/// sources. Each row is one scalar observation written as a linear
/// combination of the sources. Mutual information is measured between the
/// sources listed in `target_indices` and a selection of observation rows.
struct GaussianLinearModel {
  std::size_t source_count = 0;
  std::vector<std::vector<double>> left_rows;
  std::vector<std::vector<double>> right_rows;
  std::vector<std::size_t> target_indices;

  /// Throws DomainError when a row has the wrong width or a non-finite
  /// coefficient, or when targets are duplicated or out of range.
  void validate() const;
};

/// Largest observation vector gaussian_mi accepts.
inline constexpr std::size_t kMaxObservationDim = 8;

/// Relative singularity threshold on covariance determinants.
inline constexpr double kSingularityThreshold = 1e-12;

/// Determinant of a dense row-major n x n matrix by Gaussian elimination
/// with partial pivoting.
double determinant(std::span<const double> matrix, std::size_t n);

/// I(targets; observations) in bits, where the observation vector stacks the
/// left rows and/or the right rows of `model`. Computed as
/// 0.5 * log2(det S / det S|targets) with the conditional covariance taken as
/// the Schur complement of the joint (observations, targets) covariance.
///
/// Throws DomainError if neither side is selected or the observation
/// dimension exceeds kMaxObservationDim, and DegenerateModelError if either
/// determinant falls below kSingularityThreshold times its diagonal product.
double gaussian_mi(const GaussianLinearModel& model, bool use_left, bool use_right);

}  // namespace secrecy
