#pragma once

#include "secrecy/numerics.hpp"
#include "secrecy/regions.hpp"

namespace secrecy::wiretap {

/// Gaussian two-way wiretap channel.
///
///   Y  = X  + N1                    (Node 2 hears Node 1)
///   Yf = Xf + N3                    (Node 1 hears Node 2)
///   Z  = sqrt(h1) X + sqrt(h2) Xf + N2   (eavesdropper)
///
/// with unit-variance noises, corr(N1, N2) = rho and corr(N2, N3) = eta.
struct WiretapParams {
  double p = 0.0;   // Node 1 power
  double pr = 0.0;  // Node 2 power
  double h1 = 0.0;  // squared gain Node 1 -> eavesdropper
  double h2 = 0.0;  // squared gain Node 2 -> eavesdropper
  double rho = 0.0;
  double eta = 0.0;

  /// Throws DomainError on negative/non-finite powers or gains, or
  /// correlations outside [-1, 1].
  void validate() const;
};

enum class Node { one, two };

/// Search settings shared by every infimum/maximum in this module.
struct SearchOptions {
  int grid = kDefaultGrid;
  double tol = kDefaultTol;
};

/// Smallest alpha in the key/message time split search.
inline constexpr double kAlphaFloor = 1e-6;

/// Smallest noise variance added to the eavesdropper when |rho| or |eta| = 1.
inline constexpr double kSigma2Floor = 1e-9;

/// Node-1 secrecy rate of the scheme that ignores received signals and lets
/// Node 2 jam with full power: [C(P) - C(h1 P / (h2 Pr + 1))]^+.
double r1_no_feedback(const WiretapParams& params);

/// Mirror of r1_no_feedback for Node 2.
double r2_no_feedback(const WiretapParams& params);

/// The key-then-message objective for a fixed time split alpha in (0, 1]:
/// a fraction 1 - alpha of channel uses carries a secret key from the other
/// node, the rest carries the one-time-padded message.
double r_star_objective(const WiretapParams& params, Node which, double alpha);

struct StarRate {
  double rate = 0.0;
  double alpha_star = 1.0;
};

/// Maximum of r_star_objective over alpha in [kAlphaFloor, 1].
StarRate r_star(const WiretapParams& params, Node which, const SearchOptions& opts = {});

/// Convex hull of (0,0), (R1*, 0), (0, R2*).
RateRegion achievable_region(const WiretapParams& params, const SearchOptions& opts = {});

/// Result of an infimum over sigma^2 >= 0, searched through t = 1/(1+sigma^2).
struct InfimumResult {
  double value = 0.0;
  double t_star = 0.0;        // 0 means the sigma^2 -> infinity limit won
  double sigma2_star = 0.0;   // +inf when t_star == 0
  bool at_limit = false;
  double limit_value = 0.0;   // objective as sigma^2 -> infinity
  double t_one_value = 0.0;   // objective at the smallest admissible sigma^2
  double t_max = 1.0;         // largest t searched (< 1 when |rho| or |eta| = 1)
};

/// Objective of the no-feedback Node-1 bound at t in [0, 1].
double outer_r1_objective(const WiretapParams& params, double t);

/// Node-1 rate bound when Node 1 ignores its received signal: infimum over
/// sigma^2 of the outer_r1_objective, compared against its C(P) limit.
InfimumResult outer_r1_no_feedback(const WiretapParams& params, const SearchOptions& opts = {});

/// Sum-rate branch objectives of the two-way outer region at t in [0, 1].
/// Branch one bounds via Node 1's link, branch two is its mirror.
double outer_sum_branch_objective(const WiretapParams& params, Node branch, double t);

struct OuterRegion {
  RateRegion region;
  double r1_cap = 0.0;
  double r2_cap = 0.0;
  double sum_cap = 0.0;
  InfimumResult branch1;
  InfimumResult branch2;
};

/// Outer region {R1 <= C(P), R2 <= C(Pr), R1 + R2 <= min(branch infima)}.
OuterRegion outer_region(const WiretapParams& params, const SearchOptions& opts = {});

struct DegradedBounds {
  double achievable = 0.0;
  double bound81 = 0.0;   // min{C(P), C(P) - C(h1 P) + C(h2 Pr)}
  double bound115 = 0.0;  // min{C(P), C((h2/h1)(Pr + (1-h1)/h2))}
};

/// Degraded eavesdropper (rho = sqrt(h1), h1 <= 1): cooperative-jamming rate
/// and the two upper bounds. Throws DomainError unless 0 < h1 <= 1, h2 > 0.
DegradedBounds degraded_bounds(double p, double pr, double h1, double h2);

struct FeedbackExample {
  double per_two_uses = 0.0;
  double per_use = 0.0;
  double closed_form = 0.0;       // C(1/2) - C(a^2 / (2a^2 + 2 - a^2/(a^2+2))), a = sqrt(2)
  double crosscheck_delta = 0.0;  // |covariance path - closed form|
};

/// Two-channel-use feedback scheme at P = 3, Pr = 1, h1 = 2, h2 = 1 where
/// Node 1 forwards what it heard in the odd step on top of its new symbol.
FeedbackExample feedback_example_rate();

/// The fixed parameters of feedback_example_rate.
WiretapParams feedback_example_params();

struct GapCertificate {
  double gap1 = 0.0;
  double gap1_const = 0.0;
  double gap2 = 0.0;
  double gap2_const = 0.0;
  bool gap1_holds = false;
  bool gap2_holds = false;
};

/// Constant-gap certificate for rho = eta = 0, Pr = k P: distance from the
/// sigma^2 = 0 sum-rate bound to each no-feedback star rate, and the
/// P-independent constants that bound those distances.
GapCertificate constant_gap_certificate(double p, double k, double h1, double h2);

struct UnboundedGapDemo {
  double pr = 0.0;                  // P^{1/4}
  double no_feedback_upper = 0.0;   // min{C(P), C(Pr) + 0.5}
  double feedback_achievable = 0.0; // key/message objective at alpha = 0.5
  double half_capacity = 0.0;       // 0.5 C(P)
  bool saturated = false;           // feedback_achievable == half_capacity
  bool conditions_hold = false;     // C(Pr)+0.5 < 0.4 C(P) and sqrt(P) > Pr + 1
};

/// h1 = h2 = 1, rho = eta = 0, Pr = P^{1/4}, alpha fixed at 0.5.
UnboundedGapDemo unbounded_gap_demo(double p);

/// Binary XOR channel: {R1 + R2 <= 1, R >= 0}.
RateRegion binary_deterministic_region();

}  // namespace secrecy::wiretap
