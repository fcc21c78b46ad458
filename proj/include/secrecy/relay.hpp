#pragma once

#include <utility>
#include <vector>

#include "secrecy/numerics.hpp"
#include "secrecy/regions.hpp"

namespace secrecy::relay {

/// Half-duplex two-way relay channel with an honest-but-curious relay.
/// MAC mode: Yr = X1 + X2 + N. Broadcast mode: Y1 = sqrt(h) Xr + N1,
/// Y2 = Xr + N2. Powers are long-run averages over both modes; a MAC share
/// alpha turns them into per-mode powers P_i = Pbar_i / alpha and
/// P_r = Pbar_r / (1 - alpha).
struct RelayParams {
  double p1bar = 0.0;
  double p2bar = 0.0;
  double prbar = 0.0;
  double h = 1.0;

  /// Throws DomainError on negative/non-finite powers or h <= 0.
  void validate() const;
};

struct RelaySearchOptions {
  int alpha_grid = 257;
  int inner_grid = 257;
  double tol = kDefaultTol;
};

/// MAC-share search interval for the compress-and-forward rate.
inline constexpr double kAlphaMin = 1e-4;
inline constexpr double kAlphaMax = 1.0 - 1e-4;

/// Quantization noise variance s that lets the relay forward its
/// compressed observation: alpha C((p_prime + 1) / s) = (1 - alpha) C(forward_snr).
/// Closed form (p_prime + 1) / ((1 + forward_snr)^((1 - alpha)/alpha) - 1).
///
/// Throws DomainError for alpha outside (0, 1) or negative inputs, and
/// NoForwardingError when forward_snr == 0.
double quantization_noise(double alpha, double p_prime, double forward_snr);

/// alpha C((p_prime + 1) / sigma2) - (1 - alpha) C(forward_snr); decreasing in sigma2.
double quantization_residual(double alpha, double p_prime, double forward_snr, double sigma2);

struct RelayRate {
  double rate = 0.0;
  double alpha_star = 0.0;
  double p_prime_star = 0.0;
};

/// Compress-and-forward secrecy objective for a fixed MAC share and source
/// power: alpha [C(p'/(1 + s)) - C(p'/(1 + P2))]^+ with s from
/// quantization_noise. `forward_snr_bar` is the relay's average broadcast SNR
/// toward the destination.
double cf_objective(double alpha, double p_prime, double jammer_bar, double forward_snr_bar);

/// Best source power for a fixed MAC share (inner search over [0, Pbar1/alpha]).
RelayRate achievable_r1_at_alpha(const RelayParams& params, double alpha,
                                 const RelaySearchOptions& opts = {});

/// Node-1 rate: nested maximization over the MAC share and the source power.
RelayRate achievable_r1(const RelayParams& params, const RelaySearchOptions& opts = {});

/// Node-2 rate by mirroring achievable_r1 with Node 1 jamming; the relay's
/// forwarding budget toward Node 1 uses the gain-h link, C(h Pr).
RelayRate achievable_r2(const RelayParams& params, const RelaySearchOptions& opts = {});

/// Triangle spanned by the two single-user rates (time sharing).
RateRegion achievable_region(const RelayParams& params, const RelaySearchOptions& opts = {});

/// alpha C(x / alpha), continuously extended by 0 at alpha = 0.
double time_scaled_capacity(double x, double share);

/// Outer region for one MAC share: sum cap alpha min{C(P1bar/alpha), C(P2bar/alpha)},
/// caps (1-alpha) C(Prbar/(1-alpha)) and (1-alpha) C(h Prbar/(1-alpha)).
RateRegion outer_member(const RelayParams& params, double alpha);

struct RelayOuter {
  Envelope envelope;
  std::vector<std::pair<double, RateRegion>> per_alpha;
};

/// Union over alpha in [0, 1] (alpha_grid points, endpoints inclusive) of
/// outer_member, returned as its sampled envelope (not convexified).
RelayOuter outer_region(const RelayParams& params, int alpha_grid = kDefaultAlphaGrid,
                        int r1_samples = kDefaultEnvelopeSamples);

struct AsymptoticRegions {
  RateRegion outer;
  RateRegion achievable;
};

/// Regions as the relay power grows without bound: sum caps
/// min{C(P1bar), C(P2bar)} and C(P1bar) - C(P1bar/(1 + P2bar)).
AsymptoticRegions asymptotic_regions(const RelayParams& params);

struct Cor3Gap {
  double asymptotic_gap = 0.0;   // lemma1_h(P1bar, P2bar)
  double outer_sum_rate = 0.0;   // finite-Prbar envelope
  double achievable_sum_rate = 0.0;
  double empirical_gap = 0.0;
};

Cor3Gap cor3_gap(const RelayParams& params, const RelaySearchOptions& opts = {},
                 int alpha_grid = kDefaultAlphaGrid, int r1_samples = kDefaultEnvelopeSamples);

}  // namespace secrecy::relay
