#include "secrecy/relay.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "secrecy/core_rates.hpp"
#include "secrecy/errors.hpp"

namespace secrecy::relay {
namespace {

void require(bool ok, const char* message) {
  if (!ok) throw DomainError(message);
}

RelayRate cf_rate(double source_bar, double jammer_bar, double forward_snr_bar,
                  const RelaySearchOptions& opts) {
  if (forward_snr_bar == 0.0 || source_bar == 0.0) return {};

  auto slice = [&](double alpha) -> RelayRate {
    const double hi = source_bar / alpha;
    const OptResult inner = maximize_scalar(
        [&](double pp) { return cf_objective(alpha, pp, jammer_bar, forward_snr_bar); }, 0.0, hi,
        opts.inner_grid, opts.tol);
    return {inner.value, alpha, inner.argument};
  };

  const OptResult outer = maximize_scalar([&](double a) { return slice(a).rate; }, kAlphaMin,
                                          kAlphaMax, opts.alpha_grid, opts.tol);
  if (outer.value <= 0.0) return {};
  return slice(outer.argument);
}

}  // namespace

void RelayParams::validate() const {
  auto nonneg = [](double x) { return std::isfinite(x) && x >= 0.0; };
  require(nonneg(p1bar), "p1bar must be finite and nonnegative");
  require(nonneg(p2bar), "p2bar must be finite and nonnegative");
  require(nonneg(prbar), "prbar must be finite and nonnegative");
  require(std::isfinite(h) && h > 0.0, "h must be finite and positive");
}

double quantization_noise(double alpha, double p_prime, double forward_snr) {
  require(alpha > 0.0 && alpha < 1.0, "alpha must lie in (0, 1)");
  require(std::isfinite(p_prime) && p_prime >= 0.0, "p_prime must be finite and nonnegative");
  require(!std::isnan(forward_snr) && forward_snr >= 0.0, "forward SNR must be nonnegative");
  if (forward_snr == 0.0) throw NoForwardingError("relay has no forwarding capacity");
  const double denom = std::expm1((1.0 - alpha) / alpha * std::log1p(forward_snr));
  return (p_prime + 1.0) / denom;
}

double quantization_residual(double alpha, double p_prime, double forward_snr, double sigma2) {
  return alpha * capacity((p_prime + 1.0) / sigma2) - (1.0 - alpha) * capacity(forward_snr);
}

double cf_objective(double alpha, double p_prime, double jammer_bar, double forward_snr_bar) {
  const double jammer = jammer_bar / alpha;
  const double forward_snr = forward_snr_bar / (1.0 - alpha);
  const double sigma2 = quantization_noise(alpha, p_prime, forward_snr);
  return alpha * pos_part(capacity(p_prime / (1.0 + sigma2)) - capacity(p_prime / (1.0 + jammer)));
}

RelayRate achievable_r1_at_alpha(const RelayParams& params, double alpha,
                                 const RelaySearchOptions& opts) {
  params.validate();
  require(alpha > 0.0 && alpha < 1.0, "alpha must lie in (0, 1)");
  if (params.prbar == 0.0 || params.p1bar == 0.0) return {0.0, alpha, 0.0};
  const OptResult inner = maximize_scalar(
      [&](double pp) { return cf_objective(alpha, pp, params.p2bar, params.prbar); }, 0.0,
      params.p1bar / alpha, opts.inner_grid, opts.tol);
  return {inner.value, alpha, inner.argument};
}

RelayRate achievable_r1(const RelayParams& params, const RelaySearchOptions& opts) {
  params.validate();
  return cf_rate(params.p1bar, params.p2bar, params.prbar, opts);
}

RelayRate achievable_r2(const RelayParams& params, const RelaySearchOptions& opts) {
  params.validate();
  return cf_rate(params.p2bar, params.p1bar, params.h * params.prbar, opts);
}

RateRegion achievable_region(const RelayParams& params, const RelaySearchOptions& opts) {
  return triangle_region(achievable_r1(params, opts).rate, achievable_r2(params, opts).rate);
}

double time_scaled_capacity(double x, double share) {
  if (share <= 0.0) return 0.0;
  return share * capacity(x / share);
}

RateRegion outer_member(const RelayParams& params, double alpha) {
  require(alpha >= 0.0 && alpha <= 1.0, "alpha must lie in [0, 1]");
  const double sum_cap = std::min(time_scaled_capacity(params.p1bar, alpha),
                                  time_scaled_capacity(params.p2bar, alpha));
  const double r1_cap = time_scaled_capacity(params.prbar, 1.0 - alpha);
  const double r2_cap = time_scaled_capacity(params.h * params.prbar, 1.0 - alpha);
  return sum_box_region(sum_cap, r1_cap, r2_cap);
}

RelayOuter outer_region(const RelayParams& params, int alpha_grid, int r1_samples) {
  params.validate();
  require(alpha_grid >= 3, "alpha grid needs at least 3 points");
  RelayOuter out;
  std::vector<RateRegion> members;
  out.per_alpha.reserve(static_cast<std::size_t>(alpha_grid));
  for (int i = 0; i < alpha_grid; ++i) {
    const double alpha = i == alpha_grid - 1 ? 1.0 : static_cast<double>(i) / (alpha_grid - 1);
    out.per_alpha.emplace_back(alpha, outer_member(params, alpha));
    members.push_back(out.per_alpha.back().second);
  }
  out.envelope = envelope_union(members, r1_samples);
  return out;
}

AsymptoticRegions asymptotic_regions(const RelayParams& params) {
  params.validate();
  const double outer_cap = lemma1_g(params.p1bar, params.p2bar);
  const double achievable_cap = lemma1_f(params.p1bar, params.p2bar);
  return {sum_box_region(outer_cap, outer_cap, outer_cap),
          sum_box_region(achievable_cap, achievable_cap, achievable_cap)};
}

Cor3Gap cor3_gap(const RelayParams& params, const RelaySearchOptions& opts, int alpha_grid,
                 int r1_samples) {
  params.validate();
  Cor3Gap g;
  g.asymptotic_gap = lemma1_h(params.p1bar, params.p2bar);
  g.outer_sum_rate = region_sum_rate(outer_region(params, alpha_grid, r1_samples).envelope);
  g.achievable_sum_rate = region_sum_rate(achievable_region(params, opts));
  g.empirical_gap = g.outer_sum_rate - g.achievable_sum_rate;
  return g;
}

}  // namespace secrecy::relay
