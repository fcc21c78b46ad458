#include "secrecy/wiretap.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "secrecy/core_rates.hpp"
#include "secrecy/errors.hpp"

namespace secrecy::wiretap {
namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw DomainError(message);
}

// The objectives below sit on ratios that may round a hair below zero.
double C0(double x) { return capacity(std::max(x, 0.0)); }

// C(signal (1 - sqrt(h) c t)^2 / ((1 - c^2 t)(h signal t + 1))): the
// conditional term once sigma^2 has been replaced by t = 1/(1+sigma^2).
double legit_given_eve(double signal, double h, double corr, double t) {
  const double denom = (1.0 - corr * corr * t) * (h * signal * t + 1.0);
  if (!(denom > 0.0)) return std::numeric_limits<double>::infinity();
  const double lead = 1.0 - std::sqrt(h) * corr * t;
  return C0(signal * lead * lead / denom);
}

// C(signal (1 + (h - 2 sqrt(h) c) t) / (1 - c^2 t)) in the same substitution.
double joint_observation(double signal, double h, double corr, double t) {
  const double denom = 1.0 - corr * corr * t;
  if (!(denom > 0.0)) return std::numeric_limits<double>::infinity();
  return C0(signal * (1.0 + (h - 2.0 * std::sqrt(h) * corr) * t) / denom);
}

double t_upper(double corr_a, double corr_b = 0.0) {
  if (std::abs(corr_a) == 1.0 || std::abs(corr_b) == 1.0) return 1.0 / (1.0 + kSigma2Floor);
  return 1.0;
}

InfimumResult infimum_over_t(const ScalarFunction& objective, double limit, double t_max,
                             const SearchOptions& opts) {
  const OptResult opt = minimize_scalar(objective, 0.0, t_max, opts.grid, opts.tol);
  InfimumResult r;
  r.limit_value = limit;
  r.t_one_value = objective(t_max);
  r.t_max = t_max;
  if (limit <= opt.value) {
    r.value = limit;
    r.t_star = 0.0;
    r.at_limit = true;
  } else {
    r.value = opt.value;
    r.t_star = opt.argument;
    r.at_limit = opt.argument == 0.0;
  }
  r.sigma2_star = r.t_star > 0.0 ? 1.0 / r.t_star - 1.0 : std::numeric_limits<double>::infinity();
  return r;
}

WiretapParams swapped(const WiretapParams& p) {
  return WiretapParams{p.pr, p.p, p.h2, p.h1, p.eta, p.rho};
}

}  // namespace

void WiretapParams::validate() const {
  auto nonneg = [](double x) { return std::isfinite(x) && x >= 0.0; };
  require(nonneg(p), "p must be finite and nonnegative");
  require(nonneg(pr), "pr must be finite and nonnegative");
  require(nonneg(h1), "h1 must be finite and nonnegative");
  require(nonneg(h2), "h2 must be finite and nonnegative");
  require(std::isfinite(rho) && std::abs(rho) <= 1.0, "rho must lie in [-1, 1]");
  require(std::isfinite(eta) && std::abs(eta) <= 1.0, "eta must lie in [-1, 1]");
}

double r1_no_feedback(const WiretapParams& params) {
  params.validate();
  return pos_part(capacity(params.p) - capacity(params.h1 * params.p / (params.h2 * params.pr + 1.0)));
}

double r2_no_feedback(const WiretapParams& params) { return r1_no_feedback(swapped(params)); }

double r_star_objective(const WiretapParams& params, Node which, double alpha) {
  const WiretapParams& q = which == Node::one ? params : swapped(params);
  if (!(alpha > 0.0) || alpha > 1.0) throw DomainError("alpha must lie in (0, 1]");
  const double leak = capacity(q.h1 * q.p / (q.h2 * q.pr + 1.0));
  const double key = pos_part(capacity(q.pr) - capacity(q.h2 * q.pr / (q.h1 * q.p + 1.0)));
  const double key_share = (1.0 - alpha) / alpha;
  return alpha * pos_part(capacity(q.p) - pos_part(leak - key_share * key));
}

StarRate r_star(const WiretapParams& params, Node which, const SearchOptions& opts) {
  params.validate();
  const OptResult opt = maximize_scalar(
      [&](double a) { return r_star_objective(params, which, a); }, kAlphaFloor, 1.0, opts.grid,
      opts.tol);
  return StarRate{opt.value, opt.argument};
}

RateRegion achievable_region(const WiretapParams& params, const SearchOptions& opts) {
  return triangle_region(r_star(params, Node::one, opts).rate, r_star(params, Node::two, opts).rate);
}

double outer_r1_objective(const WiretapParams& params, double t) {
  return legit_given_eve(params.p, params.h1, params.rho, t) + C0(params.h2 * params.pr * t);
}

InfimumResult outer_r1_no_feedback(const WiretapParams& params, const SearchOptions& opts) {
  params.validate();
  return infimum_over_t([&](double t) { return outer_r1_objective(params, t); },
                        capacity(params.p), t_upper(params.rho), opts);
}

double outer_sum_branch_objective(const WiretapParams& params, Node branch, double t) {
  const WiretapParams& q = branch == Node::one ? params : swapped(params);
  return legit_given_eve(q.p, q.h1, q.rho, t) + joint_observation(q.pr, q.h2, q.eta, t);
}

OuterRegion outer_region(const WiretapParams& params, const SearchOptions& opts) {
  params.validate();
  const double limit = capacity(params.p) + capacity(params.pr);
  const double t_max = t_upper(params.rho, params.eta);
  OuterRegion out;
  out.branch1 = infimum_over_t(
      [&](double t) { return outer_sum_branch_objective(params, Node::one, t); }, limit, t_max, opts);
  out.branch2 = infimum_over_t(
      [&](double t) { return outer_sum_branch_objective(params, Node::two, t); }, limit, t_max, opts);
  out.r1_cap = capacity(params.p);
  out.r2_cap = capacity(params.pr);
  out.sum_cap = std::min(out.branch1.value, out.branch2.value);
  out.region = sum_box_region(out.sum_cap, out.r1_cap, out.r2_cap);
  return out;
}

DegradedBounds degraded_bounds(double p, double pr, double h1, double h2) {
  require(std::isfinite(p) && p >= 0.0, "p must be finite and nonnegative");
  require(std::isfinite(pr) && pr >= 0.0, "pr must be finite and nonnegative");
  require(std::isfinite(h1) && h1 > 0.0 && h1 <= 1.0, "degraded bounds need 0 < h1 <= 1");
  require(std::isfinite(h2) && h2 > 0.0, "degraded bounds need h2 > 0");
  DegradedBounds b;
  const double cp = capacity(p);
  b.achievable = cp - capacity(h1 * p / (h2 * pr + 1.0));
  b.bound81 = std::min(cp, cp - capacity(h1 * p) + capacity(h2 * pr));
  const double effective_pr = pr + (1.0 - h1) / h2;
  b.bound115 = std::min(cp, capacity((h2 / h1) * effective_pr));
  return b;
}

WiretapParams feedback_example_params() { return WiretapParams{3.0, 1.0, 2.0, 1.0, 0.0, 0.0}; }

FeedbackExample feedback_example_rate() {
  const double a = std::numbers::sqrt2;
  // Sources: X1, X2, J1, J2, N2, N3, N1', N2'.
  GaussianLinearModel model;
  model.source_count = 8;
  model.left_rows = {{1, 0, 0, 0, 0, 1, 1, 0}};                // Y    = X1 + N3 + N1'
  model.right_rows = {{0, 1, a, 0, 1, 0, 0, 0},                // Ye,1 = X2 + a J1 + N2
                      {a, a, 0, 1, 0, a, 0, 1}};               // Ye,2 = a(X1 + X2 + N3) + J2 + N2'
  model.target_indices = {0};

  FeedbackExample ex;
  ex.per_two_uses = pos_part(gaussian_mi(model, true, false) - gaussian_mi(model, false, true));
  ex.per_use = 0.5 * ex.per_two_uses;
  const double a2 = a * a;
  ex.closed_form = capacity(0.5) - capacity(a2 / (2.0 * a2 + 2.0 - a2 / (a2 + 2.0)));
  ex.crosscheck_delta = std::abs(ex.per_two_uses - ex.closed_form);
  return ex;
}

GapCertificate constant_gap_certificate(double p, double k, double h1, double h2) {
  require(std::isfinite(p) && p > 0.0, "p must be positive");
  require(std::isfinite(k) && k > 0.0, "k must be positive");
  require(std::isfinite(h1) && h1 > 0.0, "h1 must be positive");
  require(std::isfinite(h2) && h2 > 0.0, "h2 must be positive");

  const WiretapParams params{p, k * p, h1, h2, 0.0, 0.0};
  const double sum_bound = outer_sum_branch_objective(params, Node::one, 1.0);

  GapCertificate g;
  g.gap1 = sum_bound - r1_no_feedback(params);
  g.gap2 = sum_bound - r2_no_feedback(params);
  g.gap1_const = capacity(1.0 / h1) + 0.5 * std::log2(std::max(1.0, (h2 + 1.0) * k)) +
                 capacity(h1 / (h2 * k));
  g.gap2_const = capacity(1.0 / h1) + 0.5 * std::log2(h2 + 1.0) + capacity(h2 * k / h1);
  constexpr double kRounding = 1e-12;
  g.gap1_holds = g.gap1 <= g.gap1_const + kRounding;
  g.gap2_holds = g.gap2 <= g.gap2_const + kRounding;
  return g;
}

UnboundedGapDemo unbounded_gap_demo(double p) {
  require(std::isfinite(p) && p >= 1.0, "unbounded gap demo needs finite p >= 1");
  const WiretapParams params{p, std::pow(p, 0.25), 1.0, 1.0, 0.0, 0.0};
  UnboundedGapDemo d;
  d.pr = params.pr;
  const double cp = capacity(p);
  d.no_feedback_upper = std::min(cp, capacity(d.pr) + 0.5);
  d.feedback_achievable = r_star_objective(params, Node::one, 0.5);
  d.half_capacity = 0.5 * cp;
  d.saturated = d.feedback_achievable == d.half_capacity;
  d.conditions_hold = (capacity(d.pr) + 0.5 < 0.4 * cp) && (std::sqrt(p) > d.pr + 1.0);
  return d;
}

RateRegion binary_deterministic_region() { return sum_box_region(1.0, 1.0, 1.0); }

}  // namespace secrecy::wiretap
