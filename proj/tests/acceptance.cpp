// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "secrecy/core_rates.hpp"
#include "secrecy/numerics.hpp"
#include "secrecy/regions.hpp"
#include "secrecy/relay.hpp"
#include "secrecy/wiretap.hpp"

using namespace secrecy;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

Outcome keyed_minimizer() {
  const auto r = wiretap::outer_r1_no_feedback({100, 5, 1, 10, 0, 0});
  const bool ok = std::abs(r.t_star - 0.09) <= 0.02 && r.value < r.t_one_value &&
                  r.value < r.limit_value;
  return {ok, "t* = " + num(r.t_star) + ", inf = " + num(r.value) + ", t=1: " +
                  num(r.t_one_value) + ", t->0: " + num(r.limit_value)};
}

Outcome sum_branch_minimizer() {
  const auto o = wiretap::outer_region({100, 5, 1, 10, 0, 0});
  const double c100 = capacity(100);
  const bool ok = o.branch1.value < 3.24 && std::abs(o.branch1.t_star - 0.32) <= 0.03 &&
                  std::abs(c100 - 3.3291) <= 5e-4;
  return {ok, "branch-1 inf = " + num(o.branch1.value) + " at t* = " + num(o.branch1.t_star) +
                  ", C(100) = " + num(c100)};
}

Outcome feedback_example() {
  const auto fx = wiretap::feedback_example_rate();
  const double nf = wiretap::r1_no_feedback({3, 1, 2, 1, 0, 0});
  const bool ok = fx.per_use > 0.0 && nf == 0.0 && fx.crosscheck_delta <= 1e-9;
  return {ok, "per use " + num(fx.per_use) + ", no-feedback " + num(nf) + ", delta " +
                  num(fx.crosscheck_delta)};
}

Outcome lemma_h_bounds() {
  std::mt19937_64 rng(1001);
  std::uniform_real_distribution<double> u(0.0, 1e6);
  double lo = 1.0, sup = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double h = lemma1_h(u(rng), u(rng));
    lo = std::min(lo, h);
    sup = std::max(sup, h);
  }
  double near_equal = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double x = 1e5 + u(rng);
    near_equal = std::max(near_equal, lemma1_h(x, x * (1.0 + 1e-3 * i / 1000.0)));
  }
  const bool ok = lo >= 0.0 && sup <= 0.5 && near_equal <= 0.5 && near_equal > 0.49;
  return {ok, "min " + num(lo) + ", sup " + num(sup) + ", sup near-equal " + num(near_equal)};
}

Outcome degraded_half_bit() {
  std::mt19937_64 rng(1002);
  std::uniform_real_distribution<double> pw(0.0, 1000.0), g1(0.0, 1.0), g2(0.0, 10.0);
  double worst_gap = 0.0, min_gap = 1.0;
  bool ordered = true;
  for (int i = 0; i < 1000; ++i) {
    double h1 = g1(rng), h2 = g2(rng);
    if (h1 == 0.0) h1 = 1.0;
    if (h2 == 0.0) h2 = 1.0;
    const auto d = wiretap::degraded_bounds(pw(rng), pw(rng), h1, h2);
    const double gap = d.bound81 - d.achievable;
    worst_gap = std::max(worst_gap, gap);
    min_gap = std::min(min_gap, gap);
    ordered = ordered && d.achievable <= d.bound81 && d.bound81 <= d.bound115;
  }
  const bool ok = ordered && min_gap >= 0.0 && worst_gap <= 0.5;
  return {ok, "gap range [" + num(min_gap) + ", " + num(worst_gap) + "], ordering " +
                  (ordered ? "holds" : "violated")};
}

Outcome constant_gap() {
  int points = 0, violations = 0;
  for (double k : {0.1, 1.0, 10.0}) {
    for (double h1 : {0.5, 1.0, 2.0}) {
      for (double h2 : {0.5, 1.0, 2.0}) {
        for (int e = 0; e <= 24; ++e) {
          const double p = std::pow(10.0, e / 4.0);
          const auto g = wiretap::constant_gap_certificate(p, k, h1, h2);
          ++points;
          if (!(g.gap1 <= g.gap1_const) || !(g.gap2 <= g.gap2_const)) ++violations;
        }
      }
    }
  }
  return {violations == 0, std::to_string(points) + " points, " + std::to_string(violations) +
                               " violations"};
}

Outcome unbounded_gap() {
  bool ok = true;
  std::string detail;
  double prev_gap = -INFINITY;
  for (double p : {1e6, 1e8, 1e10}) {
    const auto d = wiretap::unbounded_gap_demo(p);
    const double gap = d.feedback_achievable - d.no_feedback_upper;
    const bool row = d.conditions_hold && std::abs(d.feedback_achievable - d.half_capacity) <= 1e-9 &&
                     gap > 0.0 && gap > prev_gap;
    ok = ok && row;
    prev_gap = gap;
    detail += "P=" + num(p) + ": achievable " + num(d.feedback_achievable) + " vs 0.5C(P) " +
              num(d.half_capacity) + ", gap " + num(gap) + (d.conditions_hold ? "" : " (conditions fail)") +
              "; ";
  }
  return {ok, detail};
}

Outcome relay_half_bit() {
  const relay::RelayParams p{3, 3, 1e6, 1};
  const auto g = relay::cor3_gap(p);
  const auto a = relay::asymptotic_regions(p);
  const double algebraic = region_sum_rate(a.outer) - region_sum_rate(a.achievable);
  const bool ok = g.empirical_gap <= 0.5 + 1e-3 && std::abs(algebraic - lemma1_h(3, 3)) <= 1e-12;
  return {ok, "empirical gap " + num(g.empirical_gap) + ", asymptotic gap " + num(algebraic) +
                  " vs h(3,3) " + num(lemma1_h(3, 3))};
}

Outcome quantization_oracle() {
  std::mt19937_64 rng(1003);
  std::uniform_real_distribution<double> a(0.01, 0.99), pp(0.0, 100.0), pr(1e-3, 100.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double al = a(rng), p = pp(rng), r = pr(rng);
    const double closed = relay::quantization_noise(al, p, r);
    const auto residual = [&](double log_s) {
      return relay::quantization_residual(al, p, r, std::exp(log_s));
    };
    const double root = std::exp(bisect_root(residual, std::log(closed) - 30.0,
                                             std::log(closed) + 30.0, 1e-15));
    worst = std::max(worst, std::abs(root - closed) / std::max(1.0, closed));
  }
  return {worst <= 1e-9, "max scaled deviation " + num(worst)};
}

Outcome containment() {
  std::mt19937_64 rng(1004);
  std::uniform_real_distribution<double> pw(0.0, 100.0), g(0.0, 10.0), gr(0.01, 10.0);
  int wiretap_bad = 0, relay_bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const wiretap::WiretapParams p{pw(rng), pw(rng), g(rng), g(rng), 0, 0};
    if (!is_subset(wiretap::achievable_region(p), wiretap::outer_region(p).region, 1e-6)) ++wiretap_bad;
  }
  for (int i = 0; i < 100; ++i) {
    const relay::RelayParams p{pw(rng), pw(rng), pw(rng), gr(rng)};
    if (!is_subset(relay::achievable_region(p), relay::outer_region(p).envelope, 1e-6)) ++relay_bad;
  }
  return {wiretap_bad == 0 && relay_bad == 0,
          "wiretap " + std::to_string(wiretap_bad) + "/1000, relay " + std::to_string(relay_bad) +
              "/100 outside"};
}

Outcome binary_region() {
  const double s = region_sum_rate(wiretap::binary_deterministic_region());
  return {s == 1.0, "sum rate " + num(s)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"keyed single-user bound minimizer", keyed_minimizer},
      {"sum-rate branch minimizer and C(100)", sum_branch_minimizer},
      {"feedback beats no-feedback example", feedback_example},
      {"lemma h within [0, 0.5]", lemma_h_bounds},
      {"degraded half-bit gap and ordering", degraded_half_bit},
      {"constant-gap certificates", constant_gap},
      {"unbounded gap with Pr = P^(1/4)", unbounded_gap},
      {"relay half-bit gap", relay_half_bit},
      {"quantization noise closed form vs bisection", quantization_oracle},
      {"achievable inside outer", containment},
      {"binary deterministic sum rate", binary_region},
  };

  const auto start = std::chrono::steady_clock::now();
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    if (!o.ok) ++failed;
    std::printf("%s %2zu %s: %s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.c_str());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%zu/%zu criteria passed in %.1f s\n", criteria.size() - failed, criteria.size(), secs);
  return failed == 0 ? 0 : 1;
}
