#include "secrecy/verification.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include <fmt/format.h>

#include "secrecy/core_rates.hpp"
#include "secrecy/numerics.hpp"
#include "secrecy/regions.hpp"
#include "secrecy/relay.hpp"
#include "secrecy/wiretap.hpp"

namespace secrecy::verification {
namespace {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

class Suite {
 public:
  template <typename Fn>
  void check(const std::string& name, Fn&& fn) {
    CheckResult r;
    r.name = name;
    try {
      r.passed = fn(r.detail);
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("threw: ") + e.what();
    }
    results_.push_back(std::move(r));
  }

  void info(const std::string& name, bool holds, const std::string& detail) {
    results_.push_back(CheckResult{name, holds, true, detail});
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
};

void core_checks(Suite& s) {
  s.check("capacity increasing and concave", [](std::string& d) {
    Rng rng(11);
    for (int i = 0; i < 10000; ++i) {
      const double x = uniform(rng, 0.0, 1e4);
      const double step = uniform(rng, 1e-3, 10.0);
      const double a = capacity(x), b = capacity(x + step), c = capacity(x + 2 * step);
      if (!(b > a) || b - a < c - b - 1e-15 || a < 0.0) {
        d = fmt::format("violation at x={}", x);
        return false;
      }
    }
    d = "10^4 random triples";
    return true;
  });

  s.check("lemma1 h in [0, 0.5]", [](std::string& d) {
    Rng rng(12);
    double sup = 0.0;
    for (int i = 0; i < 100000; ++i) {
      const double x = uniform(rng, 0.0, 1e6), y = uniform(rng, 0.0, 1e6);
      const double h = lemma1_h(x, y);
      if (h < 0.0 || h > 0.5) {
        d = fmt::format("h({}, {}) = {}", x, y, h);
        return false;
      }
      sup = std::max(sup, h);
    }
    d = fmt::format("10^5 samples, sup {:.6f}", sup);
    return true;
  });

  s.check("lemma1 f and g symmetric", [](std::string& d) {
    Rng rng(13);
    for (int i = 0; i < 10000; ++i) {
      const double x = uniform(rng, 0.0, 1e3), y = uniform(rng, 0.0, 1e3);
      if (lemma1_f(x, y) != lemma1_f(y, x) || lemma1_g(x, y) != lemma1_g(y, x)) return false;
    }
    d = "10^4 pairs";
    return true;
  });

  s.check("gaussian_mi monotone under extra observations", [](std::string& d) {
    Rng rng(14);
    for (int trial = 0; trial < 500; ++trial) {
      GaussianLinearModel m;
      m.source_count = 5;
      m.target_indices = {0};
      auto row = [&] {
        std::vector<double> r(5);
        for (auto& c : r) c = uniform(rng, -2.0, 2.0);
        r[4] = 0.0;
        return r;
      };
      // Source 4 is a private noise per observation family to keep
      // covariances nonsingular.
      auto r1 = row();
      r1[4] = 1.0;
      auto r2 = row();
      r2[3] = 1.0;
      m.left_rows = {r1};
      m.right_rows = {r2};
      const double one = gaussian_mi(m, true, false);
      const double both = gaussian_mi(m, true, true);
      if (one < 0.0 || both < one - 1e-12) {
        d = fmt::format("trial {}: {} then {}", trial, one, both);
        return false;
      }
    }
    d = "500 random models";
    return true;
  });

  s.check("gaussian_mi matches capacity on scalar channels", [](std::string& d) {
    double worst = 0.0;
    for (double snr : {0.01, 0.5, 1.0, 3.0, 15.0, 100.0, 1e4}) {
      GaussianLinearModel m;
      m.source_count = 2;
      m.left_rows = {{std::sqrt(snr), 1.0}};
      m.target_indices = {0};
      worst = std::max(worst, std::abs(gaussian_mi(m, true, false) - capacity(snr)));
    }
    d = fmt::format("max deviation {:.3g}", worst);
    return worst <= 1e-9;
  });
}

void numerics_checks(Suite& s) {
  s.check("scalar search deterministic and never above the grid", [](std::string& d) {
    auto f = [](double x) { return std::sin(7.0 * x) + 0.3 * x * x; };
    const auto a = minimize_scalar(f, -3.0, 3.0, 97, 1e-10);
    const auto b = minimize_scalar(f, -3.0, 3.0, 97, 1e-10);
    bool ok = a.argument == b.argument && a.value == b.value && a.evaluations == b.evaluations;
    for (int i = 0; i < 97; ++i) ok = ok && a.value <= f(-3.0 + 6.0 * i / 96.0);
    d = fmt::format("min {:.12g} at {:.12g}", a.value, a.argument);
    return ok;
  });
}

void region_checks(Suite& s) {
  s.check("region geometry invariants", [](std::string& d) {
    Rng rng(21);
    for (int i = 0; i < 2000; ++i) {
      const double a = uniform(rng, 0.0, 3.0), b = uniform(rng, 0.0, 3.0);
      const double sum = uniform(rng, 0.0, 6.0);
      const auto box = sum_box_region(sum, a, b);
      for (const auto& v : box.vertices()) {
        if (v.r1 > a + 1e-12 || v.r2 > b + 1e-12 || v.r1 + v.r2 > sum + 1e-12) {
          d = "sum-box vertex violates a facet";
          return false;
        }
      }
      if (!is_subset(triangle_region(a, b), sum_box_region(a + b, a, b), 1e-12)) {
        d = "triangle not inside sum-box";
        return false;
      }
      const RatePair p{uniform(rng, 0.0, 3.0), uniform(rng, 0.0, 3.0)};
      if (contains(box, p, 0.0) && !contains(box, p, 0.1)) {
        d = "contains not monotone in slack";
        return false;
      }
      const auto other = sum_box_region(uniform(rng, 0.0, 6.0), uniform(rng, 0.0, 3.0),
                                        uniform(rng, 0.0, 3.0));
      const auto env = envelope_union({box, other}, 64);
      for (const auto& smp : env.samples) {
        for (const auto* r : {&box, &other}) {
          const auto top = r->upper_boundary_at(smp.r1);
          if (top && *top > smp.r2 + 1e-12) {
            d = "envelope below a member";
            return false;
          }
        }
      }
    }
    d = "2000 random regions";
    return true;
  });
}

void wiretap_checks(Suite& s) {
  using namespace wiretap;

  double worst_star_sum = -1e9;
  s.check("achievable inside outer (rho = eta = 0)", [&worst_star_sum](std::string& d) {
    Rng rng(31);
    double worst = -1e9;
    for (int i = 0; i < 1000; ++i) {
      const WiretapParams p{uniform(rng, 0, 100), uniform(rng, 0, 100), uniform(rng, 0, 10),
                            uniform(rng, 0, 10), 0.0, 0.0};
      const auto inner = achievable_region(p);
      const auto outer = outer_region(p);
      const double star_sum = r_star(p, Node::one).rate + r_star(p, Node::two).rate;
      worst = std::max(worst, region_sum_rate(inner) - outer.sum_cap);
      worst_star_sum = std::max(worst_star_sum, star_sum - outer.sum_cap);
      if (!is_subset(inner, outer.region, 1e-6)) {
        d = fmt::format("draw {} not contained", i);
        return false;
      }
    }
    d = fmt::format("10^3 draws, max(inner sum rate - sum cap) = {:.3g}", worst);
    return worst <= 1e-6;
  });
  // The corner (R1*, R2*) is not claimed jointly achievable, so its sum may
  // exceed the outer sum cap; reported only.
  s.info("R1* + R2* within outer sum cap", worst_star_sum <= 1e-6,
         fmt::format("max(R1* + R2* - sum cap) = {:.3g}", worst_star_sum));

  s.check("alpha = 1 slice equals the no-feedback rate", [](std::string& d) {
    Rng rng(32);
    for (int i = 0; i < 1000; ++i) {
      const WiretapParams p{uniform(rng, 0, 100), uniform(rng, 0, 100), uniform(rng, 0, 10),
                            uniform(rng, 0, 10), 0.0, 0.0};
      if (r_star_objective(p, Node::one, 1.0) != r1_no_feedback(p)) return false;
      if (r_star(p, Node::one).rate < r1_no_feedback(p)) return false;
    }
    d = "10^3 draws, exact equality";
    return true;
  });

  s.check("no-feedback bound never exceeds C(P)", [](std::string& d) {
    Rng rng(33);
    for (int i = 0; i < 300; ++i) {
      const WiretapParams p{uniform(rng, 0, 100), uniform(rng, 0, 100), uniform(rng, 0, 10),
                            uniform(rng, 0, 10), uniform(rng, -1, 1), uniform(rng, -1, 1)};
      if (outer_r1_no_feedback(p).value > capacity(p.p) + 1e-9) return false;
    }
    d = "300 draws with correlated noise";
    return true;
  });

  s.check("degraded ordering and half-bit gap", [](std::string& d) {
    Rng rng(34);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const double h1 = uniform(rng, 1e-3, 1.0), h2 = uniform(rng, 1e-3, 10.0);
      const auto b = degraded_bounds(uniform(rng, 0, 100), uniform(rng, 0, 100), h1, h2);
      if (!(b.achievable <= b.bound81 + 1e-12 && b.bound81 <= b.bound115 + 1e-12)) return false;
      worst = std::max(worst, b.bound81 - b.achievable);
    }
    d = fmt::format("max gap {:.6f}", worst);
    return worst <= 0.5;
  });

  s.check("degraded endpoint identity", [](std::string& d) {
    Rng rng(35);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const double h1 = uniform(rng, 1e-3, 1.0), h2 = uniform(rng, 0.0, 10.0);
      const WiretapParams p{uniform(rng, 0, 100), uniform(rng, 0, 100), h1, h2, std::sqrt(h1), 0.0};
      const double at_zero = outer_r1_objective(p, 1.0);
      const double at_inf = outer_r1_objective(p, 0.0);
      const double expect_zero = capacity(p.p) - capacity(h1 * p.p) + capacity(h2 * p.pr);
      worst = std::max({worst, std::abs(at_zero - expect_zero), std::abs(at_inf - capacity(p.p))});
    }
    d = fmt::format("max deviation {:.3g}", worst);
    return worst <= 1e-9;
  });

  s.check("feedback example cross-check", [](std::string& d) {
    const auto ex = feedback_example_rate();
    d = fmt::format("per use {:.9f}, delta {:.3g}", ex.per_use, ex.crosscheck_delta);
    return ex.per_use > 0.0 && ex.crosscheck_delta <= 1e-9 &&
           r1_no_feedback(feedback_example_params()) == 0.0;
  });

  s.check("constant-gap certificates", [](std::string& d) {
    int points = 0;
    for (double k : {0.1, 1.0, 10.0}) {
      for (double h1 : {0.5, 1.0, 2.0}) {
        for (double h2 : {0.5, 1.0, 2.0}) {
          for (int e = 0; e <= 24; ++e) {
            const auto g = constant_gap_certificate(std::pow(10.0, e / 4.0), k, h1, h2);
            if (!g.gap1_holds || !g.gap2_holds || g.gap1 < -1e-12 || g.gap2 < -1e-12) return false;
            ++points;
          }
        }
      }
    }
    d = fmt::format("{} sweep points", points);
    return true;
  });

  {
    std::ostringstream os;
    bool all = true;
    for (double p : {1e6, 1e8, 1e10}) {
      const auto demo = unbounded_gap_demo(p);
      all = all && demo.saturated;
      os << fmt::format("P={:g}: alpha=0.5 rate {:.6f} vs 0.5C(P) {:.6f}, bound {:.6f}; ", p,
                        demo.feedback_achievable, demo.half_capacity, demo.no_feedback_upper);
    }
    s.info("Pr = P^(1/4) rate reaches 0.5 C(P)", all, os.str());
  }
}

void relay_checks(Suite& s) {
  using namespace relay;

  s.check("quantization noise closed form vs bisection", [](std::string& d) {
    Rng rng(41);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const double alpha = uniform(rng, 0.05, 0.95);
      const double pp = uniform(rng, 0.0, 100.0);
      const double pr = uniform(rng, 0.1, 100.0);
      const double closed = quantization_noise(alpha, pp, pr);
      const double u = bisect_root(
          [&](double log_s) { return quantization_residual(alpha, pp, pr, std::exp(log_s)); }, -300.0,
          300.0, 1e-13);
      worst = std::max(worst, std::abs(std::exp(u) - closed) / std::max(1.0, closed));
    }
    d = fmt::format("max relative deviation {:.3g}", worst);
    return worst <= 1e-9;
  });

  s.check("large-relay-power slice increasing in alpha", [](std::string& d) {
    Rng rng(42);
    for (int trial = 0; trial < 50; ++trial) {
      const double p1 = uniform(rng, 0.1, 100.0), p2 = uniform(rng, 0.1, 100.0);
      double prev = -1.0;
      for (int i = 1; i <= 128; ++i) {
        const double a = static_cast<double>(i) / 128.0;
        const double v = a * (capacity(p1 / a) - capacity((p1 / a) / (1.0 + p2 / a)));
        if (v < prev - 1e-12) {
          d = fmt::format("decrease at alpha={} for ({}, {})", a, p1, p2);
          return false;
        }
        prev = v;
      }
    }
    d = "50 power pairs x 128 alphas";
    return true;
  });

  s.check("relay achievable inside outer envelope", [](std::string& d) {
    Rng rng(43);
    for (int i = 0; i < 100; ++i) {
      const RelayParams p{uniform(rng, 0, 100), uniform(rng, 0, 100), uniform(rng, 0, 100),
                          uniform(rng, 0.1, 10)};
      const auto inner = achievable_region(p);
      const auto outer = outer_region(p);
      if (!is_subset(inner, outer.envelope, 1e-6)) {
        d = fmt::format("draw {} not contained", i);
        return false;
      }
    }
    d = "100 draws";
    return true;
  });

  const RelayParams base{3.0, 3.0, 0.0, 1.0};
  const double limit = lemma1_f(3.0, 3.0);
  std::vector<double> rates;
  for (double prbar : {1e2, 1e4, 1e6}) {
    RelayParams p = base;
    p.prbar = prbar;
    rates.push_back(achievable_r1(p).rate);
  }
  s.check("relay rate nondecreasing in relay power, below its limit", [&](std::string& d) {
    d = fmt::format("{:.6f} {:.6f} {:.6f} (limit {:.6f})", rates[0], rates[1], rates[2], limit);
    return rates[0] <= rates[1] && rates[1] <= rates[2] && rates[2] <= limit + 1e-12;
  });
  s.info("relay rate within 1e-3 of its limit at Prbar = 1e6", std::abs(rates[2] - limit) <= 1e-3,
         fmt::format("distance {:.6f}", limit - rates[2]));

  s.check("asymptotic gap identity", [](std::string& d) {
    Rng rng(44);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const RelayParams p{uniform(rng, 0, 1e3), uniform(rng, 0, 1e3), 1.0, 1.0};
      const auto a = asymptotic_regions(p);
      const double diff = region_sum_rate(a.outer) - region_sum_rate(a.achievable);
      worst = std::max(worst, std::abs(diff - lemma1_h(p.p1bar, p.p2bar)));
    }
    d = fmt::format("max deviation {:.3g}", worst);
    return worst <= 1e-12;
  });
}

}  // namespace

std::vector<CheckResult> run_invariant_suite() {
  Suite s;
  core_checks(s);
  numerics_checks(s);
  region_checks(s);
  wiretap_checks(s);
  relay_checks(s);
  return s.take();
}

}  // namespace secrecy::verification
