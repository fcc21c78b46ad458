#include "secrecy/regions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "secrecy/errors.hpp"

namespace secrecy {
namespace {

void require_cap(double x, const char* what) {
  if (!std::isfinite(x) || x < 0.0) {
    throw DomainError(std::string(what) + " must be finite and nonnegative");
  }
}

double cross(RatePair o, RatePair a, RatePair b) {
  return (a.r1 - o.r1) * (b.r2 - o.r2) - (a.r2 - o.r2) * (b.r1 - o.r1);
}

std::vector<RatePair> prune(std::vector<RatePair> pts) {
  std::vector<RatePair> out;
  for (const auto& p : pts) {
    if (out.empty() || !(out.back() == p)) out.push_back(p);
  }
  while (out.size() > 1 && out.back() == out.front()) out.pop_back();
  if (out.size() < 3) return out;

  bool changed = true;
  while (changed && out.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < out.size(); ++i) {
      const RatePair& prev = out[(i + out.size() - 1) % out.size()];
      const RatePair& next = out[(i + 1) % out.size()];
      if (i != 0 && cross(prev, out[i], next) == 0.0) {
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  return out;
}

}  // namespace

RateRegion::RateRegion(std::vector<RatePair> vertices) {
  for (const auto& v : vertices) {
    if (!std::isfinite(v.r1) || !std::isfinite(v.r2) || v.r1 < 0.0 || v.r2 < 0.0) {
      throw DomainError("region vertices must be finite and nonnegative");
    }
  }
  if (vertices.empty() || !(vertices.front() == RatePair{})) {
    throw DomainError("region vertex list must start at the origin");
  }
  vertices_ = prune(std::move(vertices));
}

double RateRegion::r1_extent() const {
  double m = 0.0;
  for (const auto& v : vertices_) m = std::max(m, v.r1);
  return m;
}

double RateRegion::r2_extent() const {
  double m = 0.0;
  for (const auto& v : vertices_) m = std::max(m, v.r2);
  return m;
}

std::optional<double> RateRegion::upper_boundary_at(double r1) const {
  if (r1 < 0.0 || r1 > r1_extent()) return std::nullopt;
  double best = -std::numeric_limits<double>::infinity();
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const RatePair& a = vertices_[i];
    const RatePair& b = vertices_[(i + 1) % n];
    if (a.r1 == r1) best = std::max(best, a.r2);
    const double lo = std::min(a.r1, b.r1);
    const double hi = std::max(a.r1, b.r1);
    if (lo < r1 && r1 < hi) {
      const double w = (r1 - a.r1) / (b.r1 - a.r1);
      best = std::max(best, a.r2 + w * (b.r2 - a.r2));
    }
  }
  if (!std::isfinite(best)) best = 0.0;
  return best;
}

RateRegion triangle_region(double r1max, double r2max) {
  require_cap(r1max, "r1max");
  require_cap(r2max, "r2max");
  return RateRegion({{0.0, 0.0}, {r1max, 0.0}, {0.0, r2max}});
}

RateRegion sum_box_region(double sum_cap, double r1_cap, double r2_cap) {
  require_cap(sum_cap, "sum cap");
  require_cap(r1_cap, "r1 cap");
  require_cap(r2_cap, "r2 cap");
  const double a = std::min(r1_cap, sum_cap);
  const double b = std::min(r2_cap, sum_cap);
  // Corner where r1 = a meets the sum facet (or the r2 cap), and its mirror.
  const RatePair right_top{a, std::min(b, sum_cap - a)};
  const RatePair top_right{std::min(a, sum_cap - b), b};
  return RateRegion({{0.0, 0.0}, {a, 0.0}, right_top, top_right, {0.0, b}});
}

bool contains(const RateRegion& region, RatePair p, double slack) {
  if (p.r1 < -slack || p.r2 < -slack) return false;
  if (p.r1 > region.r1_extent() + slack || p.r2 > region.r2_extent() + slack) return false;
  const auto& v = region.vertices();
  const std::size_t n = v.size();
  if (n < 2) return true;
  for (std::size_t i = 0; i < n; ++i) {
    const RatePair& a = v[i];
    const RatePair& b = v[(i + 1) % n];
    const double dx = b.r1 - a.r1;
    const double dy = b.r2 - a.r2;
    const double len = std::hypot(dx, dy);
    if (len == 0.0) continue;
    // Outward normal of a counterclockwise edge is (dy, -dx).
    const double dist = (dy * (p.r1 - a.r1) - dx * (p.r2 - a.r2)) / len;
    if (dist > slack) return false;
  }
  return true;
}

bool contains(const Envelope& envelope, RatePair p, double slack) {
  if (envelope.samples.empty()) return false;
  if (p.r1 < -slack || p.r2 < -slack) return false;
  const auto it = std::lower_bound(
      envelope.samples.begin(), envelope.samples.end(), p.r1 - slack,
      [](const RatePair& s, double r1) { return s.r1 < r1; });
  if (it == envelope.samples.end()) return false;
  return p.r2 <= it->r2 + slack;
}

bool is_subset(const RateRegion& inner, const RateRegion& outer, double slack) {
  return std::all_of(inner.vertices().begin(), inner.vertices().end(),
                     [&](const RatePair& v) { return contains(outer, v, slack); });
}

bool is_subset(const RateRegion& inner, const Envelope& outer, double slack) {
  for (const auto& v : inner.vertices()) {
    if (!contains(outer, v, slack)) return false;
  }
  for (const auto& s : outer.samples) {
    const auto top = inner.upper_boundary_at(s.r1);
    if (top && *top > s.r2 + slack) return false;
  }
  return true;
}

Envelope envelope_union(const std::vector<RateRegion>& regions, int r1_samples) {
  if (regions.empty()) throw DomainError("envelope_union needs at least one region");
  if (r1_samples < 2) throw DomainError("envelope_union needs r1_samples >= 2");

  double extent = 0.0;
  for (const auto& r : regions) extent = std::max(extent, r.r1_extent());

  Envelope env;
  if (extent == 0.0) {
    double top = 0.0;
    for (const auto& r : regions) top = std::max(top, r.r2_extent());
    env.samples.push_back({0.0, top});
    return env;
  }

  env.samples.reserve(static_cast<std::size_t>(r1_samples));
  for (int i = 0; i < r1_samples; ++i) {
    const double r1 = i == r1_samples - 1
                          ? extent
                          : extent * static_cast<double>(i) / static_cast<double>(r1_samples - 1);
    double top = 0.0;
    for (const auto& r : regions) {
      if (const auto b = r.upper_boundary_at(r1)) top = std::max(top, *b);
    }
    env.samples.push_back({r1, top});
  }
  return env;
}

RateRegion convex_hull(const Envelope& envelope) {
  // Upper hull (monotone chain) of the samples plus the two axis anchors,
  // walked from the r1 axis back to the r2 axis.
  std::vector<RatePair> pts;
  double top = 0.0;
  for (const auto& s : envelope.samples) top = std::max(top, s.r2);
  pts.push_back({0.0, top});
  for (const auto& s : envelope.samples) pts.push_back(s);
  const double extent = envelope.samples.empty() ? 0.0 : envelope.samples.back().r1;
  pts.push_back({extent, 0.0});
  std::sort(pts.begin(), pts.end(), [](const RatePair& a, const RatePair& b) {
    return a.r1 < b.r1 || (a.r1 == b.r1 && a.r2 > b.r2);
  });

  std::vector<RatePair> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) >= 0.0) {
      hull.pop_back();
    }
    hull.push_back(p);
  }

  std::vector<RatePair> ccw{{0.0, 0.0}};
  if (extent > 0.0) ccw.push_back({extent, 0.0});
  for (auto it = hull.rbegin(); it != hull.rend(); ++it) {
    if (it->r1 == extent && it->r2 == 0.0) continue;
    ccw.push_back(*it);
  }
  return RateRegion(std::move(ccw));
}

double region_sum_rate(const RateRegion& region) {
  double best = 0.0;
  for (const auto& v : region.vertices()) best = std::max(best, v.r1 + v.r2);
  return best;
}

double region_sum_rate(const Envelope& envelope) {
  double best = 0.0;
  for (const auto& s : envelope.samples) best = std::max(best, s.r1 + s.r2);
  return best;
}

}  // namespace secrecy
