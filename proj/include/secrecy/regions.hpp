#pragma once

#include <optional>
#include <vector>

namespace secrecy {

/// Rate pair (R1, R2) in bits per channel use.
struct RatePair {
  double r1 = 0.0;
  double r2 = 0.0;

  friend bool operator==(const RatePair&, const RatePair&) = default;
};

/// Downward-closed convex polygon in the nonnegative quadrant. Vertices are
/// listed counterclockwise starting at the origin; degenerate regions (a
/// segment or the origin alone) keep two or one vertices.
class RateRegion {
 public:
  RateRegion() : vertices_{RatePair{}} {}

  /// Builds a region from a counterclockwise vertex list. Consecutive
  /// duplicates and collinear middle points are pruned. Throws DomainError
  /// if the list does not start at the origin or leaves the quadrant.
  explicit RateRegion(std::vector<RatePair> vertices);

  const std::vector<RatePair>& vertices() const { return vertices_; }

  double r1_extent() const;
  double r2_extent() const;

  /// Largest r2 with (r1, r2) in the region, or nullopt if r1 lies outside
  /// [0, r1_extent()].
  std::optional<double> upper_boundary_at(double r1) const;

 private:
  std::vector<RatePair> vertices_;
};

/// Sampled upper boundary of a (not necessarily convex) union of regions.
struct Envelope {
  std::vector<RatePair> samples;  // (r1, r2max), r1 strictly increasing
};

inline constexpr int kDefaultAlphaGrid = 257;
inline constexpr int kDefaultEnvelopeSamples = 512;

/// Convex hull of (0,0), (r1max,0), (0,r2max).
RateRegion triangle_region(double r1max, double r2max);

/// {r >= 0, r1 <= r1_cap, r2 <= r2_cap, r1 + r2 <= sum_cap}.
RateRegion sum_box_region(double sum_cap, double r1_cap, double r2_cap);

/// True iff p satisfies every facet inequality of `region` (facet normals
/// are unit length, so `slack` is a distance).
bool contains(const RateRegion& region, RatePair p, double slack = 0.0);

/// Envelope membership using the sample at the smallest r1 >= p.r1. The
/// envelope is non-increasing, so this never overstates the union.
bool contains(const Envelope& envelope, RatePair p, double slack = 0.0);

/// region_a is inside region_b up to `slack` (vertex test, exact for convex b).
bool is_subset(const RateRegion& inner, const RateRegion& outer, double slack = 0.0);

/// Every vertex of `inner`, and its upper boundary at every envelope sample
/// abscissa, lies under the envelope up to `slack`.
bool is_subset(const RateRegion& inner, const Envelope& outer, double slack = 0.0);

/// Samples r1 uniformly on [0, max r1 extent] and takes, at each sample, the
/// largest upper boundary among the regions that reach that r1.
/// Throws DomainError on an empty list or r1_samples < 2.
Envelope envelope_union(const std::vector<RateRegion>& regions,
                        int r1_samples = kDefaultEnvelopeSamples);

/// Convex hull of the envelope samples together with the axis projections,
/// i.e. the region reachable when the union's members are also time-shared.
/// Not part of the plain union.
RateRegion convex_hull(const Envelope& envelope);

/// max(r1 + r2) over the vertices / samples.
double region_sum_rate(const RateRegion& region);
double region_sum_rate(const Envelope& envelope);

}  // namespace secrecy
