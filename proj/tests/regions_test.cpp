#include <gtest/gtest.h>

#include <random>

#include "secrecy/errors.hpp"
#include "secrecy/regions.hpp"

using namespace secrecy;

namespace {

std::vector<RatePair> pts(std::initializer_list<std::pair<double, double>> l) {
  std::vector<RatePair> out;
  for (auto [a, b] : l) out.push_back({a, b});
  return out;
}

}  // namespace

TEST(Triangle, Shapes) {
  EXPECT_EQ(triangle_region(2, 1).vertices(), pts({{0, 0}, {2, 0}, {0, 1}}));
  EXPECT_EQ(triangle_region(0, 0).vertices(), pts({{0, 0}}));
  EXPECT_EQ(triangle_region(0, 3).vertices(), pts({{0, 0}, {0, 3}}));
  EXPECT_EQ(triangle_region(3, 0).vertices(), pts({{0, 0}, {3, 0}}));
  EXPECT_THROW(triangle_region(-1, 1), DomainError);
}

TEST(SumBox, Shapes) {
  EXPECT_EQ(sum_box_region(1, 1, 1).vertices(), pts({{0, 0}, {1, 0}, {0, 1}}));
  EXPECT_EQ(sum_box_region(10, 1, 1).vertices(), pts({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
  EXPECT_EQ(sum_box_region(1.5, 1, 1).vertices(),
            pts({{0, 0}, {1, 0}, {1, 0.5}, {0.5, 1}, {0, 1}}));
  EXPECT_EQ(sum_box_region(0, 2, 2).vertices(), pts({{0, 0}}));
  EXPECT_THROW(sum_box_region(1, -1, 1), DomainError);
}

TEST(SumBox, VerticesSitOnTwoFacets) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.01, 5.0);
  for (int i = 0; i < 500; ++i) {
    const double s = u(rng), a = u(rng), b = u(rng);
    const auto reg = sum_box_region(s, a, b);
    for (std::size_t k = 1; k < reg.vertices().size(); ++k) {
      const auto v = reg.vertices()[k];
      EXPECT_LE(v.r1, a + 1e-12);
      EXPECT_LE(v.r2, b + 1e-12);
      EXPECT_LE(v.r1 + v.r2, s + 1e-12);
      int tight = 0;
      tight += std::abs(v.r1 - a) < 1e-12 || v.r1 == 0.0;
      tight += std::abs(v.r2 - b) < 1e-12 || v.r2 == 0.0;
      tight += std::abs(v.r1 + v.r2 - s) < 1e-12;
      EXPECT_GE(tight, 2);
    }
    EXPECT_TRUE(is_subset(triangle_region(a, b), sum_box_region(a + b, a, b), 1e-12));
  }
}

TEST(Region, RejectsMalformedVertices) {
  EXPECT_THROW(RateRegion(pts({{1, 0}, {0, 1}})), DomainError);
  EXPECT_THROW(RateRegion(pts({{0, 0}, {-1, 1}})), DomainError);
}

TEST(Region, UpperBoundary) {
  const auto r = sum_box_region(1.5, 1, 1);
  EXPECT_DOUBLE_EQ(*r.upper_boundary_at(0.0), 1.0);
  EXPECT_DOUBLE_EQ(*r.upper_boundary_at(0.75), 0.75);
  EXPECT_DOUBLE_EQ(*r.upper_boundary_at(1.0), 0.5);
  EXPECT_FALSE(r.upper_boundary_at(1.01).has_value());
  EXPECT_DOUBLE_EQ(r.r1_extent(), 1.0);
  EXPECT_DOUBLE_EQ(r.r2_extent(), 1.0);
}

TEST(Contains, Examples) {
  const auto t = triangle_region(2, 1);
  EXPECT_TRUE(contains(t, {1, 0.4}));
  EXPECT_FALSE(contains(t, {1, 0.6}, 0.0));
  EXPECT_TRUE(contains(t, {1, 0.5}, 1e-9));
  EXPECT_FALSE(contains(t, {-0.1, 0.1}));
  EXPECT_TRUE(contains(triangle_region(0, 0), {0, 0}));
  EXPECT_FALSE(contains(triangle_region(0, 0), {1e-3, 0}));
}

TEST(Contains, MonotoneInSlack) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, 3.0);
  const auto r = sum_box_region(2.2, 1.5, 1.7);
  for (int i = 0; i < 2000; ++i) {
    const RatePair p{u(rng), u(rng)};
    if (contains(r, p, 0.0)) EXPECT_TRUE(contains(r, p, 0.1));
    if (contains(r, p, 0.1)) EXPECT_TRUE(contains(r, p, 1.0));
  }
}

TEST(Envelope, SingleRegionSamplesItsBoundary) {
  const auto t = triangle_region(2, 1);
  const auto env = envelope_union({t}, 5);
  ASSERT_EQ(env.samples.size(), 5u);
  for (const auto& s : env.samples) EXPECT_NEAR(s.r2, 1.0 - s.r1 / 2.0, 1e-15);
  EXPECT_DOUBLE_EQ(env.samples.back().r1, 2.0);
}

TEST(Envelope, Staircase) {
  const auto tall = sum_box_region(10, 1, 2);
  const auto wide = sum_box_region(10, 2, 1);
  const auto env = envelope_union({tall, wide}, 9);
  for (const auto& s : env.samples) EXPECT_DOUBLE_EQ(s.r2, s.r1 <= 1.0 ? 2.0 : 1.0);
  EXPECT_DOUBLE_EQ(region_sum_rate(env), 3.0);
  EXPECT_TRUE(contains(env, {1.0, 2.0}));
  EXPECT_TRUE(contains(env, {1.5, 1.0}));
  EXPECT_FALSE(contains(env, {1.5, 1.5}));
  EXPECT_FALSE(contains(env, {2.1, 0.0}));
}

TEST(Envelope, DominatesMembers) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.0, 4.0);
  std::vector<RateRegion> family;
  for (int i = 0; i < 20; ++i) family.push_back(sum_box_region(u(rng), u(rng), u(rng)));
  const auto env = envelope_union(family, 128);
  for (const auto& s : env.samples) {
    for (const auto& r : family) {
      const auto top = r.upper_boundary_at(s.r1);
      if (top) EXPECT_GE(s.r2 + 1e-12, *top);
    }
  }
}

TEST(Envelope, Errors) {
  EXPECT_THROW(envelope_union({}, 10), DomainError);
  EXPECT_THROW(envelope_union({triangle_region(1, 1)}, 1), DomainError);
}

TEST(Envelope, ConvexHullCoversTheUnion) {
  const auto env = envelope_union({sum_box_region(10, 1, 2), sum_box_region(10, 2, 1)}, 65);
  const auto hull = convex_hull(env);
  for (const auto& s : env.samples) EXPECT_TRUE(contains(hull, s, 1e-12));
  EXPECT_TRUE(contains(hull, {1.5, 1.5}, 1e-12));  // time sharing fills the notch
  EXPECT_DOUBLE_EQ(region_sum_rate(hull), 3.0);
}

TEST(SumRate, Examples) {
  EXPECT_DOUBLE_EQ(region_sum_rate(triangle_region(2, 1)), 2.0);
  EXPECT_DOUBLE_EQ(region_sum_rate(sum_box_region(1.5, 1, 1)), 1.5);
  EXPECT_DOUBLE_EQ(region_sum_rate(sum_box_region(10, 1, 1)), 2.0);
}

TEST(Subset, RegionInRegionAndEnvelope) {
  EXPECT_TRUE(is_subset(triangle_region(1, 1), sum_box_region(1, 1, 1)));
  EXPECT_FALSE(is_subset(sum_box_region(1.5, 1, 1), triangle_region(1, 1)));
  const auto env = envelope_union({sum_box_region(10, 1, 2), sum_box_region(10, 2, 1)}, 65);
  EXPECT_TRUE(is_subset(triangle_region(2, 2), env, 1e-12));
  EXPECT_FALSE(is_subset(sum_box_region(3, 1.5, 1.5), env, 1e-9));
}
