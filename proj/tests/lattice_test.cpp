#include "symrees/lattice.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace symrees;

namespace {

std::vector<LatticePoint> pts(std::initializer_list<std::pair<int, int>> xs) {
  std::vector<LatticePoint> out;
  for (auto [a, b] : xs)
    out.push_back({a, b});
  return out;
}

std::vector<HerzogPresentation> small_presentations(std::int64_t bound) {
  std::vector<HerzogPresentation> out;
  for (std::int64_t a = 1; a <= bound; ++a)
    for (std::int64_t b = 1; b <= bound; ++b)
      for (std::int64_t c = 1; c <= bound; ++c) {
        if (!pairwise_coprime({a, b, c}))
          continue;
        try {
          out.push_back(compute_presentation({a, b, c}));
        } catch (const NotThreeGenerated &) {
        }
      }
  return out;
}

} // namespace

TEST(EnumeratePoints, WorkedExamples) {
  EXPECT_EQ(enumerate_points(compute_presentation({8, 19, 9}), 1),
            pts({{0, 0},
                 {1, 0}, {1, -1}, {1, -2}, {1, -3}, {1, -4}, {1, -5},
                 {2, 0}, {2, -1}, {2, -2},
                 {3, 1}}));
  EXPECT_EQ(enumerate_points(compute_presentation({25, 29, 72}), 1),
            pts({{0, 0}, {1, 0}, {1, -1}, {2, 1}, {2, 0}, {3, 2}}));

  const auto p = compute_presentation({17, 503, 169});
  const auto points = enumerate_points(p, 1);
  EXPECT_EQ(points.size(), 28u);
  std::vector<int> per_column(8, 0);
  for (const auto &q : points)
    ++per_column.at(static_cast<std::size_t>(q.alpha));
  EXPECT_EQ(per_column, (std::vector<int>{1, 2, 4, 5, 7, 5, 3, 1}));
}

TEST(ColumnCounts, WorkedExamples) {
  using V = std::vector<std::int64_t>;
  EXPECT_EQ(column_counts(compute_presentation({8, 19, 9})), (V{6, 3, 1}));
  EXPECT_EQ(column_counts(compute_presentation({25, 29, 72})), (V{2, 2, 1}));
  EXPECT_EQ(column_counts(compute_presentation({17, 503, 169})),
            (V{2, 4, 5, 7, 5, 3, 1}));
}

TEST(IntervalCount, Examples) {
  EXPECT_EQ(interval_lattice_count(make_rational(-7, 4), make_rational(2, 3)), 2);
  EXPECT_EQ(interval_lattice_count(make_rational(1, 3), Rational(3)), 3);
  EXPECT_EQ(interval_lattice_count(make_rational(2, 3), make_rational(2, 3)), 0);
  EXPECT_EQ(interval_lattice_count(Rational(2), Rational(2)), 1);
  EXPECT_EQ(interval_lattice_count(Rational(3), Rational(1)), 0);
}

TEST(ComputeNM, Examples) {
  auto nm = compute_nm(compute_presentation({25, 29, 72}));
  EXPECT_EQ(nm.n, 2);
  EXPECT_EQ(nm.m, 2);
  nm = compute_nm(compute_presentation({17, 503, 169}));
  EXPECT_EQ(nm.n, 2);
  EXPECT_EQ(nm.m, 3);
  nm = compute_nm(compute_presentation({8, 19, 9}));
  EXPECT_EQ(nm.n, 7);
  EXPECT_EQ(nm.m, 3);
}

TEST(DeltaRegion, Vertices) {
  const auto p = compute_presentation({8, 19, 9});
  const DeltaRegion r(p, 1);
  EXPECT_EQ(r.lower_left_slope(), Rational(-6));
  EXPECT_EQ(r.upper_slope(), make_rational(1, 3));
  EXPECT_EQ(r.lower_right_slope(), Rational(3));
  // Apex e a s3 / c, -e a s2 / c.
  EXPECT_EQ(r.apex().first, make_rational(8, 9));
  EXPECT_EQ(r.apex().second, make_rational(-48, 9));
  EXPECT_EQ(r.right_vertex(), std::make_pair(Rational(3), Rational(1)));
}

TEST(DeltaRegion, MonomialPositivityAgreesWithSlopes) {
  for (const auto &p : small_presentations(14))
    for (std::int64_t e : {1, 2}) {
      const DeltaRegion r(p, e);
      const auto points = enumerate_points(p, e);
      const std::set<LatticePoint> inside(points.begin(), points.end());
      // Brute force over a box that covers the triangle.
      const std::int64_t lo = floor_of(r.apex().second).get_si() - 1;
      const std::int64_t hi = e * p.u2 + 1;
      std::size_t count = 0;
      for (std::int64_t al = -1; al <= e * p.u + 1; ++al)
        for (std::int64_t be = lo; be <= hi; ++be) {
          const LatticePoint q{al, be};
          const bool exps = al >= 0 && r.monomial_nonnegative(q);
          EXPECT_EQ(exps, inside.count(q) == 1) << p.triple << " e=" << e;
          EXPECT_EQ(r.contains(q), exps);
          count += exps;
        }
      EXPECT_EQ(count, points.size());
    }
}

TEST(DeltaRegion, ColumnAndOrderingProperties) {
  for (const auto &p : small_presentations(16)) {
    const auto ell = column_counts(p);
    ASSERT_EQ(ell.size(), static_cast<std::size_t>(p.u));
    EXPECT_EQ(ell.back(), 1) << p.triple;
    const auto points = enumerate_points(p, 1);
    EXPECT_EQ(points.size(),
              1u + static_cast<std::size_t>(
                       std::accumulate(ell.begin(), ell.end(), std::int64_t{0})));
    ASSERT_FALSE(points.empty());
    EXPECT_EQ(points.front(), (LatticePoint{0, 0}));
    for (std::size_t i = 1; i < points.size(); ++i) {
      const auto &x = points[i - 1], &y = points[i];
      EXPECT_TRUE(x.alpha < y.alpha || (x.alpha == y.alpha && x.beta > y.beta));
    }
    // Integer vertices of the unit triangle scale into e Delta.
    const DeltaRegion r3(p, 3);
    EXPECT_TRUE(r3.contains({3 * p.u, 3 * p.u2}));
    EXPECT_TRUE(r3.contains({0, 0}));
  }
}
