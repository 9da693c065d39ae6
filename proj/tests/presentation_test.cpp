#include "symrees/presentation.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace symrees;

namespace {

// Exhaustive semigroup membership, independent of the modular shortcut.
bool in_semigroup(std::int64_t M, std::int64_t p, std::int64_t q) {
  for (std::int64_t j = 0; j * q <= M; ++j)
    if ((M - j * q) % p == 0)
      return true;
  return false;
}

void expect_exponents(const HerzogPresentation &p,
                      std::array<std::int64_t, 9> want) {
  EXPECT_EQ(p.s, want[0]);
  EXPECT_EQ(p.t1, want[1]);
  EXPECT_EQ(p.u1, want[2]);
  EXPECT_EQ(p.t, want[3]);
  EXPECT_EQ(p.s2, want[4]);
  EXPECT_EQ(p.u2, want[5]);
  EXPECT_EQ(p.u, want[6]);
  EXPECT_EQ(p.s3, want[7]);
  EXPECT_EQ(p.t3, want[8]);
}

} // namespace

TEST(Representable, Examples) {
  EXPECT_EQ(representable(56, 19, 9), (Representation{2, 2}));
  EXPECT_FALSE(representable(19, 8, 9).has_value());
  EXPECT_EQ(representable(8, 8, 9), (Representation{1, 0}));
}

TEST(Representable, MatchesLinearScan) {
  for (std::int64_t M = 1; M <= 120; ++M)
    for (std::int64_t p = 1; p <= 15; ++p)
      for (std::int64_t q = 1; q <= 15; ++q) {
        std::optional<Representation> want;
        for (std::int64_t j = 0; j * q <= M; ++j)
          if ((M - j * q) % p == 0) {
            want = Representation{(M - j * q) / p, j};
            break;
          }
        EXPECT_EQ(representable(M, p, q), want) << M << " " << p << " " << q;
      }
}

TEST(Presentation, WorkedExamples) {
  expect_exponents(compute_presentation({8, 19, 9}), {7, 2, 2, 3, 6, 1, 3, 1, 1});
  expect_exponents(compute_presentation({25, 29, 72}),
                   {11, 7, 1, 11, 7, 2, 3, 4, 4});
  expect_exponents(compute_presentation({17, 503, 169}),
                   {89, 2, 3, 3, 49, 4, 7, 40, 1});
  expect_exponents(compute_presentation({16, 683, 97}),
                   {73, 1, 5, 2, 49, 6, 11, 24, 1});
}

TEST(Presentation, Errors) {
  EXPECT_THROW(compute_presentation({4, 6, 9}), NotCoprime);
  EXPECT_THROW(compute_presentation({0, 1, 2}), std::invalid_argument);
  EXPECT_THROW(compute_presentation({3, 4, 5'000'000'000}),
               std::invalid_argument);
  // Complete intersections: 7 = 1*2 + 1*5 makes s = 1.
  EXPECT_THROW(compute_presentation({7, 2, 5}), NotThreeGenerated);
  EXPECT_THROW(compute_presentation({1, 2, 3}), NotThreeGenerated);
}

TEST(Presentation, InvariantsAndMinimality) {
  int checked = 0;
  for (std::int64_t a = 1; a <= 30; ++a)
    for (std::int64_t b = 1; b <= 30; ++b)
      for (std::int64_t c = 1; c <= 30; ++c) {
        const CurveTriple t{a, b, c};
        if (!pairwise_coprime(t))
          continue;
        HerzogPresentation p;
        try {
          p = compute_presentation(t);
        } catch (const NotThreeGenerated &) {
          continue;
        }
        ++checked;
        EXPECT_EQ(p.s, p.s2 + p.s3);
        EXPECT_EQ(p.t, p.t1 + p.t3);
        EXPECT_EQ(p.u, p.u1 + p.u2);
        EXPECT_EQ(p.s * a, p.t1 * b + p.u1 * c);
        EXPECT_EQ(p.t * b, p.s2 * a + p.u2 * c);
        EXPECT_EQ(p.u * c, p.s3 * a + p.t3 * b);
        EXPECT_EQ(a, p.t * p.u - p.t3 * p.u2);
        EXPECT_EQ(b, p.s * p.u - p.s3 * p.u1);
        EXPECT_EQ(c, p.s * p.t - p.s2 * p.t1);
        EXPECT_EQ(p.degF, p.s * a);
        EXPECT_GE(p.s, 2);
        EXPECT_GE(p.t, 2);
        EXPECT_GE(p.u, 2);
        for (std::int64_t k = 1; k < p.s; ++k)
          EXPECT_FALSE(in_semigroup(k * a, b, c)) << t;
        for (std::int64_t k = 1; k < p.t; ++k)
          EXPECT_FALSE(in_semigroup(k * b, a, c)) << t;
        for (std::int64_t k = 1; k < p.u; ++k)
          EXPECT_FALSE(in_semigroup(k * c, a, b)) << t;
        EXPECT_TRUE(in_semigroup(p.s * a, b, c));
      }
  EXPECT_GT(checked, 1000);
}

TEST(Assumptions, Examples) {
  auto r = validate_assumptions(CurveTriple{8, 19, 9});
  EXPECT_TRUE(r.pairwise_coprime && r.three_generated && r.negative_curve_iii);
  EXPECT_TRUE(r.all_hold);

  EXPECT_TRUE(validate_assumptions(CurveTriple{25, 29, 72}).all_hold);

  r = validate_assumptions(CurveTriple{16, 683, 97});
  EXPECT_TRUE(r.pairwise_coprime);
  EXPECT_TRUE(r.three_generated);
  EXPECT_FALSE(r.negative_curve_iii);
  EXPECT_FALSE(r.all_hold);

  r = validate_assumptions(CurveTriple{4, 6, 9});
  EXPECT_FALSE(r.pairwise_coprime);
  EXPECT_FALSE(r.all_hold);
}

TEST(Assumptions, ConditionThreeIsStrict) {
  // u^2 c < ab is the same as u c < sqrt(abc); compare against a direct
  // integer square-root test over a box.
  for (std::int64_t a = 1; a <= 25; ++a)
    for (std::int64_t b = 1; b <= 25; ++b)
      for (std::int64_t c = 1; c <= 25; ++c) {
        if (!pairwise_coprime({a, b, c}))
          continue;
        HerzogPresentation p;
        try {
          p = compute_presentation({a, b, c});
        } catch (const NotThreeGenerated &) {
          continue;
        }
        const std::int64_t uc = p.u * c, abc = a * b * c;
        EXPECT_EQ(negative_curve_condition(p), uc * uc < abc);
      }
}
