#include "symrees/criteria.hpp"

#include <gtest/gtest.h>

using namespace symrees;

TEST(EU, WorkedExamples) {
  using V = std::vector<std::int64_t>;
  auto r = check_eu(compute_presentation({8, 19, 9}));
  EXPECT_EQ(r.ell_sorted, (V{1, 3, 6}));
  EXPECT_TRUE(r.holds);
  EXPECT_FALSE(r.first_failure_index.has_value());

  r = check_eu(compute_presentation({25, 29, 72}));
  EXPECT_EQ(r.ell_sorted, (V{1, 2, 2}));
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.first_failure_index, 3);

  r = check_eu(compute_presentation({17, 503, 169}));
  EXPECT_EQ(r.ell_sorted, (V{1, 2, 3, 4, 5, 5, 7}));
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.first_failure_index, 6);
}

TEST(GK, DefinitionForm) {
  auto r = check_gk_definition(compute_presentation({25, 29, 72}));
  EXPECT_EQ(r.n, 2);
  EXPECT_EQ(r.m, 2);
  EXPECT_TRUE(r.def_I_holds);
  EXPECT_TRUE(r.holds);

  r = check_gk_definition(compute_presentation({17, 503, 169}));
  EXPECT_FALSE(r.def_I_holds);
  EXPECT_FALSE(r.def_II_holds);
  EXPECT_FALSE(r.holds);

  r = check_gk_definition(compute_presentation({8, 19, 9}));
  EXPECT_FALSE(r.holds);
}

TEST(GK, FiveCaseForm) {
  EXPECT_EQ(check_gk_five(compute_presentation({25, 29, 72})), GkCase::GK3);
  EXPECT_FALSE(check_gk_five(compute_presentation({17, 503, 169})).has_value());
  EXPECT_FALSE(check_gk_five(compute_presentation({8, 19, 9})).has_value());
}

TEST(GK, CaseNames) {
  for (int i = 1; i <= 5; ++i) {
    const auto c = static_cast<GkCase>(i);
    EXPECT_EQ(parse_gk_case(to_string(c)), c);
  }
  EXPECT_FALSE(parse_gk_case("GK6").has_value());
}

TEST(Criteria, PropertiesOnValidatedTriples) {
  int validated = 0, small_u = 0;
  for (std::int64_t a = 1; a <= 30; ++a)
    for (std::int64_t b = 1; b <= 30; ++b)
      for (std::int64_t c = 1; c <= 30; ++c) {
        const auto rep = validate_assumptions(CurveTriple{a, b, c});
        if (!rep.all_hold)
          continue;
        ++validated;
        const auto p = compute_presentation({a, b, c});
        const auto eu = check_eu(p);
        const auto gk = check_gk(p);
        EXPECT_EQ(gk.holds, gk.def_I_holds || gk.def_II_holds);
        EXPECT_EQ(gk.holds, gk.five_way.has_value()) << p.triple;
        EXPECT_FALSE(eu.holds && gk.holds) << p.triple;
        if (p.u <= 6) {
          ++small_u;
          EXPECT_NE(eu.holds, gk.holds) << p.triple;
        }
        // a <-> b symmetry.
        const auto sw = CurveTriple{b, a, c};
        if (validate_assumptions(sw).all_hold) {
          const auto q = compute_presentation(sw);
          EXPECT_EQ(check_eu(q).holds, eu.holds) << p.triple;
          EXPECT_EQ(check_gk(q).holds, gk.holds) << p.triple;
        }
      }
  EXPECT_GT(validated, 1000);
  EXPECT_GT(small_u, 100);
}
