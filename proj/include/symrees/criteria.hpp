#pragma once

// Combinatorial criteria on Delta_u.
//
// EU: the column counts l_1..l_u sorted ascending satisfy l'_i >= i. It
// forces finite generation.
//
// GK: with n = #([-s2/s3, u2/u] cap Z) and m = #([u2/u, t/t3] cap Z),
//   (I)  #((n-1)[u2/u, t/t3] cap Z) = n  and (u2/u) n not integral, or
//   (II) #((m-1)[-s2/s3, u2/u] cap Z) = m  and (u1/u) m not integral.
// It forces infinite generation. Under the standing assumptions it is
// equivalent to one of five explicit cases on (n, m, u).

#include "symrees/lattice.hpp"
#include "symrees/presentation.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace symrees {

struct EuReport {
  std::vector<std::int64_t> ell;
  std::vector<std::int64_t> ell_sorted;
  bool holds = false;
  // 1-based index i of the first l'_i < i.
  std::optional<std::int64_t> first_failure_index;

  friend bool operator==(const EuReport &, const EuReport &) = default;
};

inline EuReport check_eu(const HerzogPresentation &p) {
  EuReport r;
  r.ell = column_counts(p);
  r.ell_sorted = r.ell;
  std::sort(r.ell_sorted.begin(), r.ell_sorted.end());
  for (std::size_t i = 0; i < r.ell_sorted.size(); ++i)
    if (r.ell_sorted[i] < static_cast<std::int64_t>(i + 1)) {
      r.first_failure_index = static_cast<std::int64_t>(i + 1);
      break;
    }
  r.holds = !r.first_failure_index.has_value();
  return r;
}

enum class GkCase { GK1 = 1, GK2, GK3, GK4, GK5 };

inline std::string to_string(GkCase c) {
  return "GK" + std::to_string(static_cast<int>(c));
}

inline std::optional<GkCase> parse_gk_case(const std::string &s) {
  for (int i = 1; i <= 5; ++i)
    if (s == "GK" + std::to_string(i))
      return static_cast<GkCase>(i);
  return std::nullopt;
}

struct GkReport {
  std::int64_t n = 0, m = 0;
  bool def_I_holds = false;
  bool def_II_holds = false;
  std::optional<GkCase> five_way;
  bool holds = false;

  friend bool operator==(const GkReport &, const GkReport &) = default;
};

namespace detail {

// #((k) [lo, hi] cap Z) with exact scaling of both endpoints.
inline std::int64_t scaled_count(std::int64_t k, const Rational &lo,
                                 const Rational &hi) {
  return interval_lattice_count(lo * to_big(k), hi * to_big(k));
}

struct Slopes {
  Rational lower_left, upper, lower_right;
};

inline Slopes slopes_of(const HerzogPresentation &p) {
  return {make_rational(-p.s2, p.s3), make_rational(p.u2, p.u),
          make_rational(p.t, p.t3)};
}

} // namespace detail

/// Clauses (I) and (II); five_way is left empty.
inline GkReport check_gk_definition(const HerzogPresentation &p) {
  const auto sl = detail::slopes_of(p);
  const auto [n, m] = compute_nm(p);
  GkReport r;
  r.n = n;
  r.m = m;
  r.def_I_holds =
      detail::scaled_count(n - 1, sl.upper, sl.lower_right) == n &&
      !is_integer(make_rational(p.u2, p.u) * to_big(n));
  r.def_II_holds =
      detail::scaled_count(m - 1, sl.lower_left, sl.upper) == m &&
      !is_integer(make_rational(p.u1, p.u) * to_big(m));
  r.holds = r.def_I_holds || r.def_II_holds;
  return r;
}

/// First matching case of GK1..GK5, meaningful under the standing
/// assumptions (pairwise coprime, three-generated, u^2 c < a b).
inline std::optional<GkCase> check_gk_five(const HerzogPresentation &p) {
  const auto sl = detail::slopes_of(p);
  const auto [n, m] = compute_nm(p);
  const std::int64_t u = p.u;
  if (n == 1)
    return GkCase::GK1;
  if (m == 1)
    return GkCase::GK2;
  if (n == 2 && m == 2 && 2 < u)
    return GkCase::GK3;
  if (3 <= n && n < u && m == 2 &&
      detail::scaled_count(n - 1, sl.upper, sl.lower_right) == n)
    return GkCase::GK4;
  if (n == 2 && 3 <= m && m < u &&
      detail::scaled_count(m - 1, sl.lower_left, sl.upper) == m)
    return GkCase::GK5;
  return std::nullopt;
}

/// Both formulations in one report.
inline GkReport check_gk(const HerzogPresentation &p) {
  GkReport r = check_gk_definition(p);
  r.five_way = check_gk_five(p);
  return r;
}

} // namespace symrees
