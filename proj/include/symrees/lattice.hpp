#pragma once

// The triangle e * Delta_u and its integer points.
//
// With v = x^s2 z^u2 / y^t and w = x^s3 y^t3 / z^u, the degree e*a*b part of
// k[x, y, z] is y^(e a) times the span of the v^alpha w^beta whose exponents
//   x: alpha s2 + beta s3,  y: e a - alpha t + beta t3,  z: alpha u2 - beta u
// are all nonnegative. Those (alpha, beta) fill the closed triangle bounded by
//   beta = -(s2/s3) alpha,  beta = (u2/u) alpha,
//   beta = (t/t3)(alpha - e u) + e u2.

#include "symrees/exact.hpp"
#include "symrees/presentation.hpp"

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace symrees {

struct LatticePoint {
  std::int64_t alpha = 0;
  std::int64_t beta = 0;

  friend bool operator==(const LatticePoint &, const LatticePoint &) = default;
  friend auto operator<=>(const LatticePoint &, const LatticePoint &) = default;
};

inline std::ostream &operator<<(std::ostream &os, const LatticePoint &p) {
  return os << "(" << p.alpha << "," << p.beta << ")";
}

class DeltaRegion {
public:
  DeltaRegion(const HerzogPresentation &p, std::int64_t e)
      : p_(p), e_(e), lower_left_(make_rational(-p.s2, p.s3)),
        upper_(make_rational(p.u2, p.u)), lower_right_(make_rational(p.t, p.t3)) {
    if (e < 1)
      throw std::invalid_argument("scale e must be positive");
    // lower_left * x = lower_right * (x - e u) + e u2
    const Rational eu = to_big(e) * to_big(p.u);
    const Rational eu2 = to_big(e) * to_big(p.u2);
    const Rational x = (lower_right_ * eu - eu2) / (lower_right_ - lower_left_);
    apex_ = {x, lower_left_ * x};
  }

  const HerzogPresentation &presentation() const { return p_; }
  std::int64_t scale() const { return e_; }
  const Rational &lower_left_slope() const { return lower_left_; }
  const Rational &upper_slope() const { return upper_; }
  const Rational &lower_right_slope() const { return lower_right_; }

  /// Vertices (0,0), (e u, e u2) and the lower apex (delta1, delta2).
  std::pair<Rational, Rational> origin() const { return {0, 0}; }
  std::pair<Rational, Rational> right_vertex() const {
    return {Rational(to_big(e_) * to_big(p_.u)),
            Rational(to_big(e_) * to_big(p_.u2))};
  }
  const std::pair<Rational, Rational> &apex() const { return apex_; }

  std::int64_t max_alpha() const { return e_ * p_.u; }

  /// Lowest admissible beta in the column alpha, as a rational.
  Rational lower_bound(std::int64_t alpha) const {
    const Rational from_left = lower_left_ * to_big(alpha);
    const Rational from_right =
        lower_right_ * (to_big(alpha) - to_big(e_) * to_big(p_.u)) +
        to_big(e_) * to_big(p_.u2);
    return from_left > from_right ? from_left : from_right;
  }

  Rational upper_bound(std::int64_t alpha) const {
    return upper_ * to_big(alpha);
  }

  bool contains(const LatticePoint &q) const {
    if (q.alpha < 0 || q.alpha > max_alpha())
      return false;
    const Rational beta(to_big(q.beta));
    return beta >= lower_bound(q.alpha) && beta <= upper_bound(q.alpha);
  }

  /// The exponent test for y^(e a) v^alpha w^beta, independent of slopes.
  bool monomial_nonnegative(const LatticePoint &q) const {
    const BigInt al = to_big(q.alpha), be = to_big(q.beta);
    const BigInt ea = to_big(e_) * to_big(p_.triple.a);
    return al * p_.s2 + be * p_.s3 >= 0 && ea - al * p_.t + be * p_.t3 >= 0 &&
           al * p_.u2 - be * p_.u >= 0;
  }

private:
  HerzogPresentation p_;
  std::int64_t e_;
  Rational lower_left_, upper_, lower_right_;
  std::pair<Rational, Rational> apex_;
};

/// Integer points of e * Delta_u ordered by alpha ascending, then beta
/// descending; (0,0) comes first.
inline std::vector<LatticePoint> enumerate_points(const HerzogPresentation &p,
                                                  std::int64_t e) {
  const DeltaRegion region(p, e);
  std::vector<LatticePoint> points;
  for (std::int64_t alpha = 0; alpha <= region.max_alpha(); ++alpha) {
    const BigInt lo = ceil_of(region.lower_bound(alpha));
    const BigInt hi = floor_of(region.upper_bound(alpha));
    for (BigInt beta = hi; beta >= lo; --beta)
      points.push_back({alpha, beta.get_si()});
  }
  return points;
}

/// l_i = number of points of Delta_u with alpha = i, for i = 1..u.
inline std::vector<std::int64_t> column_counts(const HerzogPresentation &p) {
  std::vector<std::int64_t> ell(static_cast<std::size_t>(p.u), 0);
  for (const auto &q : enumerate_points(p, 1))
    if (q.alpha >= 1)
      ++ell[static_cast<std::size_t>(q.alpha - 1)];
  return ell;
}

/// Number of integers in the closed interval [lo, hi].
inline std::int64_t interval_lattice_count(const Rational &lo,
                                           const Rational &hi) {
  if (hi < lo)
    return 0;
  BigInt n = floor_of(hi) - ceil_of(lo) + 1;
  return n > 0 ? n.get_si() : 0;
}

struct NM {
  std::int64_t n = 0; // integers in [-s2/s3, u2/u]
  std::int64_t m = 0; // integers in [u2/u, t/t3]
  friend bool operator==(const NM &, const NM &) = default;
};

inline NM compute_nm(const HerzogPresentation &p) {
  const Rational lower_left = make_rational(-p.s2, p.s3);
  const Rational upper = make_rational(p.u2, p.u);
  const Rational lower_right = make_rational(p.t, p.t3);
  return {interval_lattice_count(lower_left, upper),
          interval_lattice_count(upper, lower_right)};
}

} // namespace symrees
