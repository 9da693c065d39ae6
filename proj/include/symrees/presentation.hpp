#pragma once

// Herzog presentation of the prime of the monomial curve (t^a, t^b, t^c).
//
// For pairwise coprime a, b, c:
//   s = min{k >= 1 : k a in N0 b + N0 c}, and t, u symmetrically,
//   s a = t1 b + u1 c,  t b = s2 a + u2 c,  u c = s3 a + t3 b,
// and the prime is minimally generated by
//   x^s - y^t1 z^u1,  y^t - x^s2 z^u2,  z^u - x^s3 y^t3
// exactly when s, t, u >= 2; then s = s2 + s3, t = t1 + t3, u = u1 + u2.

#include "symrees/exact.hpp"

#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace symrees {

/// Largest accepted value of a, b or c. The semigroup searches below take
/// O(min(b, c)) steps for s (and symmetrically), each O(log) work.
inline constexpr std::int64_t kMaxWeight = 1'000'000'000;

struct CurveTriple {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;

  friend bool operator==(const CurveTriple &, const CurveTriple &) = default;
  friend auto operator<=>(const CurveTriple &, const CurveTriple &) = default;

  CurveTriple swapped_ab() const { return {b, a, c}; }
};

inline std::ostream &operator<<(std::ostream &os, const CurveTriple &t) {
  return os << "(" << t.a << "," << t.b << "," << t.c << ")";
}

inline bool pairwise_coprime(const CurveTriple &t) {
  return std::gcd(t.a, t.b) == 1 && std::gcd(t.a, t.c) == 1 &&
         std::gcd(t.b, t.c) == 1;
}

struct NotCoprime : std::domain_error {
  using std::domain_error::domain_error;
};

struct NotThreeGenerated : std::domain_error {
  using std::domain_error::domain_error;
};

struct HerzogPresentation {
  CurveTriple triple;
  std::int64_t s = 0, t = 0, u = 0;
  std::int64_t s2 = 0, s3 = 0;
  std::int64_t t1 = 0, t3 = 0;
  std::int64_t u1 = 0, u2 = 0;
  // Weighted degrees s a, t b, u c of the three binomials.
  std::int64_t degF = 0, degG = 0, degH = 0;
  // Set when the smallest-j witnesses were inconsistent and the exponents
  // came from the exhaustive search over all representations.
  bool used_fallback = false;

  friend bool operator==(const HerzogPresentation &,
                         const HerzogPresentation &) = default;
};

/// Nonnegative (i, j) with M = i p + j q.
struct Representation {
  std::int64_t i = 0;
  std::int64_t j = 0;
  friend bool operator==(const Representation &,
                         const Representation &) = default;
};

namespace detail {

// Inverse of x modulo m for gcd(x, m) = 1, m >= 1.
inline std::int64_t mod_inverse(std::int64_t x, std::int64_t m) {
  BigInt r;
  BigInt bx = to_big(x), bm = to_big(m);
  if (m == 1)
    return 0;
  if (mpz_invert(r.get_mpz_t(), bx.get_mpz_t(), bm.get_mpz_t()) == 0)
    throw std::logic_error("mod_inverse: arguments not coprime");
  return r.get_si();
}

inline void require_positive(std::int64_t v, const char *what) {
  if (v < 1)
    throw std::invalid_argument(std::string(what) + " must be positive");
}

} // namespace detail

/// Representation of M in N0 p + N0 q with the smallest j, if any.
///
/// Equivalent to scanning j = 0, 1, ..., floor(M/q) and testing p | M - j q;
/// the smallest admissible j is found directly as a residue modulo p/gcd(p,q).
inline std::optional<Representation> representable(std::int64_t M,
                                                   std::int64_t p,
                                                   std::int64_t q) {
  detail::require_positive(M, "M");
  detail::require_positive(p, "p");
  detail::require_positive(q, "q");
  const std::int64_t g = std::gcd(p, q);
  if (M % g != 0)
    return std::nullopt;
  const std::int64_t pp = p / g, qq = q / g, mm = M / g;
  // mm - j qq = 0 mod pp  <=>  j = mm * qq^{-1} mod pp.
  const std::int64_t inv = detail::mod_inverse(qq % pp, pp);
  BigInt j0 = (to_big(mm % pp) * to_big(inv)) % to_big(pp);
  const std::int64_t j = j0.get_si();
  // j q <= M, computed without overflow.
  if (j > M / q)
    return std::nullopt;
  return Representation{(M - j * q) / p, j};
}

/// All representations of M in N0 p + N0 q, ordered by increasing j.
inline std::vector<Representation>
all_representations(std::int64_t M, std::int64_t p, std::int64_t q) {
  std::vector<Representation> out;
  auto first = representable(M, p, q);
  if (!first)
    return out;
  const std::int64_t step = p / std::gcd(p, q);
  for (std::int64_t j = first->j; j <= M / q; j += step)
    out.push_back({(M - j * q) / p, j});
  return out;
}

namespace detail {

struct MinimalMultiple {
  std::int64_t k = 0;
  Representation rep;
};

// Smallest k >= 1 with k x in N0 y + N0 z. For coprime inputs k <= min(y, z)
// since y x = x y and z x = x z.
inline MinimalMultiple minimal_multiple(std::int64_t x, std::int64_t y,
                                        std::int64_t z) {
  const std::int64_t limit = std::min(y, z);
  for (std::int64_t k = 1; k <= limit; ++k)
    if (auto r = representable(k * x, y, z))
      return {k, *r};
  throw std::logic_error("minimal_multiple: no multiple found; inputs are not "
                         "pairwise coprime");
}

inline bool consistent(const HerzogPresentation &p) {
  const auto &[a, b, c] = p.triple;
  return p.s == p.s2 + p.s3 && p.t == p.t1 + p.t3 && p.u == p.u1 + p.u2 &&
         p.s * a == p.t1 * b + p.u1 * c && p.t * b == p.s2 * a + p.u2 * c &&
         p.u * c == p.s3 * a + p.t3 * b && p.t1 > 0 && p.t3 > 0 && p.s2 > 0 &&
         p.s3 > 0 && p.u1 > 0 && p.u2 > 0;
}

} // namespace detail

inline void validate_triple(const CurveTriple &t) {
  for (auto v : {t.a, t.b, t.c})
    if (v < 1 || v > kMaxWeight)
      throw std::invalid_argument("weights must lie in [1, 10^9]");
}

inline HerzogPresentation compute_presentation(const CurveTriple &t) {
  validate_triple(t);
  if (!pairwise_coprime(t))
    throw NotCoprime("a, b, c are not pairwise coprime");

  const auto S = detail::minimal_multiple(t.a, t.b, t.c);
  const auto T = detail::minimal_multiple(t.b, t.a, t.c);
  const auto U = detail::minimal_multiple(t.c, t.a, t.b);
  if (S.k < 2 || T.k < 2 || U.k < 2)
    throw NotThreeGenerated("one of s, t, u equals 1: the prime is a complete "
                            "intersection");

  HerzogPresentation p;
  p.triple = t;
  p.s = S.k;
  p.t = T.k;
  p.u = U.k;
  p.degF = p.s * t.a;
  p.degG = p.t * t.b;
  p.degH = p.u * t.c;
  p.t1 = S.rep.i;
  p.u1 = S.rep.j;
  p.s2 = T.rep.i;
  p.u2 = T.rep.j;
  p.s3 = U.rep.i;
  p.t3 = U.rep.j;
  if (detail::consistent(p))
    return p;

  for (auto rs : all_representations(p.degF, t.b, t.c))
    for (auto rt : all_representations(p.degG, t.a, t.c))
      for (auto ru : all_representations(p.degH, t.a, t.b)) {
        HerzogPresentation q = p;
        q.t1 = rs.i;
        q.u1 = rs.j;
        q.s2 = rt.i;
        q.u2 = rt.j;
        q.s3 = ru.i;
        q.t3 = ru.j;
        if (detail::consistent(q)) {
          q.used_fallback = true;
          return q;
        }
      }
  throw NotThreeGenerated("no exponent choice satisfies s = s2 + s3, "
                          "t = t1 + t3, u = u1 + u2 with positive exponents");
}

struct AssumptionReport {
  bool pairwise_coprime = false;
  bool three_generated = false;
  // u c < sqrt(a b c), tested as u^2 c < a b.
  bool negative_curve_iii = false;
  bool all_hold = false;

  friend bool operator==(const AssumptionReport &,
                         const AssumptionReport &) = default;
};

inline bool negative_curve_condition(const HerzogPresentation &p) {
  return to_big(p.u) * to_big(p.u) * to_big(p.triple.c) <
         to_big(p.triple.a) * to_big(p.triple.b);
}

inline AssumptionReport validate_assumptions(const HerzogPresentation &p) {
  AssumptionReport r;
  r.pairwise_coprime = pairwise_coprime(p.triple);
  r.three_generated = detail::consistent(p) && p.s >= 2 && p.t >= 2 && p.u >= 2;
  r.negative_curve_iii = negative_curve_condition(p);
  r.all_hold = r.pairwise_coprime && r.three_generated && r.negative_curve_iii;
  return r;
}

/// Assumption check from the raw triple; failures of compute_presentation
/// become false flags.
inline AssumptionReport validate_assumptions(const CurveTriple &t) {
  AssumptionReport r;
  r.pairwise_coprime = pairwise_coprime(t);
  if (!r.pairwise_coprime)
    return r;
  try {
    return validate_assumptions(compute_presentation(t));
  } catch (const NotThreeGenerated &) {
    return r;
  }
}

} // namespace symrees
