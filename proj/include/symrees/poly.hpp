#pragma once

// Sparse polynomials in x, y, z with rational coefficients, monomial
// staircases in k[y, z], and the three-generated family whose symbolic Rees
// ring has its negative curve in the second symbolic power.

#include "symrees/exact.hpp"
#include "symrees/presentation.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace symrees {

struct Exponent {
  std::int64_t x = 0, y = 0, z = 0;

  friend bool operator==(const Exponent &, const Exponent &) = default;
  friend auto operator<=>(const Exponent &, const Exponent &) = default;

  Exponent operator+(const Exponent &o) const {
    return {x + o.x, y + o.y, z + o.z};
  }
  bool divides(const Exponent &o) const {
    return x <= o.x && y <= o.y && z <= o.z;
  }
};

inline std::ostream &operator<<(std::ostream &os, const Exponent &e) {
  return os << "x^" << e.x << " y^" << e.y << " z^" << e.z;
}

using Weights = std::array<std::int64_t, 3>;

struct NotDivisible : std::domain_error {
  Exponent offending;
  NotDivisible(const std::string &what, Exponent e)
      : std::domain_error(what), offending(e) {}
};

class SparsePoly {
public:
  using Terms = std::map<Exponent, Rational>;

  SparsePoly() = default;
  explicit SparsePoly(Weights w) : weights_(w) {}

  static SparsePoly monomial(Exponent e, Rational coeff = 1,
                             Weights w = {1, 1, 1}) {
    SparsePoly p(w);
    p.add_term(e, coeff);
    return p;
  }

  const Terms &terms() const { return terms_; }
  const Weights &weights() const { return weights_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const Exponent &e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Exponent &e, const Rational &coeff) {
    if (e.x < 0 || e.y < 0 || e.z < 0)
      throw std::domain_error("negative exponent in polynomial term");
    if (sgn(coeff) == 0)
      return;
    auto [it, inserted] = terms_.try_emplace(e, coeff);
    if (!inserted) {
      it->second += coeff;
      if (sgn(it->second) == 0)
        terms_.erase(it);
    }
  }

  std::int64_t weighted_degree(const Exponent &e) const {
    return weights_[0] * e.x + weights_[1] * e.y + weights_[2] * e.z;
  }

  /// Common weighted degree of all terms, or nothing if they differ.
  std::optional<std::int64_t> homogeneous_degree() const {
    std::optional<std::int64_t> d;
    for (const auto &[e, _] : terms_) {
      auto de = weighted_degree(e);
      if (d && *d != de)
        return std::nullopt;
      d = de;
    }
    return d;
  }

  bool is_homogeneous() const {
    return is_zero() || homogeneous_degree().has_value();
  }

  SparsePoly &operator+=(const SparsePoly &o) {
    for (const auto &[e, c] : o.terms_)
      add_term(e, c);
    return *this;
  }
  SparsePoly &operator-=(const SparsePoly &o) {
    for (const auto &[e, c] : o.terms_)
      add_term(e, -c);
    return *this;
  }
  SparsePoly operator-() const {
    SparsePoly r(weights_);
    for (const auto &[e, c] : terms_)
      r.terms_.emplace(e, -c);
    return r;
  }

  friend SparsePoly operator+(SparsePoly a, const SparsePoly &b) {
    return a += b;
  }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly &b) {
    return a -= b;
  }
  friend SparsePoly operator*(const SparsePoly &a, const SparsePoly &b) {
    SparsePoly r(a.weights_);
    for (const auto &[ea, ca] : a.terms_)
      for (const auto &[eb, cb] : b.terms_)
        r.add_term(ea + eb, ca * cb);
    return r;
  }
  friend SparsePoly operator*(const Rational &k, const SparsePoly &a) {
    SparsePoly r(a.weights_);
    for (const auto &[e, c] : a.terms_)
      r.add_term(e, k * c);
    return r;
  }

  SparsePoly pow(unsigned n) const {
    SparsePoly r = monomial({}, 1, weights_);
    for (unsigned i = 0; i < n; ++i)
      r = r * *this;
    return r;
  }

  SparsePoly times_monomial(const Exponent &m) const {
    SparsePoly r(weights_);
    for (const auto &[e, c] : terms_)
      r.terms_.emplace(e + m, c);
    return r;
  }

  /// Exact quotient by a monomial; throws NotDivisible naming the first term
  /// that the monomial does not divide.
  SparsePoly divide_exact(const Exponent &m) const {
    SparsePoly r(weights_);
    for (const auto &[e, c] : terms_) {
      if (!m.divides(e)) {
        std::ostringstream os;
        os << "term " << e << " is not divisible by " << m;
        throw NotDivisible(os.str(), e);
      }
      r.terms_.emplace(Exponent{e.x - m.x, e.y - m.y, e.z - m.z}, c);
    }
    return r;
  }

  /// Image in k[y, z] = k[x, y, z]/(x): the terms free of x.
  SparsePoly mod_x() const {
    SparsePoly r(weights_);
    for (const auto &[e, c] : terms_)
      if (e.x == 0)
        r.terms_.emplace(e, c);
    return r;
  }

  friend bool operator==(const SparsePoly &a, const SparsePoly &b) {
    return a.terms_ == b.terms_;
  }

private:
  Terms terms_;
  Weights weights_ = {1, 1, 1};
};

inline std::ostream &operator<<(std::ostream &os, const SparsePoly &p) {
  if (p.is_zero())
    return os << "0";
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto &[e, c] = *it;
    os << (first ? "" : " + ") << "(" << to_string(c) << ")";
    if (e.x)
      os << "*x^" << e.x;
    if (e.y)
      os << "*y^" << e.y;
    if (e.z)
      os << "*z^" << e.z;
    first = false;
  }
  return os;
}

inline SparsePoly divide_exact(const SparsePoly &p, const Exponent &mono) {
  return p.divide_exact(mono);
}

inline Weights weights_of(const CurveTriple &t) { return {t.a, t.b, t.c}; }

/// True iff p(T^a, T^b, T^c) is identically zero, i.e. p lies in the prime
/// of the curve.
inline bool curve_substitution_zero(const SparsePoly &p, const CurveTriple &t) {
  std::map<BigInt, Rational> image;
  for (const auto &[e, c] : p.terms()) {
    BigInt deg = to_big(e.x) * to_big(t.a) + to_big(e.y) * to_big(t.b) +
                 to_big(e.z) * to_big(t.c);
    image[deg] += c;
  }
  for (const auto &[_, c] : image)
    if (sgn(c) != 0)
      return false;
  return true;
}

// ---------------------------------------------------------------------------
// Binomial generators and their syzygies.

struct Generators {
  SparsePoly f, g, h;
};

/// f = x^s - y^t1 z^u1, g = y^t - x^s2 z^u2, h = z^u - x^s3 y^t3.
inline Generators build_generators(const HerzogPresentation &p) {
  const Weights w = weights_of(p.triple);
  auto mono = [&](std::int64_t ex, std::int64_t ey, std::int64_t ez,
                  int sign) {
    return SparsePoly::monomial({ex, ey, ez}, sign, w);
  };
  return {mono(p.s, 0, 0, 1) + mono(0, p.t1, p.u1, -1),
          mono(0, p.t, 0, 1) + mono(p.s2, 0, p.u2, -1),
          mono(0, 0, p.u, 1) + mono(p.s3, p.t3, 0, -1)};
}

/// The syzygies given by the rows of
///   ( y^t3  z^u1  x^s2 )
///   ( z^u2  x^s3  y^t1 )
/// whose 2x2 minors are -f, g, -h:
///   y^t3 f + z^u1 g + x^s2 h = 0,   z^u2 f + x^s3 g + y^t1 h = 0.
inline bool check_minor_relations(const Generators &gens,
                                  const HerzogPresentation &p) {
  const auto &[f, g, h] = gens;
  auto first = f.times_monomial({0, p.t3, 0}) + g.times_monomial({0, 0, p.u1}) +
               h.times_monomial({p.s2, 0, 0});
  auto second = f.times_monomial({0, 0, p.u2}) +
                g.times_monomial({p.s3, 0, 0}) + h.times_monomial({0, p.t1, 0});
  return first.is_zero() && second.is_zero();
}

// ---------------------------------------------------------------------------
// Monomial ideals of k[y, z].

struct InfiniteColength : std::domain_error {
  using std::domain_error::domain_error;
};

/// Monomial ideal of k[y, z] given by exponent pairs (i, j) for y^i z^j.
struct MonomialIdeal2D {
  std::vector<std::pair<std::int64_t, std::int64_t>> generators;
};

/// Number of monomials y^i z^j outside the ideal, swept column by column in
/// the y-degree.
inline std::int64_t staircase_length(const MonomialIdeal2D &ideal) {
  std::optional<std::int64_t> pure_y, pure_z;
  for (auto [i, j] : ideal.generators) {
    if (i < 0 || j < 0)
      throw std::domain_error("negative exponent in monomial ideal");
    if (j == 0)
      pure_y = pure_y ? std::min(*pure_y, i) : i;
    if (i == 0)
      pure_z = pure_z ? std::min(*pure_z, j) : j;
  }
  if (!pure_y || !pure_z)
    throw InfiniteColength("monomial ideal lacks a pure y-power or z-power");
  std::int64_t total = 0;
  for (std::int64_t i = 0; i < *pure_y; ++i) {
    std::int64_t bound = *pure_z;
    for (auto [gi, gj] : ideal.generators)
      if (gi <= i)
        bound = std::min(bound, gj);
    total += bound;
  }
  return total;
}

/// Leading monomial ideal of (x) + (polys): each polynomial must reduce
/// modulo x to a single term.
inline MonomialIdeal2D monomial_ideal_mod_x(const std::vector<SparsePoly> &polys) {
  MonomialIdeal2D ideal;
  for (const auto &p : polys) {
    auto r = p.mod_x();
    if (r.is_zero())
      continue;
    if (r.size() != 1)
      throw std::domain_error("polynomial is not a monomial modulo x");
    const auto &e = r.terms().begin()->first;
    ideal.generators.emplace_back(e.y, e.z);
  }
  return ideal;
}

inline MonomialIdeal2D product(const MonomialIdeal2D &I,
                               const MonomialIdeal2D &J) {
  MonomialIdeal2D r;
  for (auto [i1, j1] : I.generators)
    for (auto [i2, j2] : J.generators)
      r.generators.emplace_back(i1 + i2, j1 + j2);
  return r;
}

// ---------------------------------------------------------------------------
// The elements xi in I^(2) and zeta in I^(3).

struct HypothesisViolation : std::domain_error {
  using std::domain_error::domain_error;
};

/// xi = (z^(u2-u1) f^2 - g h) / x^s3. Requires s2 > s3, t1 = t3 = 1,
/// u1 < u2. The companion identity z^u1 xi = x^(s2-s3) h^2 - f g and the
/// reduction xi = y^3 mod x are checked before returning.
inline SparsePoly build_xi(const HerzogPresentation &p) {
  if (!(p.s2 > p.s3 && p.t1 == 1 && p.t3 == 1 && p.u1 < p.u2))
    throw HypothesisViolation("xi requires s2 > s3, t1 = t3 = 1, u1 < u2");
  const auto [f, g, h] = build_generators(p);
  auto numerator = (f * f).times_monomial({0, 0, p.u2 - p.u1}) - g * h;
  auto xi = numerator.divide_exact({p.s3, 0, 0});
  auto lhs = xi.times_monomial({0, 0, p.u1});
  auto rhs = (h * h).times_monomial({p.s2 - p.s3, 0, 0}) - f * g;
  if (!(lhs == rhs))
    throw std::logic_error("xi: z^u1 xi != x^(s2-s3) h^2 - f g");
  if (!(xi.mod_x() == SparsePoly::monomial({0, 3, 0}, 1, xi.weights())))
    throw std::logic_error("xi: xi is not y^3 modulo x");
  return xi;
}

/// zeta = (f^3 + z^(2u1-u2) h xi) / x^s3. Requires s2 > 2 s3, t1 = t3 = 1,
/// u1 < u2 < 2 u1. Checks z^(u2-u1) zeta = f xi + x^(s2-2s3) h^3 and
/// zeta = -y^4 z^(2u1-u2) mod x.
inline SparsePoly build_zeta(const HerzogPresentation &p, const SparsePoly &xi) {
  if (!(p.s2 > 2 * p.s3 && p.t1 == 1 && p.t3 == 1 && p.u1 < p.u2 &&
        p.u2 < 2 * p.u1))
    throw HypothesisViolation(
        "zeta requires s2 > 2 s3, t1 = t3 = 1, u1 < u2 < 2 u1");
  const auto [f, g, h] = build_generators(p);
  const std::int64_t k = 2 * p.u1 - p.u2;
  auto numerator = f.pow(3) + (h * xi).times_monomial({0, 0, k});
  auto zeta = numerator.divide_exact({p.s3, 0, 0});
  auto lhs = zeta.times_monomial({0, 0, p.u2 - p.u1});
  auto rhs = f * xi + h.pow(3).times_monomial({p.s2 - 2 * p.s3, 0, 0});
  if (!(lhs == rhs))
    throw std::logic_error("zeta: z^(u2-u1) zeta != f xi + x^(s2-2s3) h^3");
  if (!(zeta.mod_x() == SparsePoly::monomial({0, 4, k}, -1, zeta.weights())))
    throw std::logic_error("zeta: zeta is not -y^4 z^(2u1-u2) modulo x");
  return zeta;
}

/// Printed generators of (x) + I^(2) modulo x:
/// y^3, y^2 z^(2u1), y z^(u+u1), z^(2u).
inline MonomialIdeal2D second_symbolic_slice(const HerzogPresentation &p) {
  return {{{3, 0}, {2, 2 * p.u1}, {1, p.u + p.u1}, {0, 2 * p.u}}};
}

/// Printed generators of (x) + I^(3) modulo x:
/// y^5, y^4 z^(2u1-u2), y^3 z^u, y^2 z^(u+2u1), y z^(2u+u1), z^(3u).
inline MonomialIdeal2D third_symbolic_slice(const HerzogPresentation &p) {
  return {{{5, 0},
           {4, 2 * p.u1 - p.u2},
           {3, p.u},
           {2, p.u + 2 * p.u1},
           {1, 2 * p.u + p.u1},
           {0, 3 * p.u}}};
}

/// Printed generators of (x) + I^(2) I^(3) modulo x.
inline MonomialIdeal2D product_slice(const HerzogPresentation &p) {
  const auto u = p.u, u1 = p.u1, u2 = p.u2;
  return {{{8, 0},
           {7, 2 * u1 - u2},
           {6, std::min(u, 4 * u1 - u2)},
           {5, 4 * u1},
           {4, 4 * u1 + u2},
           {3, 3 * u},
           {2, 3 * u + 2 * u1},
           {1, 4 * u + u1},
           {0, 5 * u}}};
}

struct GapReport {
  std::int64_t len_product = 0;  // length of S/((x) + I^(2) I^(3))
  std::int64_t len_symbolic = 0; // length of S/((x) + I^(5)) = 15 a
  std::int64_t gap = 0;          // len_product - len_symbolic
  std::int64_t gap_formula = 0;  // min{u2 - u1, 2 u1 - u2}
};

inline GapReport check_product_gap(const HerzogPresentation &p) {
  if (!(p.s2 > 2 * p.s3 && p.t1 == 1 && p.t3 == 1 && p.u1 < p.u2 &&
        p.u2 < 2 * p.u1))
    throw HypothesisViolation(
        "gap check requires s2 > 2 s3, t1 = t3 = 1, u1 < u2 < 2 u1");
  GapReport r;
  r.len_product = staircase_length(product_slice(p));
  r.len_symbolic = 15 * p.triple.a;
  r.gap = r.len_product - r.len_symbolic;
  r.gap_formula = std::min(p.u2 - p.u1, 2 * p.u1 - p.u2);
  return r;
}

// ---------------------------------------------------------------------------
// The family with u2/u1 = alpha, s2/s3 = beta, t1 = t3 = 1.

struct Rejection : std::domain_error {
  using std::domain_error::domain_error;
};

struct FamilyParams {
  Rational alpha, beta;
  std::int64_t m = 1, n = 1;
  std::int64_t s2 = 0, s3 = 0, t1 = 1, t3 = 1, u1 = 0, u2 = 0;
  CurveTriple triple;
  std::int64_t gcd_abc = 0;
  bool pairwise_coprime = false;

  /// Exponent datum in presentation form. The triple need not be pairwise
  /// coprime, so this bypasses compute_presentation.
  HerzogPresentation presentation() const {
    HerzogPresentation p;
    p.triple = triple;
    p.s2 = s2;
    p.s3 = s3;
    p.t1 = t1;
    p.t3 = t3;
    p.u1 = u1;
    p.u2 = u2;
    p.s = s2 + s3;
    p.t = t1 + t3;
    p.u = u1 + u2;
    p.degF = p.s * triple.a;
    p.degG = p.t * triple.b;
    p.degH = p.u * triple.c;
    return p;
  }
};

/// Upper bound 7/3 - (alpha - 1)/(2 - alpha) for beta.
inline Rational family_beta_bound(const Rational &alpha) {
  return Rational(7, 3) - (alpha - 1) / (2 - alpha);
}

inline FamilyParams generate_family(const Rational &alpha, const Rational &beta,
                                    std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 1)
    throw Rejection("m and n must be positive integers");
  if (!(alpha > 1))
    throw Rejection("alpha must satisfy 1 < alpha (got " + to_string(alpha) +
                    ")");
  if (!(alpha < Rational(5, 4)))
    throw Rejection("alpha must satisfy alpha < 5/4 (got " + to_string(alpha) +
                    ")");
  if (!(beta > 2))
    throw Rejection("beta must satisfy 2 < beta (got " + to_string(beta) + ")");
  const Rational bound = family_beta_bound(alpha);
  if (!(beta < bound))
    throw Rejection("beta must satisfy beta < 7/3 - (alpha-1)/(2-alpha) = " +
                    to_string(bound) + " (got " + to_string(beta) + ")");

  auto to_i64 = [](const BigInt &v) {
    if (!v.fits_slong_p())
      throw Rejection("family exponents overflow 64-bit integers");
    return static_cast<std::int64_t>(v.get_si());
  };
  FamilyParams f;
  f.alpha = alpha;
  f.beta = beta;
  f.m = m;
  f.n = n;
  f.s2 = to_i64(beta.get_num() * to_big(m));
  f.s3 = to_i64(beta.get_den() * to_big(m));
  f.u2 = to_i64(alpha.get_num() * to_big(n));
  f.u1 = to_i64(alpha.get_den() * to_big(n));
  const std::int64_t t = f.t1 + f.t3, u = f.u1 + f.u2;
  f.triple.a = f.t3 * f.u1 + f.t1 * u;
  f.triple.b = f.s3 * f.u2 + f.s2 * u;
  f.triple.c = f.s2 * f.t3 + f.s3 * t;
  f.gcd_abc = std::gcd(std::gcd(f.triple.a, f.triple.b), f.triple.c);
  f.pairwise_coprime = pairwise_coprime(f.triple);
  return f;
}

} // namespace symrees
