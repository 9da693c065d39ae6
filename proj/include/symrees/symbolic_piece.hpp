#pragma once

// Graded pieces of symbolic powers through the Laurent model.
//
// [p^(n)]_{e a b} = y^(e a) * (span of v^alpha w^beta over e*Delta_u)
//                   cap (v - 1, w - 1)^n k[v^+-1, w^+-1].
// In characteristic 0, phi lies in (v-1, w-1)^n iff every derivative
// d^(k+l) phi / dv^k dw^l vanishes at (1,1) for k + l < n, and for
// phi = sum C v^alpha w^beta that derivative is
//   sum C ff(alpha, k) ff(beta, l),   ff = falling factorial.
// The piece is therefore the null space of a matrix with one row per (k, l)
// and one column per lattice point.
//
// Under the standing assumptions the symbolic Rees ring is Noetherian iff the
// e = 1, n = u piece has an element with nonzero constant term, i.e. iff the
// unit vector at the (0,0) column is not in the row space of that matrix.

#include "symrees/criteria.hpp"
#include "symrees/exact.hpp"
#include "symrees/lattice.hpp"
#include "symrees/poly.hpp"
#include "symrees/presentation.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace symrees {

struct DerivativeOrder {
  int k = 0; // order in v
  int l = 0; // order in w
  friend bool operator==(const DerivativeOrder &,
                         const DerivativeOrder &) = default;
};

/// Orders (k, l) with k + l < n: total degree ascending, and within a
/// degree d the v-order descending, (d,0), (d-1,1), ..., (0,d).
inline std::vector<DerivativeOrder> derivative_orders(int n) {
  std::vector<DerivativeOrder> out;
  for (int d = 0; d < n; ++d)
    for (int k = d; k >= 0; --k)
      out.push_back({k, d - k});
  return out;
}

struct DerivativeMatrix {
  QMatrix<LatticePoint> base;
  std::vector<DerivativeOrder> orders;
  int n = 0;
  std::int64_t e = 1;
};

inline DerivativeMatrix build_matrix(std::span<const LatticePoint> points,
                                     int n, std::int64_t e = 1) {
  if (n < 0)
    throw std::invalid_argument("derivative order must be nonnegative");
  if (points.empty())
    throw std::invalid_argument("build_matrix needs at least one point");
  DerivativeMatrix dm;
  dm.n = n;
  dm.e = e;
  dm.orders = derivative_orders(n);
  dm.base = QMatrix<LatticePoint>(
      dm.orders.size(), std::vector<LatticePoint>(points.begin(), points.end()));
  for (std::size_t j = 0; j < points.size(); ++j) {
    std::vector<BigInt> fa(static_cast<std::size_t>(n)),
        fb(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      fa[static_cast<std::size_t>(k)] =
          falling_factorial(points[j].alpha, static_cast<unsigned>(k));
      fb[static_cast<std::size_t>(k)] =
          falling_factorial(points[j].beta, static_cast<unsigned>(k));
    }
    for (std::size_t i = 0; i < dm.orders.size(); ++i) {
      const auto [k, l] = dm.orders[i];
      dm.base(i, j) = Rational(fa[static_cast<std::size_t>(k)] *
                               fb[static_cast<std::size_t>(l)]);
    }
  }
  return dm;
}

struct PieceSummary {
  std::size_t points = 0;
  std::size_t constraints = 0;
  std::size_t rank = 0;
  std::size_t dimension() const { return points - rank; }
  friend bool operator==(const PieceSummary &, const PieceSummary &) = default;
};

namespace detail {

struct PieceSystem {
  std::vector<LatticePoint> points;
  DerivativeMatrix matrix;
  IntegerEchelon echelon;
};

inline PieceSystem piece_system(const HerzogPresentation &p, std::int64_t e,
                                int n) {
  auto points = enumerate_points(p, e);
  auto matrix = build_matrix(points, n, e);
  auto echelon = echelon_of(matrix.base);
  return {std::move(points), std::move(matrix), std::move(echelon)};
}

} // namespace detail

inline PieceSummary piece_summary(const HerzogPresentation &p, std::int64_t e,
                                  int n) {
  const auto sys = detail::piece_system(p, e, n);
  return {sys.points.size(), sys.matrix.orders.size(), sys.echelon.rank()};
}

/// dim_k [p^(n)]_{e a b}.
inline std::size_t piece_dimension(const HerzogPresentation &p, std::int64_t e,
                                   int n) {
  return piece_summary(p, e, n).dimension();
}

/// True iff [p^(n)]_{e a b} contains an element whose y^(e a) coefficient
/// is nonzero. Exploratory form of the witness test for arbitrary e, n.
inline bool constant_term_attainable(const HerzogPresentation &p,
                                     std::int64_t e, int n) {
  const auto sys = detail::piece_system(p, e, n);
  return !sys.echelon.contains(unit_vector(sys.points.size(), 0));
}

struct AssumptionViolation : std::domain_error {
  using std::domain_error::domain_error;
};

struct NoWitness : std::domain_error {
  using std::domain_error::domain_error;
};

inline void require_assumptions(const HerzogPresentation &p) {
  const auto r = validate_assumptions(p);
  if (!r.three_generated)
    throw AssumptionViolation("the prime is not minimally three-generated");
  if (!r.negative_curve_iii)
    throw AssumptionViolation("u^2 c < a b fails: z^u - x^s3 y^t3 is not the "
                              "negative curve");
  if (!r.pairwise_coprime)
    throw AssumptionViolation("a, b, c are not pairwise coprime");
}

inline bool huneke_witness_exists(const HerzogPresentation &p) {
  require_assumptions(p);
  return constant_term_attainable(p, 1, static_cast<int>(p.u));
}

struct WitnessElement {
  std::map<LatticePoint, Rational> coefficients;
  std::int64_t e = 1;
  int n = 0;
  friend bool operator==(const WitnessElement &,
                         const WitnessElement &) = default;
};

/// Null-space vector normalized to 1 at (0,0), for arbitrary e and n.
///
/// Takes the first basis vector (in free-column order) of the null space
/// whose (0,0) coordinate is nonzero and divides by that coordinate.
inline WitnessElement extract_witness_at(const HerzogPresentation &p,
                                         std::int64_t e, int n) {
  const auto sys = detail::piece_system(p, e, n);
  for (const auto &x : null_space_of(sys.echelon)) {
    if (sgn(x[0]) == 0)
      continue;
    WitnessElement w;
    w.e = e;
    w.n = n;
    const Rational scale = 1 / x[0];
    for (std::size_t j = 0; j < x.size(); ++j)
      if (sgn(x[j]) != 0)
        w.coefficients.emplace(sys.points[j], x[j] * scale);
    return w;
  }
  throw NoWitness("no element of the graded piece has a nonzero constant term");
}

inline WitnessElement extract_witness(const HerzogPresentation &p) {
  require_assumptions(p);
  return extract_witness_at(p, 1, static_cast<int>(p.u));
}

/// Least common multiple of the witness denominators.
inline BigInt integer_scale(const WitnessElement &w) {
  BigInt l = 1;
  for (const auto &[_, c] : w.coefficients)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

/// Membership of phi = sum C v^alpha w^beta in (v - 1, w - 1)^n, decided
/// without derivatives: multiply by a monomial unit so all exponents are
/// nonnegative, substitute v = 1 + s, w = 1 + r, and require every
/// coefficient of s^i r^j with i + j < n to vanish.
inline bool
shift_membership_test(const std::map<LatticePoint, Rational> &coeffs, int n) {
  if (coeffs.empty() || n <= 0)
    return true;
  std::int64_t min_alpha = coeffs.begin()->first.alpha;
  std::int64_t min_beta = coeffs.begin()->first.beta;
  for (const auto &[pt, _] : coeffs) {
    min_alpha = std::min(min_alpha, pt.alpha);
    min_beta = std::min(min_beta, pt.beta);
  }
  // binomials[t][i] = C(A_t, i), C(B_t, j) for each term t.
  std::vector<std::vector<BigInt>> bin_a, bin_b;
  std::vector<Rational> cs;
  for (const auto &[pt, c] : coeffs) {
    std::vector<BigInt> ba(static_cast<std::size_t>(n)),
        bb(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      BigInt A = to_big(pt.alpha - min_alpha), B = to_big(pt.beta - min_beta);
      mpz_bin_ui(ba[static_cast<std::size_t>(i)].get_mpz_t(), A.get_mpz_t(),
                 static_cast<unsigned long>(i));
      mpz_bin_ui(bb[static_cast<std::size_t>(i)].get_mpz_t(), B.get_mpz_t(),
                 static_cast<unsigned long>(i));
    }
    bin_a.push_back(std::move(ba));
    bin_b.push_back(std::move(bb));
    cs.push_back(c);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; i + j < n; ++j) {
      Rational sum = 0;
      for (std::size_t t = 0; t < cs.size(); ++t)
        sum += cs[t] * Rational(bin_a[t][static_cast<std::size_t>(i)] *
                                bin_b[t][static_cast<std::size_t>(j)]);
      if (sgn(sum) != 0)
        return false;
    }
  return true;
}

/// eta = y^(e a) sum C v^alpha w^beta as a polynomial in x, y, z.
inline SparsePoly reconstruct_polynomial(const HerzogPresentation &p,
                                         const WitnessElement &w) {
  SparsePoly eta(weights_of(p.triple));
  const std::int64_t ea = w.e * p.triple.a;
  for (const auto &[pt, c] : w.coefficients) {
    const Exponent ex{pt.alpha * p.s2 + pt.beta * p.s3,
                      ea - pt.alpha * p.t + pt.beta * p.t3,
                      pt.alpha * p.u2 - pt.beta * p.u};
    eta.add_term(ex, c);
  }
  return eta;
}

// ---------------------------------------------------------------------------
// Classification.

enum class Noetherian { Yes, No, Inapplicable };

inline std::string to_string(Noetherian n) {
  switch (n) {
  case Noetherian::Yes:
    return "true";
  case Noetherian::No:
    return "false";
  case Noetherian::Inapplicable:
    return "inapplicable";
  }
  return "inapplicable";
}

struct Verdict {
  CurveTriple triple;
  std::optional<HerzogPresentation> presentation;
  AssumptionReport assumptions;
  std::optional<EuReport> eu;
  std::optional<GkReport> gk;
  // The e = 1, n = u system; present when the standing assumptions hold.
  std::optional<PieceSummary> linear_system;
  std::optional<bool> witness_exists;
  Noetherian noetherian = Noetherian::Inapplicable;
  std::string reason;
  std::optional<WitnessElement> witness;
  std::vector<std::string> internal_errors;

  friend bool operator==(const Verdict &, const Verdict &) = default;
};

struct ClassifyOptions {
  bool with_witness = false;
  // Refuse systems whose lattice-point count (about a b / 2c) exceeds this.
  std::size_t max_points = 200000;
};

struct ProblemTooLarge : std::length_error {
  using std::length_error::length_error;
};

/// Presentation, standing assumptions, EU, GK and the linear witness test.
///
/// Inputs outside [1, 10^9] throw std::invalid_argument; every other
/// failure is reported in the verdict.
inline Verdict classify(const CurveTriple &t, ClassifyOptions opts = {}) {
  validate_triple(t);
  Verdict v;
  v.triple = t;
  v.assumptions.pairwise_coprime = pairwise_coprime(t);
  if (!v.assumptions.pairwise_coprime) {
    v.reason = "a, b, c are not pairwise coprime";
    return v;
  }
  try {
    v.presentation = compute_presentation(t);
  } catch (const NotThreeGenerated &ex) {
    v.reason = std::string("not three-generated: ") + ex.what();
    return v;
  }
  const auto &p = *v.presentation;
  v.assumptions = validate_assumptions(p);
  v.eu = check_eu(p);
  v.gk = check_gk_definition(p);

  if (!v.assumptions.all_hold) {
    v.reason = "u^2 c >= a b: the curve z^u = x^s3 y^t3 is not negative, so "
               "the linear test does not decide finite generation";
    return v;
  }

  // Delta_u has area a b / 2c.
  if (to_big(t.a) * to_big(t.b) / (2 * to_big(t.c)) >
      static_cast<unsigned long>(opts.max_points))
    throw ProblemTooLarge("the degree ab piece has more than " +
                          std::to_string(opts.max_points) + " lattice points");
  const auto sys = detail::piece_system(p, 1, static_cast<int>(p.u));
  v.linear_system = PieceSummary{sys.points.size(), sys.matrix.orders.size(),
                                 sys.echelon.rank()};

  v.gk->five_way = check_gk_five(p);
  const bool exists = !sys.echelon.contains(unit_vector(sys.points.size(), 0));
  v.witness_exists = exists;
  v.noetherian = exists ? Noetherian::Yes : Noetherian::No;
  v.reason = exists ? "[p^(u)]_{ab} has an element with nonzero constant term"
                    : "every element of [p^(u)]_{ab} has zero constant term";

  if (v.eu->holds && !exists)
    v.internal_errors.push_back("EU holds but no witness exists");
  if (v.gk->holds != v.gk->five_way.has_value())
    v.internal_errors.push_back(
        "GK definition and five-case form disagree");
  if (v.gk->holds && exists)
    v.internal_errors.push_back("GK holds but a witness exists");

  if (opts.with_witness && exists)
    v.witness = extract_witness_at(p, 1, static_cast<int>(p.u));
  return v;
}

} // namespace symrees
