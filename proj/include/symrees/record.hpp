#pragma once

// JSON encoding of verdicts and witnesses.
//
// Verdict record fields: triple, presentation, assumptions, eu, gk,
// linear_system, witness_exists, noetherian, reason, internal_errors,
// witness (only when present), timing_ms, version. Rationals are strings
// "p" or "p/q"; absent optional values are null.

#include "symrees/symbolic_piece.hpp"

#include "json.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace symrees {

inline constexpr const char *kVersion = "0.1.0";

using nlohmann::json;

struct VerdictRecord {
  Verdict verdict;
  std::optional<double> timing_ms;
  std::string version = kVersion;

  friend bool operator==(const VerdictRecord &,
                         const VerdictRecord &) = default;
};

namespace detail {

template <typename T> json optional_to_json(const std::optional<T> &v) {
  return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> optional_from_json(const json &j, const char *key) {
  if (!j.contains(key) || j.at(key).is_null())
    return std::nullopt;
  return j.at(key).get<T>();
}

} // namespace detail

inline void to_json(json &j, const CurveTriple &t) {
  j = json{{"a", t.a}, {"b", t.b}, {"c", t.c}};
}
inline void from_json(const json &j, CurveTriple &t) {
  j.at("a").get_to(t.a);
  j.at("b").get_to(t.b);
  j.at("c").get_to(t.c);
}

inline void to_json(json &j, const HerzogPresentation &p) {
  j = json{{"s", p.s},       {"t", p.t},       {"u", p.u},
           {"s2", p.s2},     {"s3", p.s3},     {"t1", p.t1},
           {"t3", p.t3},     {"u1", p.u1},     {"u2", p.u2},
           {"degF", p.degF}, {"degG", p.degG}, {"degH", p.degH},
           {"used_fallback", p.used_fallback}};
}
inline void from_json(const json &j, HerzogPresentation &p) {
  j.at("s").get_to(p.s);
  j.at("t").get_to(p.t);
  j.at("u").get_to(p.u);
  j.at("s2").get_to(p.s2);
  j.at("s3").get_to(p.s3);
  j.at("t1").get_to(p.t1);
  j.at("t3").get_to(p.t3);
  j.at("u1").get_to(p.u1);
  j.at("u2").get_to(p.u2);
  j.at("degF").get_to(p.degF);
  j.at("degG").get_to(p.degG);
  j.at("degH").get_to(p.degH);
  j.at("used_fallback").get_to(p.used_fallback);
}

inline void to_json(json &j, const AssumptionReport &r) {
  j = json{{"pairwise_coprime", r.pairwise_coprime},
           {"three_generated", r.three_generated},
           {"negative_curve_iii", r.negative_curve_iii},
           {"all_hold", r.all_hold}};
}
inline void from_json(const json &j, AssumptionReport &r) {
  j.at("pairwise_coprime").get_to(r.pairwise_coprime);
  j.at("three_generated").get_to(r.three_generated);
  j.at("negative_curve_iii").get_to(r.negative_curve_iii);
  j.at("all_hold").get_to(r.all_hold);
}

inline void to_json(json &j, const EuReport &r) {
  j = json{{"ell", r.ell},
           {"ell_sorted", r.ell_sorted},
           {"holds", r.holds},
           {"first_failure_index",
            detail::optional_to_json(r.first_failure_index)}};
}
inline void from_json(const json &j, EuReport &r) {
  j.at("ell").get_to(r.ell);
  j.at("ell_sorted").get_to(r.ell_sorted);
  j.at("holds").get_to(r.holds);
  r.first_failure_index =
      detail::optional_from_json<std::int64_t>(j, "first_failure_index");
}

inline void to_json(json &j, const GkReport &r) {
  j = json{{"n", r.n},
           {"m", r.m},
           {"def_I_holds", r.def_I_holds},
           {"def_II_holds", r.def_II_holds},
           {"five_way", r.five_way ? json(to_string(*r.five_way)) : json()},
           {"holds", r.holds}};
}
inline void from_json(const json &j, GkReport &r) {
  j.at("n").get_to(r.n);
  j.at("m").get_to(r.m);
  j.at("def_I_holds").get_to(r.def_I_holds);
  j.at("def_II_holds").get_to(r.def_II_holds);
  j.at("holds").get_to(r.holds);
  r.five_way.reset();
  if (auto s = detail::optional_from_json<std::string>(j, "five_way")) {
    r.five_way = parse_gk_case(*s);
    if (!r.five_way)
      throw std::invalid_argument("unknown GK case '" + *s + "'");
  }
}

inline void to_json(json &j, const PieceSummary &s) {
  j = json{{"points", s.points},
           {"constraints", s.constraints},
           {"rank", s.rank},
           {"dim_piece_u", s.dimension()}};
}
inline void from_json(const json &j, PieceSummary &s) {
  j.at("points").get_to(s.points);
  j.at("constraints").get_to(s.constraints);
  j.at("rank").get_to(s.rank);
}

inline void to_json(json &j, const WitnessElement &w) {
  json coeffs = json::array();
  for (const auto &[pt, c] : w.coefficients)
    coeffs.push_back(
        json{{"alpha", pt.alpha}, {"beta", pt.beta}, {"c", to_string(c)}});
  j = json{{"e", w.e},
           {"n", w.n},
           {"coefficients", coeffs},
           {"integer_scale", to_string(integer_scale(w))}};
}
inline void from_json(const json &j, WitnessElement &w) {
  j.at("e").get_to(w.e);
  j.at("n").get_to(w.n);
  w.coefficients.clear();
  for (const auto &t : j.at("coefficients")) {
    LatticePoint pt{t.at("alpha").get<std::int64_t>(),
                    t.at("beta").get<std::int64_t>()};
    if (!w.coefficients.emplace(pt, parse_rational(t.at("c").get<std::string>()))
             .second)
      throw std::invalid_argument("duplicate lattice point in witness");
  }
}

inline json noetherian_to_json(Noetherian n) {
  switch (n) {
  case Noetherian::Yes:
    return true;
  case Noetherian::No:
    return false;
  case Noetherian::Inapplicable:
    break;
  }
  return "inapplicable";
}

inline Noetherian noetherian_from_json(const json &j) {
  if (j.is_boolean())
    return j.get<bool>() ? Noetherian::Yes : Noetherian::No;
  if (j == "inapplicable")
    return Noetherian::Inapplicable;
  throw std::invalid_argument("noetherian must be true, false or "
                              "\"inapplicable\"");
}

inline json verdict_fields(const Verdict &v) {
  json j;
  j["triple"] = v.triple;
  j["presentation"] = detail::optional_to_json(v.presentation);
  j["assumptions"] = v.assumptions;
  j["eu"] = detail::optional_to_json(v.eu);
  j["gk"] = detail::optional_to_json(v.gk);
  j["linear_system"] = detail::optional_to_json(v.linear_system);
  j["witness_exists"] = detail::optional_to_json(v.witness_exists);
  j["noetherian"] = noetherian_to_json(v.noetherian);
  j["reason"] = v.reason;
  j["internal_errors"] = v.internal_errors;
  if (v.witness)
    j["witness"] = *v.witness;
  return j;
}

inline void to_json(json &j, const VerdictRecord &r) {
  j = verdict_fields(r.verdict);
  j["timing_ms"] = detail::optional_to_json(r.timing_ms);
  j["version"] = r.version;
}

inline void from_json(const json &j, VerdictRecord &r) {
  Verdict &v = r.verdict;
  j.at("triple").get_to(v.triple);
  v.presentation = detail::optional_from_json<HerzogPresentation>(j, "presentation");
  if (v.presentation)
    v.presentation->triple = v.triple;
  j.at("assumptions").get_to(v.assumptions);
  v.eu = detail::optional_from_json<EuReport>(j, "eu");
  v.gk = detail::optional_from_json<GkReport>(j, "gk");
  v.linear_system = detail::optional_from_json<PieceSummary>(j, "linear_system");
  v.witness_exists = detail::optional_from_json<bool>(j, "witness_exists");
  v.noetherian = noetherian_from_json(j.at("noetherian"));
  j.at("reason").get_to(v.reason);
  j.at("internal_errors").get_to(v.internal_errors);
  v.witness = detail::optional_from_json<WitnessElement>(j, "witness");
  r.timing_ms = detail::optional_from_json<double>(j, "timing_ms");
  j.at("version").get_to(r.version);
}

// ---------------------------------------------------------------------------
// Witness documents: the normalized lattice coefficients, the expanded
// polynomial eta, and the results of both membership checks.

struct WitnessChecks {
  bool shift_membership = false;  // eta in (v - 1, w - 1)^n
  bool curve_substitution = false; // eta(T^a, T^b, T^c) = 0
  bool homogeneous = false;        // every term has degree e a b
  bool normalized = false;         // coefficient 1 at (0,0)
  bool support_in_region = false;  // support inside e * Delta_u
  bool all() const {
    return shift_membership && curve_substitution && homogeneous &&
           normalized && support_in_region;
  }
};

inline WitnessChecks check_witness(const HerzogPresentation &p,
                                   const WitnessElement &w) {
  WitnessChecks c;
  const DeltaRegion region(p, w.e);
  c.support_in_region = true;
  for (const auto &[pt, _] : w.coefficients)
    c.support_in_region = c.support_in_region && region.contains(pt);
  auto it = w.coefficients.find(LatticePoint{0, 0});
  c.normalized = it != w.coefficients.end() && it->second == 1;
  c.shift_membership = shift_membership_test(w.coefficients, w.n);
  if (c.support_in_region) {
    const auto eta = reconstruct_polynomial(p, w);
    c.curve_substitution = curve_substitution_zero(eta, p.triple);
    const auto deg = eta.homogeneous_degree();
    c.homogeneous = deg && *deg == w.e * p.triple.a * p.triple.b;
  }
  return c;
}

inline json witness_document(const HerzogPresentation &p,
                             const WitnessElement &w) {
  const auto checks = check_witness(p, w);
  json poly = json::array();
  const auto eta = reconstruct_polynomial(p, w);
  for (const auto &[e, c] : eta.terms())
    poly.push_back(json{{"x", e.x}, {"y", e.y}, {"z", e.z}, {"c", to_string(c)}});
  return json{{"triple", p.triple},
              {"presentation", p},
              {"witness", w},
              {"degree", w.e * p.triple.a * p.triple.b},
              {"polynomial", poly},
              {"checks",
               {{"shift_membership", checks.shift_membership},
                {"curve_substitution", checks.curve_substitution},
                {"homogeneous", checks.homogeneous},
                {"normalized", checks.normalized},
                {"support_in_region", checks.support_in_region}}},
              {"version", kVersion}};
}

struct WitnessVerification {
  WitnessChecks checks;
  bool polynomial_matches = false;
  bool order_matches = false; // n = u and e = 1 for a Huneke witness
  bool passed() const {
    return checks.all() && polynomial_matches && order_matches;
  }
};

/// Re-checks a witness document from scratch: the presentation is recomputed
/// from the triple, and the stored polynomial must equal the reconstruction.
inline WitnessVerification verify_witness_document(const json &doc) {
  const auto triple = doc.at("triple").get<CurveTriple>();
  const auto p = compute_presentation(triple);
  const auto w = doc.at("witness").get<WitnessElement>();
  WitnessVerification r;
  r.checks = check_witness(p, w);
  r.order_matches = w.e == 1 && w.n == p.u;
  if (r.checks.support_in_region) {
    SparsePoly stored(weights_of(triple));
    for (const auto &t : doc.at("polynomial"))
      stored.add_term({t.at("x").get<std::int64_t>(), t.at("y").get<std::int64_t>(),
                       t.at("z").get<std::int64_t>()},
                      parse_rational(t.at("c").get<std::string>()));
    r.polynomial_matches = stored == reconstruct_polynomial(p, w);
  }
  return r;
}

} // namespace symrees
