#pragma once

// Batch classification over boxes of triples, with the cross-criteria
// properties asserted on every record.

#include "symrees/record.hpp"
#include "symrees/symbolic_piece.hpp"

#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace symrees {

struct Range {
  std::int64_t lo = 1;
  std::int64_t hi = 0;
  bool empty() const { return lo > hi; }
};

/// Parses "LO:HI".
inline Range parse_range(const std::string &text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("range must look like LO:HI, got '" + text + "'");
  try {
    std::size_t used_lo = 0, used_hi = 0;
    const std::string lo = text.substr(0, colon), hi = text.substr(colon + 1);
    Range r{std::stoll(lo, &used_lo), std::stoll(hi, &used_hi)};
    if (used_lo != lo.size() || used_hi != hi.size())
      throw std::invalid_argument("trailing characters");
    return r;
  } catch (const std::exception &) {
    throw std::invalid_argument("range must look like LO:HI, got '" + text + "'");
  }
}

struct ScanJob {
  Range a, b, c;
  // Emit triples that fail the standing assumptions too (as inapplicable).
  bool include_inapplicable = false;
  std::optional<std::int64_t> u_le;
  unsigned jobs = 1;

  static ScanJob bounded(std::int64_t max) {
    if (max < 3)
      throw std::invalid_argument("scan bound must be at least 3");
    ScanJob j;
    j.a = j.b = j.c = Range{1, max};
    return j;
  }

  void validate() const {
    for (const auto *r : {&a, &b, &c})
      if (!r->empty() && (r->lo < 1 || r->hi > kMaxWeight))
        throw std::invalid_argument("scan ranges must lie in [1, 10^9]");
    if (jobs < 1)
      throw std::invalid_argument("jobs must be positive");
  }
};

struct PropertyViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Violations of the cross-criteria properties for one verdict. `swapped`
/// is the verdict for (b, a, c).
inline std::vector<std::string> cross_property_violations(const Verdict &v,
                                                          const Verdict &swapped) {
  std::vector<std::string> out;
  for (const auto &e : v.internal_errors)
    out.push_back("internal: " + e);
  if (!v.assumptions.all_hold)
    return out;
  const bool eu = v.eu->holds;
  const bool gk = v.gk->holds;
  const bool w = v.witness_exists.value_or(false);
  if (eu && !w)
    out.push_back("EU holds but no witness exists");
  if (gk && w)
    out.push_back("GK holds but a witness exists");
  if (gk != v.gk->five_way.has_value())
    out.push_back("GK definition form and five-case form disagree");
  if (v.presentation->u <= 6) {
    if (eu == gk)
      out.push_back("u <= 6 but EU and GK are not exclusive alternatives");
    if (eu != w)
      out.push_back("u <= 6 but EU does not match the verdict");
  }
  if (swapped.noetherian != v.noetherian)
    out.push_back("verdict changes under a <-> b");
  if (swapped.eu && swapped.eu->holds != eu)
    out.push_back("EU changes under a <-> b");
  if (swapped.gk && swapped.gk->holds != gk)
    out.push_back("GK changes under a <-> b");
  return out;
}

namespace detail {

inline bool wanted(const Verdict &v, const ScanJob &job) {
  if (!job.include_inapplicable && !v.assumptions.all_hold)
    return false;
  if (job.u_le && (!v.presentation || v.presentation->u > *job.u_le))
    return false;
  return true;
}

} // namespace detail

/// Classifies every pairwise coprime triple of the job, in lexicographic
/// order, and returns the verdicts the filters keep. Throws
/// PropertyViolation on the first record that breaks a cross-criteria
/// property. The result is independent of `jobs`.
inline std::vector<Verdict> run_scan(const ScanJob &job) {
  job.validate();
  std::vector<CurveTriple> triples;
  if (!job.a.empty() && !job.b.empty() && !job.c.empty())
    for (auto a = job.a.lo; a <= job.a.hi; ++a)
      for (auto b = job.b.lo; b <= job.b.hi; ++b)
        for (auto c = job.c.lo; c <= job.c.hi; ++c)
          if (pairwise_coprime({a, b, c}))
            triples.push_back({a, b, c});

  std::vector<std::optional<Verdict>> results(triples.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::string> errors(job.jobs);
  auto worker = [&](unsigned id) {
    try {
      for (std::size_t i = next++; i < triples.size(); i = next++)
        results[i] = classify(triples[i]);
    } catch (const std::exception &ex) {
      errors[id] = ex.what();
      next = triples.size();
    }
  };
  if (job.jobs == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned id = 0; id < job.jobs; ++id)
      pool.emplace_back(worker, id);
  }
  for (const auto &e : errors)
    if (!e.empty())
      throw std::runtime_error("scan worker failed: " + e);

  std::map<CurveTriple, std::size_t> index;
  for (std::size_t i = 0; i < triples.size(); ++i)
    index.emplace(triples[i], i);

  std::vector<Verdict> out;
  for (auto &r : results) {
    Verdict &v = *r;
    if (!detail::wanted(v, job))
      continue;
    const auto sw = v.triple.swapped_ab();
    auto it = index.find(sw);
    const Verdict swapped =
        it != index.end() ? *results[it->second] : classify(sw);
    auto violations = cross_property_violations(v, swapped);
    if (!violations.empty()) {
      std::ostringstream os;
      os << "property violation at " << v.triple << ":";
      for (const auto &s : violations)
        os << " [" << s << "]";
      throw PropertyViolation(os.str());
    }
    out.push_back(std::move(v));
  }
  return out;
}

inline std::string csv_header() {
  return "a,b,c,s,t,u,eu,gk_clause,witness_exists,noetherian,points,dim_piece_u";
}

inline std::string csv_row(const Verdict &v) {
  std::ostringstream os;
  os << v.triple.a << ',' << v.triple.b << ',' << v.triple.c << ',';
  if (v.presentation)
    os << v.presentation->s << ',' << v.presentation->t << ','
       << v.presentation->u << ',';
  else
    os << ",,,";
  if (v.eu)
    os << (v.eu->holds ? "true" : "false");
  os << ',';
  if (v.gk && v.gk->five_way)
    os << to_string(*v.gk->five_way);
  else if (v.gk && v.gk->holds)
    os << "GK";
  else if (v.gk)
    os << "none";
  os << ',';
  if (v.witness_exists)
    os << (*v.witness_exists ? "true" : "false");
  os << ',' << to_string(v.noetherian) << ',';
  if (v.linear_system)
    os << v.linear_system->points << ',' << v.linear_system->dimension();
  else
    os << ',';
  return os.str();
}

} // namespace symrees
