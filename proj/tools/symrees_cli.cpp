// Command-line front end.
//
// Exit codes: 0 Noetherian / success, 1 not Noetherian / failed check,
// 2 inapplicable / rejected parameters, 3 usage error, 4 internal error,
// 5 cross-criteria property violation during a scan.

#include "symrees/symrees.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>

namespace {

using namespace symrees;

constexpr int kExitUsage = 3;
constexpr int kExitInternal = 4;
constexpr int kExitProperty = 5;

int verdict_exit_code(const Verdict &v) {
  if (!v.internal_errors.empty())
    return kExitInternal;
  switch (v.noetherian) {
  case Noetherian::Yes:
    return 0;
  case Noetherian::No:
    return 1;
  case Noetherian::Inapplicable:
    return 2;
  }
  return kExitInternal;
}

std::string join(const std::vector<std::int64_t> &xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i)
    s += (i ? "," : "") + std::to_string(xs[i]);
  return s;
}

void print_table(const VerdictRecord &rec, std::ostream &os) {
  const Verdict &v = rec.verdict;
  os << "triple            " << v.triple << "\n";
  if (v.presentation) {
    const auto &p = *v.presentation;
    os << "generators        x^" << p.s << " - y^" << p.t1 << " z^" << p.u1
       << ",  y^" << p.t << " - x^" << p.s2 << " z^" << p.u2 << ",  z^" << p.u
       << " - x^" << p.s3 << " y^" << p.t3 << "\n";
  }
  os << "assumptions       coprime=" << v.assumptions.pairwise_coprime
     << " three_generated=" << v.assumptions.three_generated
     << " u^2c<ab=" << v.assumptions.negative_curve_iii << "\n";
  if (v.eu)
    os << "EU                " << (v.eu->holds ? "holds" : "fails") << "  l=("
       << join(v.eu->ell) << ")  sorted=(" << join(v.eu->ell_sorted) << ")\n";
  if (v.gk)
    os << "GK                " << (v.gk->holds ? "holds" : "fails")
       << "  n=" << v.gk->n << " m=" << v.gk->m << "  case="
       << (v.gk->five_way ? to_string(*v.gk->five_way) : std::string("none"))
       << "\n";
  if (v.linear_system)
    os << "linear system     points=" << v.linear_system->points
       << " constraints=" << v.linear_system->constraints
       << " rank=" << v.linear_system->rank
       << " dim=" << v.linear_system->dimension() << "\n";
  if (v.witness_exists)
    os << "witness exists    " << (*v.witness_exists ? "yes" : "no") << "\n";
  os << "noetherian        " << to_string(v.noetherian) << "\n";
  os << "reason            " << v.reason << "\n";
  for (const auto &e : v.internal_errors)
    os << "INTERNAL ERROR    " << e << "\n";
  if (rec.timing_ms)
    os << "time              " << std::fixed << std::setprecision(3)
       << *rec.timing_ms << " ms\n";
}

int cmd_classify(CurveTriple t, bool table, bool with_witness) {
  const auto start = std::chrono::steady_clock::now();
  VerdictRecord rec;
  rec.verdict = classify(t, {.with_witness = with_witness});
  rec.timing_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  if (table)
    print_table(rec, std::cout);
  else
    std::cout << json(rec).dump() << "\n";
  return verdict_exit_code(rec.verdict);
}

struct ScanArgs {
  std::int64_t max = 0;
  std::string a, b, c;
  std::optional<std::int64_t> u_le;
  std::string out;
  unsigned jobs = 1;
  std::string format = "csv";
  bool all = false;
};

int cmd_scan(const ScanArgs &args) {
  ScanJob job;
  if (args.max > 0)
    job = ScanJob::bounded(args.max);
  else if (args.a.empty() || args.b.empty() || args.c.empty())
    throw std::invalid_argument("scan needs --max or all of --a, --b, --c");
  if (!args.a.empty())
    job.a = parse_range(args.a);
  if (!args.b.empty())
    job.b = parse_range(args.b);
  if (!args.c.empty())
    job.c = parse_range(args.c);
  job.u_le = args.u_le;
  job.jobs = args.jobs;
  job.include_inapplicable = args.all;

  std::unique_ptr<std::ofstream> file;
  std::ostream *os = &std::cout;
  if (!args.out.empty()) {
    file = std::make_unique<std::ofstream>(args.out);
    if (!*file)
      throw std::runtime_error("cannot open '" + args.out + "' for writing");
    os = file.get();
  }
  const auto verdicts = run_scan(job);
  if (args.format == "csv") {
    *os << csv_header() << "\n";
    for (const auto &v : verdicts)
      *os << csv_row(v) << "\n";
  } else {
    for (const auto &v : verdicts)
      *os << json(VerdictRecord{v, std::nullopt, kVersion}).dump() << "\n";
  }
  os->flush();
  if (!*os)
    throw std::runtime_error("write failed");
  return 0;
}

int cmd_piece_dim(CurveTriple t, std::int64_t e, int n, bool as_json) {
  const auto p = compute_presentation(t);
  const auto s = piece_summary(p, e, n);
  const bool constant = constant_term_attainable(p, e, n);
  if (as_json) {
    std::cout << json{{"triple", t},
                      {"e", e},
                      {"n", n},
                      {"points", s.points},
                      {"constraints", s.constraints},
                      {"rank", s.rank},
                      {"dimension", s.dimension()},
                      {"constant_term_attainable", constant}}
                     .dump()
              << "\n";
  } else {
    std::cout << "points=" << s.points << " constraints=" << s.constraints
              << " rank=" << s.rank << " dimension=" << s.dimension()
              << " constant_term_attainable=" << (constant ? "yes" : "no")
              << "\n";
  }
  return 0;
}

int cmd_witness(CurveTriple t, const std::string &out) {
  const auto v = classify(t);
  if (v.noetherian == Noetherian::Inapplicable) {
    std::cerr << "no witness: classification is inapplicable (" << v.reason
              << ")\n";
    return 2;
  }
  if (!v.witness_exists.value_or(false)) {
    std::cerr << "no witness\n";
    return 1;
  }
  const auto &p = *v.presentation;
  const auto w = extract_witness(p);
  const auto doc = witness_document(p, w);
  if (!check_witness(p, w).all()) {
    std::cerr << "internal error: extracted witness failed re-verification\n"
              << doc.dump(2) << "\n";
    return kExitInternal;
  }
  if (out.empty()) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::ofstream f(out);
    f << doc.dump(2) << "\n";
    if (!f)
      throw std::runtime_error("cannot write '" + out + "'");
  }
  return 0;
}

int cmd_verify_witness(const std::string &path) {
  std::ifstream f(path);
  if (!f)
    throw std::invalid_argument("cannot open '" + path + "'");
  const auto doc = json::parse(f);
  const auto r = verify_witness_document(doc);
  auto line = [](bool ok, const char *what) {
    std::cout << (ok ? "PASS  " : "FAIL  ") << what << "\n";
  };
  line(r.checks.support_in_region, "support inside Delta_u");
  line(r.checks.normalized, "coefficient 1 at (0,0)");
  line(r.order_matches, "e = 1 and n = u");
  line(r.checks.shift_membership, "shift-substitution membership in (v-1,w-1)^u");
  line(r.checks.curve_substitution, "eta vanishes on (T^a, T^b, T^c)");
  line(r.checks.homogeneous, "eta is homogeneous of degree ab");
  line(r.polynomial_matches, "stored polynomial matches the coefficients");
  std::cout << (r.passed() ? "witness verified" : "witness REJECTED") << "\n";
  return r.passed() ? 0 : 1;
}

int cmd_verify_family(const std::string &alpha, const std::string &beta,
                      std::int64_t m, std::int64_t n) {
  FamilyReport rep;
  try {
    rep = verify_family(parse_rational(alpha), parse_rational(beta), m, n);
  } catch (const Rejection &ex) {
    std::cout << "REJECTED  " << ex.what() << "\n";
    return 2;
  }
  const auto &fp = rep.params;
  std::cout << "alpha=" << to_string(fp.alpha) << " beta=" << to_string(fp.beta)
            << " m=" << fp.m << " n=" << fp.n << "\n"
            << "exponents s2=" << fp.s2 << " s3=" << fp.s3 << " t1=" << fp.t1
            << " t3=" << fp.t3 << " u1=" << fp.u1 << " u2=" << fp.u2 << "\n"
            << "(a,b,c)=" << fp.triple << " GCD=" << fp.gcd_abc
            << " pairwise_coprime=" << (fp.pairwise_coprime ? "yes" : "no")
            << "\n";
  for (const auto &w : rep.warnings)
    std::cout << "WARNING  " << w << "\n";
  for (const auto &c : rep.clauses)
    std::cout << (c.passed ? "PASS  " : "FAIL  ") << c.name << "  ["
              << c.detail << "]\n";
  std::cout << "conclusion: " << rep.conclusion << "\n";
  return rep.all_passed() ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Finite generation of symbolic Rees rings of space monomial "
               "curves"};
  app.require_subcommand(1);

  std::int64_t a = 0, b = 0, c = 0;
  auto add_triple = [&](CLI::App *sub) {
    sub->add_option("A", a, "weight of x")->required();
    sub->add_option("B", b, "weight of y")->required();
    sub->add_option("C", c, "weight of z")->required();
  };

  auto *classify_cmd = app.add_subcommand("classify", "classify one triple");
  add_triple(classify_cmd);
  bool as_table = false, with_witness = false;
  auto *json_flag = classify_cmd->add_flag("--json", "JSON output (default)");
  classify_cmd->add_flag("--table", as_table, "human-readable table")
      ->excludes(json_flag);
  classify_cmd->add_flag("--witness", with_witness,
                         "include the witness coefficients");

  auto *scan_cmd = app.add_subcommand("scan", "classify a box of triples");
  ScanArgs scan;
  scan_cmd->add_option("--max", scan.max, "scan 1 <= a, b, c <= N");
  scan_cmd->add_option("--a", scan.a, "range LO:HI for a");
  scan_cmd->add_option("--b", scan.b, "range LO:HI for b");
  scan_cmd->add_option("--c", scan.c, "range LO:HI for c");
  scan_cmd->add_option("--u-le", scan.u_le, "keep triples with u <= K");
  scan_cmd->add_option("--out", scan.out, "output file (default stdout)");
  scan_cmd->add_option("--jobs", scan.jobs, "worker threads")
      ->check(CLI::PositiveNumber);
  scan_cmd->add_option("--format", scan.format, "csv or jsonl")
      ->check(CLI::IsMember({"csv", "jsonl"}));
  scan_cmd->add_flag("--all", scan.all,
                     "also emit coprime triples outside the standing "
                     "assumptions");

  auto *piece_cmd =
      app.add_subcommand("piece-dim", "dimension of [p^(n)]_{e a b}");
  add_triple(piece_cmd);
  std::int64_t piece_e = 1;
  int piece_n = 1;
  bool piece_json = false;
  piece_cmd->add_option("--e", piece_e, "degree scale e")
      ->check(CLI::PositiveNumber);
  piece_cmd->add_option("--n", piece_n, "symbolic power n")
      ->check(CLI::NonNegativeNumber);
  piece_cmd->add_flag("--json", piece_json, "JSON output");

  auto *witness_cmd = app.add_subcommand(
      "witness", "extract and verify the element with nonzero constant term");
  std::string witness_out, witness_verify;
  witness_cmd->add_option("A", a, "weight of x");
  witness_cmd->add_option("B", b, "weight of y");
  witness_cmd->add_option("C", c, "weight of z");
  witness_cmd->add_option("--out", witness_out, "write the witness JSON here");
  witness_cmd->add_option("--verify", witness_verify,
                          "re-check a previously emitted witness file");

  auto *family_cmd = app.add_subcommand(
      "verify-family", "check the identities of one family member");
  std::string alpha, beta;
  std::int64_t fam_m = 1, fam_n = 1;
  family_cmd->add_option("--alpha", alpha, "alpha = P/Q")->required();
  family_cmd->add_option("--beta", beta, "beta = P/Q")->required();
  family_cmd->add_option("--m", fam_m, "multiplier of s2, s3")->required();
  family_cmd->add_option("--n", fam_n, "multiplier of u1, u2")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*classify_cmd)
      return cmd_classify({a, b, c}, as_table, with_witness);
    if (*scan_cmd)
      return cmd_scan(scan);
    if (*piece_cmd)
      return cmd_piece_dim({a, b, c}, piece_e, piece_n, piece_json);
    if (*witness_cmd) {
      if (!witness_verify.empty())
        return cmd_verify_witness(witness_verify);
      if (witness_cmd->count("A") == 0 || witness_cmd->count("C") == 0)
        throw std::invalid_argument("witness needs A B C or --verify FILE");
      return cmd_witness({a, b, c}, witness_out);
    }
    if (*family_cmd)
      return cmd_verify_family(alpha, beta, fam_m, fam_n);
  } catch (const PropertyViolation &ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitProperty;
  } catch (const std::invalid_argument &ex) {
    std::cerr << "usage error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const NotCoprime &ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  } catch (const NotThreeGenerated &ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception &ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
