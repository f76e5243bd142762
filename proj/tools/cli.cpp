#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "radchar/census.hpp"
#include "radchar/charcensus.hpp"
#include "radchar/error.hpp"
#include "radchar/orbitmethod.hpp"

namespace radchar::cli {

namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

struct CensusOpts {
  std::string type;
  unsigned n = 0, d = 0;
  std::optional<std::uint64_t> q;
  std::string variant = "corrected";
  std::string basis = "q";
  std::string format = "md";
  bool oracle = false;
  std::optional<std::uint64_t> budget;
  bool no_timing = false;
};

struct RanksOpts {
  std::string cls;
  unsigned n = 0;
  std::optional<unsigned> r;
  std::optional<std::uint64_t> q;
  bool brute = false;
  std::string format = "md";
  std::optional<std::uint64_t> budget;
  bool no_timing = false;
};

struct VerifyOpts {
  std::string suite;
  std::optional<unsigned> max_n;
  std::vector<std::uint64_t> qs;
  std::string format = "text";
  std::optional<std::uint64_t> budget;
  bool no_timing = false;
};

std::string str(const BigInt& x) { return x.str(); }

void check_q(std::uint64_t q) {
  std::uint32_t p = 0;
  unsigned m = 0;
  if (!prime_power(q, p, m) || p == 2) throw ParamError("odd prime power required");
}

void check_budget(const std::optional<std::uint64_t>& b) {
  if (b && (*b == 0 || *b > kBudgetCeiling))
    throw ParamError("--budget must be in 1.." + std::to_string(kBudgetCeiling));
}

double elapsed_ms(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string degree_convention(const RadicalParams& p) {
  if (p.type() == RadicalType::U)
    return "degree = q^(2e): e counts powers of |k| = q^2, so orbit sizes and degrees are powers of q^2";
  return "degree = q^e";
}

SymmetryClass parse_class(const std::string& s) {
  if (s == "sym") return SymmetryClass::Symmetric;
  if (s == "skew") return SymmetryClass::SkewSymmetric;
  if (s == "herm") return SymmetryClass::SkewHermitian;
  throw ParamError("unknown class '" + s + "' (expected sym|skew|herm)");
}

std::vector<RadicalParams> instances(unsigned max_n) {
  std::vector<RadicalParams> out;
  for (RadicalType t : {RadicalType::C, RadicalType::D, RadicalType::U})
    for (unsigned n = 2; n <= max_n; ++n)
      for (unsigned d = 1; d <= (t == RadicalType::U ? n - 1 : n); ++d) out.emplace_back(t, n, d);
  return out;
}

std::string with_q(const RadicalParams& p, std::uint64_t q) {
  return p.label() + " q=" + std::to_string(q);
}

// ---------------------------------------------------------------- census

struct OracleResult {
  json record;
  bool pass = true;
};

OracleResult run_oracle(const RadicalParams& params, const DegreeCensus& table, std::uint64_t q,
                        const std::optional<std::uint64_t>& budget) {
  const RadicalGroup grp(params, Field::for_order(q));
  const std::uint64_t orbit_budget = budget.value_or(kDefaultOrbitBudget);
  OrbitCensus oc;
  try {
    oc = orbit_census(grp, orbit_budget);
  } catch (const BudgetError&) {
    throw BudgetError("oracle refused: dual space of " + params.label() + " exceeds the orbit budget " +
                      std::to_string(orbit_budget));
  }
  OracleResult res;
  json rows = json::array();
  std::map<unsigned, bool> seen;
  for (const auto& row : table.rows) {
    const BigInt want = eval_at(row.count, q);
    auto it = oc.buckets.find(row.e);
    const std::uint64_t got = it == oc.buckets.end() ? 0 : it->second.characters;
    const bool ok = want == got;
    res.pass &= ok;
    seen[row.e] = true;
    rows.push_back({{"e", row.e}, {"formula", str(want)}, {"orbit", std::to_string(got)}, {"match", ok}});
  }
  for (const auto& [e, b] : oc.buckets) {
    if (seen.count(e)) continue;
    res.pass = false;
    rows.push_back({{"e", e}, {"formula", "0"}, {"orbit", std::to_string(b.characters)}, {"match", false}});
  }
  json& r = res.record;
  r["rows"] = rows;
  r["orbit_rank_consistent"] = oc.orbit_rank_consistent;
  r["fixed_points_match"] = oc.fixed_points_match;
  res.pass &= oc.orbit_rank_consistent && oc.fixed_points_match;

  const std::uint64_t class_budget = budget.value_or(kDefaultClassBudget);
  try {
    const std::uint64_t classes = class_count_brute(grp, class_budget);
    const BigInt total = eval_at(table.total_count(), q);
    const bool ok = total == classes;
    res.pass &= ok;
    r["classes"] = {{"brute", std::to_string(classes)}, {"formula", str(total)}, {"match", ok}};
  } catch (const BudgetError&) {
    r["classes"] = {{"skipped", "group order exceeds the class budget " + std::to_string(class_budget)}};
  }
  r["verdict"] = res.pass ? "pass" : "fail";
  return res;
}

std::string render_count(const QPoly& c, const std::string& basis) {
  return basis == "qminus1" ? qminus1_to_string(to_qminus1_basis(c).coeffs) : c.to_string();
}

int cmd_census(const CensusOpts& o, const std::string& echo, std::ostream& out, std::ostream& err) {
  const auto t0 = Clock::now();
  const RadicalParams params(parse_radical_type(o.type), o.n, o.d);
  const HermVariant v = parse_herm_variant(o.variant);
  check_budget(o.budget);
  if (o.q) check_q(*o.q);
  if (o.oracle && !o.q) throw ParamError("--oracle requires --q");

  const DegreeCensus table = census_table(params, v);
  const bool squares = table.sum_of_squares() == radical_order(params);
  bool pass = squares;

  json rec;
  rec["command"] = echo;
  rec["params"] = {{"type", to_string(params.type())}, {"n", params.n()}, {"d", params.d()},
                   {"q", o.q ? json(*o.q) : json(nullptr)}};
  rec["variant"] = to_string(v);
  rec["basis"] = o.basis;
  rec["degree_convention"] = degree_convention(params);
  rec["warnings"] = params.warnings();
  rec["radical_order"] = to_json(radical_order(params));
  json rows = json::array();
  for (const auto& row : table.rows) {
    const QMinus1Expansion x = to_qminus1_basis(row.count);
    rows.push_back({{"r", row.r},
                    {"e", row.e},
                    {"degree", to_json(row.degree)},
                    {"count", to_json(row.count)},
                    {"count_at_q", o.q ? json(str(eval_at(row.count, *o.q))) : json(nullptr)},
                    {"qminus1", to_json(x.coeffs)},
                    {"qminus1_nonnegative", x.nonnegative}});
  }
  rec["rows"] = rows;
  rec["verdicts"] = {{"sum_of_squares", squares}};
  if (o.oracle) {
    OracleResult orc = run_oracle(params, table, *o.q, o.budget);
    pass &= orc.pass;
    rec["oracle"] = orc.record;
  } else {
    rec["oracle"] = nullptr;
  }
  rec["verdict"] = pass ? "pass" : "fail";
  if (!o.no_timing) rec["timing_ms"] = elapsed_ms(t0);

  if (o.format == "json") {
    out << rec.dump(2) << "\n";
  } else if (o.format == "csv") {
    for (const auto& w : params.warnings()) err << "warning: " << w << "\n";
    out << "type,n,d,r,e,degree,count_poly,count_at_q\n";
    for (const auto& row : table.rows)
      out << to_string(params.type()) << ',' << params.n() << ',' << params.d() << ',' << row.r << ','
          << row.e << ',' << row.degree.to_string() << ',' << render_count(row.count, o.basis) << ','
          << (o.q ? str(eval_at(row.count, *o.q)) : "") << "\n";
  } else {
    out << "## census " << params.label() << " variant=" << to_string(v);
    if (o.q) out << " q=" << *o.q;
    out << "\n\n";
    for (const auto& w : params.warnings()) out << "> warning: " << w << "\n";
    out << "> " << degree_convention(params) << "\n\n";
    out << "| r | e | degree | count" << (o.basis == "qminus1" ? " (q-1 basis)" : "") << " |";
    if (o.q) out << " count at q=" << *o.q << " |";
    out << "\n|---|---|---|---|" << (o.q ? "---|" : "") << "\n";
    for (const auto& row : table.rows) {
      out << "| " << row.r << " | " << row.e << " | " << row.degree.to_string() << " | "
          << render_count(row.count, o.basis) << " |";
      if (o.q) out << " " << str(eval_at(row.count, *o.q)) << " |";
      out << "\n";
    }
    out << "\nsum of squares = |R_u|: " << (squares ? "pass" : "FAIL") << "\n";
    if (o.oracle) {
      const json& orc = rec["oracle"];
      for (const auto& r : orc["rows"])
        out << "oracle e=" << r["e"].get<unsigned>() << ": formula " << r["formula"].get<std::string>()
            << ", orbits " << r["orbit"].get<std::string>() << (r["match"].get<bool>() ? " match" : " MISMATCH")
            << "\n";
      if (orc["classes"].contains("brute"))
        out << "oracle classes: brute " << orc["classes"]["brute"].get<std::string>() << ", formula "
            << orc["classes"]["formula"].get<std::string>()
            << (orc["classes"]["match"].get<bool>() ? " match" : " MISMATCH") << "\n";
      else
        out << "oracle classes: " << orc["classes"]["skipped"].get<std::string>() << "\n";
      out << "oracle: " << orc["verdict"].get<std::string>() << "\n";
    }
    out << "verdict: " << (pass ? "pass" : "fail") << "\n";
    if (!o.no_timing) out << "timing_ms: " << rec["timing_ms"].get<double>() << "\n";
  }
  return pass ? kExitPass : kExitVerdictFailed;
}

// ---------------------------------------------------------------- ranks

int cmd_ranks(const RanksOpts& o, const std::string& echo, std::ostream& out, std::ostream&) {
  const auto t0 = Clock::now();
  const SymmetryClass c = parse_class(o.cls);
  check_budget(o.budget);
  if (o.n < 1) throw ParamError("n must be at least 1");
  if (o.q) check_q(*o.q);
  if (o.brute && !o.q) throw ParamError("--brute requires --q");

  std::vector<unsigned> ranks;
  if (o.r) {
    rank_census(c, o.n, *o.r);  // validates r
    ranks.push_back(*o.r);
  } else {
    for (unsigned r = 0; r <= o.n; ++r)
      if (c != SymmetryClass::SkewSymmetric || r % 2 == 0) ranks.push_back(r);
  }

  std::optional<RankHistogram> hist;
  if (o.brute)
    hist = brute_rank_census(c, o.n, Field::for_order(*o.q), std::nullopt,
                             o.budget.value_or(kDefaultEnumerationBudget));

  const bool herm = c == SymmetryClass::SkewHermitian;
  bool pass = true, printed_flagged = false;
  json rows = json::array();
  for (unsigned r : ranks) {
    const QPoly poly = rank_census(c, o.n, r);
    json row{{"r", r}, {"count", to_json(poly)}, {"count_str", poly.to_string()}};
    row["count_at_q"] = o.q ? json(str(eval_at(poly, *o.q))) : json(nullptr);
    if (herm) {
      const QPoly pr = skewherm_rank_census(o.n, r, HermVariant::Printed);
      row["printed"] = to_json(pr);
      row["printed_str"] = pr.to_string();
      row["printed_at_q"] = o.q ? json(str(eval_at(pr, *o.q))) : json(nullptr);
    }
    if (hist) {
      auto it = hist->find(r);
      const std::uint64_t b = it == hist->end() ? 0 : it->second;
      row["brute"] = std::to_string(b);
      row["match"] = eval_at(poly, *o.q) == b;
      pass &= row["match"].get<bool>();
      if (herm) {
        row["printed_match"] = eval_at(skewherm_rank_census(o.n, r, HermVariant::Printed), *o.q) == b;
        printed_flagged |= !row["printed_match"].get<bool>();
      }
    }
    rows.push_back(row);
  }

  json rec;
  rec["command"] = echo;
  rec["params"] = {{"class", to_string(c)}, {"n", o.n}, {"r", o.r ? json(*o.r) : json(nullptr)},
                   {"q", o.q ? json(*o.q) : json(nullptr)}};
  rec["variant"] = herm ? json("corrected") : json(nullptr);
  rec["rows"] = rows;
  rec["brute"] = o.brute;
  rec["printed_flagged"] = herm && o.brute ? json(printed_flagged) : json(nullptr);
  rec["verdict"] = o.brute ? json(pass ? "pass" : "fail") : json(nullptr);
  if (!o.no_timing) rec["timing_ms"] = elapsed_ms(t0);

  if (o.format == "json") {
    out << rec.dump(2) << "\n";
  } else if (o.format == "csv") {
    out << "class,n,r,count_poly,count_at_q,brute\n";
    for (const auto& row : rows)
      out << o.cls << ',' << o.n << ',' << row["r"].get<unsigned>() << ','
          << row["count_str"].get<std::string>() << ','
          << (o.q ? row["count_at_q"].get<std::string>() : "") << ','
          << (hist ? row["brute"].get<std::string>() : "") << "\n";
  } else {
    out << "## ranks " << to_string(c) << " n=" << o.n;
    if (o.q) out << " q=" << *o.q;
    out << "\n\n| r | count |" << (o.q ? " at q |" : "") << (hist ? " brute | match |" : "") << "\n";
    out << "|---|---|" << (o.q ? "---|" : "") << (hist ? "---|---|" : "") << "\n";
    for (const auto& row : rows) {
      out << "| " << row["r"].get<unsigned>() << " | " << row["count_str"].get<std::string>() << " |";
      if (o.q) out << " " << row["count_at_q"].get<std::string>() << " |";
      if (hist) out << " " << row["brute"].get<std::string>() << " | " << (row["match"].get<bool>() ? "yes" : "NO") << " |";
      out << "\n";
    }
    if (herm) {
      out << "\nprinted variant:";
      for (const auto& row : rows) out << " r=" << row["r"].get<unsigned>() << ": " << row["printed_str"].get<std::string>() << ";";
      out << "\n";
      if (hist) out << "printed variant " << (printed_flagged ? "disagrees with brute force (flagged)" : "agrees with brute force") << "\n";
    }
    if (hist) out << "verdict: " << (pass ? "pass" : "fail") << "\n";
    if (!o.no_timing) out << "timing_ms: " << rec["timing_ms"].get<double>() << "\n";
  }
  return pass ? kExitPass : kExitVerdictFailed;
}

// ---------------------------------------------------------------- verify

struct Check {
  std::string suite, label, status, detail;  // status: pass | fail | skip
};

class Recorder {
 public:
  explicit Recorder(std::string suite) : suite_(std::move(suite)) {}
  void pass(const std::string& label, bool ok, const std::string& detail = "") {
    checks.push_back({suite_, label, ok ? "pass" : "fail", detail});
  }
  void skip(const std::string& label, const std::string& why) { checks.push_back({suite_, label, "skip", why}); }
  std::vector<Check> checks;

 private:
  std::string suite_;
};

std::vector<Check> suite_ranks(const VerifyOpts& o) {
  Recorder rec("ranks");
  const std::vector<std::uint64_t> qs = o.qs.empty() ? std::vector<std::uint64_t>{3, 5} : o.qs;
  const std::uint64_t budget = o.budget.value_or(kDefaultEnumerationBudget);
  struct Cls {
    SymmetryClass c;
    const char* name;
    unsigned max_n;
  };
  for (const Cls& k : {Cls{SymmetryClass::Symmetric, "sym", 3}, Cls{SymmetryClass::SkewSymmetric, "skew", 4},
                       Cls{SymmetryClass::SkewHermitian, "herm", 3}}) {
    const unsigned top = std::min(k.max_n, o.max_n.value_or(k.max_n));
    for (std::uint64_t q : qs) {
      const FieldPtr F = Field::for_order(q);
      for (unsigned n = 1; n <= top; ++n) {
        const std::string label = std::string(k.name) + " n=" + std::to_string(n) + " q=" + std::to_string(q);
        RankHistogram h;
        try {
          h = brute_rank_census(k.c, n, F, std::nullopt, budget);
        } catch (const BudgetError& e) {
          rec.skip(label, e.what());
          continue;
        }
        bool ok = true, printed_differs = false;
        std::ostringstream detail;
        for (unsigned r = 0; r <= n; ++r) {
          const std::uint64_t b = h.count(r) ? h.at(r) : 0;
          if (k.c == SymmetryClass::SkewSymmetric && r % 2) {
            ok &= b == 0;
            continue;
          }
          ok &= eval_at(rank_census(k.c, n, r), q) == b;
          if (k.c == SymmetryClass::SkewHermitian)
            printed_differs |= eval_at(skewherm_rank_census(n, r, HermVariant::Printed), q) != b;
          detail << r << ":" << b << " ";
        }
        rec.pass(label, ok, "histogram " + detail.str());
        if (k.c == SymmetryClass::SkewHermitian)
          rec.pass(label + " printed variant flagged", printed_differs,
                   printed_differs ? "printed form disagrees with brute force" : "printed form unexpectedly agrees");
      }
    }
  }
  const unsigned top = std::min(8u, o.max_n.value_or(8));
  for (unsigned n = 1; n <= top; ++n) {
    QPoly sym, skew, herm, printed;
    for (unsigned r = 0; r <= n; ++r) {
      sym += sym_rank_census(n, r);
      if (r % 2 == 0) skew += skew_rank_census(n, r);
      herm += skewherm_rank_census(n, r);
      printed += skewherm_rank_census(n, r, HermVariant::Printed);
    }
    const std::string sn = " n=" + std::to_string(n);
    rec.pass("completeness sym" + sn, sym == QPoly::monomial(n * (n + 1) / 2));
    rec.pass("completeness skew" + sn, skew == QPoly::monomial(n * (n - 1) / 2));
    rec.pass("completeness herm" + sn, herm == QPoly::monomial(n * n));
    rec.pass("completeness herm printed fails" + sn, printed != QPoly::monomial(n * n));
  }
  return rec.checks;
}

std::vector<Check> suite_orbits(const VerifyOpts& o) {
  Recorder rec("orbits");
  const std::vector<std::uint64_t> qs = o.qs.empty() ? std::vector<std::uint64_t>{3} : o.qs;
  const std::uint64_t budget = o.budget.value_or(100'000);
  for (std::uint64_t q : qs) {
    const FieldPtr F = Field::for_order(q);
    for (const RadicalParams& p : instances(o.max_n.value_or(4))) {
      const std::string label = with_q(p, q);
      const RadicalGroup grp(p, F);
      OrbitCensus oc;
      try {
        oc = orbit_census(grp, budget);
      } catch (const BudgetError& e) {
        rec.skip(label, e.what());
        continue;
      }
      const DegreeCensus table = census_table(p);
      bool match = true;
      std::ostringstream detail;
      std::size_t nonzero = 0;
      for (const auto& row : table.rows) {
        const BigInt want = eval_at(row.count, q);
        auto it = oc.buckets.find(row.e);
        const std::uint64_t got = it == oc.buckets.end() ? 0 : it->second.characters;
        match &= want == got;
        if (want != 0) ++nonzero;
        detail << "e=" << row.e << ":" << got << " ";
      }
      match &= nonzero == oc.buckets.size();
      rec.pass(label + " census", match, detail.str());
      rec.pass(label + " orbit-rank", oc.orbit_rank_consistent);
      rec.pass(label + " fixed points", oc.fixed_points_match);
      rec.pass(label + " sum of squares", oc.sum_of_squares(p.field_exponent(), static_cast<std::uint32_t>(q)) ==
                                              eval_at(radical_order(p), q));
      const std::uint64_t h = oc.h_order, dual = oc.dual_size;
      if (h * dual <= 1'000'000 && h * h * dual <= 50'000'000)
        rec.pass(label + " action law", check_action_law(grp).holds);
    }
  }
  return rec.checks;
}

std::vector<Check> suite_classes(const VerifyOpts& o) {
  Recorder rec("classes");
  const std::vector<std::uint64_t> qs = o.qs.empty() ? std::vector<std::uint64_t>{3} : o.qs;
  const std::uint64_t budget = o.budget.value_or(kDefaultClassBudget);
  for (std::uint64_t q : qs) {
    const FieldPtr F = Field::for_order(q);
    for (const RadicalParams& p : instances(o.max_n.value_or(4))) {
      const std::string label = with_q(p, q);
      const RadicalGroup grp(p, F);
      std::uint64_t classes = 0;
      try {
        classes = class_count_brute(grp, budget);
      } catch (const BudgetError& e) {
        rec.skip(label, e.what());
        continue;
      }
      const BigInt total = eval_at(census_table(p).total_count(), q);
      rec.pass(label, total == classes, "classes " + std::to_string(classes) + ", characters " + str(total));
    }
  }
  return rec.checks;
}

std::vector<Check> suite_pairings(const VerifyOpts& o) {
  Recorder rec("pairings");
  const std::vector<std::uint64_t> qs = o.qs.empty() ? std::vector<std::uint64_t>{3, 5} : o.qs;
  for (std::uint64_t q : qs) {
    const FieldPtr F = Field::for_order(q);
    for (const RadicalParams& p : instances(o.max_n.value_or(4)))
      rec.pass(with_q(p, q), pairing_nondegeneracy_check(RadicalGroup(p, F)));
  }
  return rec.checks;
}

std::vector<Check> suite_positivity(const VerifyOpts& o) {
  Recorder rec("positivity");
  for (const RadicalParams& p : instances(o.max_n.value_or(10))) {
    bool ok = true;
    for (const auto& row : qminus1_report(p)) ok &= row.nonnegative;
    rec.pass(p.label() + " (q-1)-positive", ok);
    rec.pass(p.label() + " sum of squares", sum_of_squares_check(p));
  }
  return rec.checks;
}

int cmd_verify(const VerifyOpts& o, const std::string& echo, std::ostream& out, std::ostream&) {
  const auto t0 = Clock::now();
  check_budget(o.budget);
  for (std::uint64_t q : o.qs) {
    check_q(q);
    Field::for_order(q);  // rejects orders the field layer does not support
  }
  if (o.max_n && *o.max_n < 1) throw ParamError("--max-n must be at least 1");

  static const std::vector<std::string> kSuites{"classes", "orbits", "pairings", "positivity", "ranks"};
  std::vector<std::string> run;
  if (o.suite == "all") run = kSuites;
  else if (std::find(kSuites.begin(), kSuites.end(), o.suite) != kSuites.end()) run = {o.suite};
  else throw ParamError("unknown suite '" + o.suite + "'");

  std::vector<Check> checks;
  for (const auto& s : run) {
    std::vector<Check> part;
    if (s == "ranks") part = suite_ranks(o);
    if (s == "orbits") part = suite_orbits(o);
    if (s == "classes") part = suite_classes(o);
    if (s == "pairings") part = suite_pairings(o);
    if (s == "positivity") part = suite_positivity(o);
    checks.insert(checks.end(), part.begin(), part.end());
  }

  std::size_t npass = 0, nfail = 0, nskip = 0;
  json failures = json::array(), list = json::array();
  for (const auto& c : checks) {
    if (c.status == "pass") ++npass;
    if (c.status == "skip") ++nskip;
    if (c.status == "fail") {
      ++nfail;
      failures.push_back({{"suite", c.suite}, {"check", c.label}, {"detail", c.detail}});
    }
    list.push_back({{"suite", c.suite}, {"check", c.label}, {"status", c.status}, {"detail", c.detail}});
  }

  json rec;
  rec["command"] = echo;
  rec["suites"] = run;
  rec["checks"] = list;
  rec["failures"] = failures;
  rec["summary"] = {{"pass", npass}, {"fail", nfail}, {"skip", nskip}};
  rec["verdict"] = nfail == 0 ? "pass" : "fail";
  if (!o.no_timing) rec["timing_ms"] = elapsed_ms(t0);

  if (o.format == "json") {
    out << rec.dump(2) << "\n";
  } else {
    for (const auto& c : checks) {
      std::string tag = c.status == "pass" ? "PASS" : c.status == "fail" ? "FAIL" : "SKIP";
      out << tag << " " << c.suite << " " << c.label;
      if (!c.detail.empty()) out << " -- " << c.detail;
      out << "\n";
    }
    out << "summary: " << npass << " passed, " << nfail << " failed, " << nskip << " skipped\n";
    out << "failures: " << failures.dump() << "\n";
    if (!o.no_timing) out << "timing_ms: " << rec["timing_ms"].get<double>() << "\n";
  }
  return nfail == 0 ? kExitPass : kExitVerdictFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"character-degree censuses of unipotent radicals of maximal parabolics"};
  app.name("radchar");
  app.require_subcommand(1);

  CensusOpts co;
  auto* census = app.add_subcommand("census", "closed-form character census of R_u^{X,d}");
  census->add_option("--type", co.type, "radical type C|D|U")->required();
  census->add_option("--n", co.n, "rank n")->required();
  census->add_option("--d", co.d, "parabolic parameter d")->required();
  census->add_option("--q", co.q, "evaluate at this odd prime power");
  census->add_option("--variant", co.variant, "skew-Hermitian census variant")
      ->check(CLI::IsMember({"printed", "corrected"}));
  census->add_option("--basis", co.basis, "count basis")->check(CLI::IsMember({"q", "qminus1"}));
  census->add_option("--format", co.format, "output format")->check(CLI::IsMember({"json", "csv", "md"}));
  census->add_flag("--oracle", co.oracle, "cross-check against orbit and class brute force (needs --q)");
  census->add_option("--budget", co.budget, "enumeration budget for --oracle");
  census->add_flag("--no-timing", co.no_timing, "omit timing");

  RanksOpts ro;
  auto* ranks = app.add_subcommand("ranks", "rank census of symmetric, skew or skew-Hermitian matrices");
  ranks->add_option("--class", ro.cls, "sym|skew|herm")->required()->check(CLI::IsMember({"sym", "skew", "herm"}));
  ranks->add_option("--n", ro.n, "matrix size")->required();
  ranks->add_option("--r", ro.r, "single rank");
  ranks->add_option("--q", ro.q, "evaluate at this odd prime power");
  ranks->add_flag("--brute", ro.brute, "count by exhaustive enumeration (needs --q)");
  ranks->add_option("--format", ro.format, "output format")->check(CLI::IsMember({"json", "csv", "md"}));
  ranks->add_option("--budget", ro.budget, "enumeration budget for --brute");
  ranks->add_flag("--no-timing", ro.no_timing, "omit timing");

  VerifyOpts vo;
  auto* verify = app.add_subcommand("verify", "run invariant suites");
  verify->add_option("--suite", vo.suite, "ranks|orbits|classes|pairings|positivity|all")
      ->required()
      ->check(CLI::IsMember({"ranks", "orbits", "classes", "pairings", "positivity", "all"}));
  verify->add_option("--max-n", vo.max_n, "largest n to include");
  verify->add_option("--q", vo.qs, "field orders (repeatable)");
  verify->add_option("--format", vo.format, "output format")->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--budget", vo.budget, "enumeration budget per check");
  verify->add_flag("--no-timing", vo.no_timing, "omit timing");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  std::string echo;
  for (const auto& a : args) echo += (echo.empty() ? "" : " ") + a;

  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*census) return cmd_census(co, echo, out, err);
    if (*ranks) return cmd_ranks(ro, echo, out, err);
    return cmd_verify(vo, echo, out, err);
  } catch (const ParamError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    // internal consistency failure: a verdict, not a usage problem
    err << "error: " << e.what() << "\n";
    return kExitVerdictFailed;
  }
}

}  // namespace radchar::cli
