// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "radchar/census.hpp"
#include "radchar/charcensus.hpp"
#include "radchar/error.hpp"
#include "radchar/orbitmethod.hpp"

using namespace radchar;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

std::vector<RadicalParams> all_params(unsigned max_n) {
  std::vector<RadicalParams> out;
  for (RadicalType t : {RadicalType::C, RadicalType::D, RadicalType::U})
    for (unsigned n = 2; n <= max_n; ++n)
      for (unsigned d = 1; d <= (t == RadicalType::U ? n - 1 : n); ++d) out.emplace_back(t, n, d);
  return out;
}

RadicalParams P(RadicalType t, unsigned n, unsigned d) { return RadicalParams(t, n, d); }

// Compare census_table at q with orbit_census bucket by bucket.
bool census_matches(const RadicalParams& p, std::uint32_t q, const OrbitCensus& oc) {
  std::size_t nonzero = 0;
  for (const auto& row : census_table(p).rows) {
    const BigInt want = eval_at(row.count, q);
    auto it = oc.buckets.find(row.e);
    const std::uint64_t got = it == oc.buckets.end() ? 0 : it->second.characters;
    if (want != got) return false;
    if (want != 0) ++nonzero;
  }
  return nonzero == oc.buckets.size();
}

Outcome crit1() {
  Outcome o;
  int n_checked = 0;
  auto check = [&](SymmetryClass c, unsigned n, std::uint32_t q) {
    const RankHistogram h = brute_rank_census(c, n, Field::create(q));
    for (unsigned r = 0; r <= n; ++r) {
      const std::uint64_t b = h.count(r) ? h.at(r) : 0;
      if (c == SymmetryClass::SkewSymmetric && r % 2) {
        o.ok &= b == 0;
        continue;
      }
      if (eval_at(rank_census(c, n, r), q) != b) {
        o.ok = false;
        o.detail += " mismatch " + to_string(c) + " n=" + std::to_string(n) + " r=" + std::to_string(r);
      }
    }
    ++n_checked;
  };
  for (unsigned n = 1; n <= 3; ++n)
    for (std::uint32_t q : {3u, 5u}) check(SymmetryClass::Symmetric, n, q);
  for (unsigned n = 1; n <= 4; ++n) check(SymmetryClass::SkewSymmetric, n, 3);
  for (unsigned n = 1; n <= 2; ++n)
    for (std::uint32_t q : {3u, 5u}) check(SymmetryClass::SkewHermitian, n, q);
  check(SymmetryClass::SkewHermitian, 3, 3);
  o.detail = std::to_string(n_checked) + " histograms" + o.detail;
  return o;
}

Outcome crit2() {
  Outcome o;
  bool printed_fails_everywhere = true;
  for (unsigned n = 1; n <= 8; ++n) {
    QPoly sym, skew, herm, printed;
    for (unsigned r = 0; r <= n; ++r) {
      sym += sym_rank_census(n, r);
      if (r % 2 == 0) skew += skew_rank_census(n, r);
      herm += skewherm_rank_census(n, r);
      printed += skewherm_rank_census(n, r, HermVariant::Printed);
    }
    o.ok &= sym == QPoly::monomial(n * (n + 1) / 2);
    o.ok &= skew == QPoly::monomial(n * (n - 1) / 2);
    o.ok &= herm == QPoly::monomial(n * n);
    printed_fails_everywhere &= printed != QPoly::monomial(n * n);
  }
  o.ok &= printed_fails_everywhere;
  o.detail = std::string("n <= 8; printed variant fails: ") + (printed_fails_everywhere ? "yes" : "no");
  return o;
}

Outcome crit3() {
  Outcome o;
  struct Inst {
    RadicalParams p;
    std::uint32_t q;
  };
  const std::vector<Inst> list{{P(RadicalType::C, 2, 1), 3}, {P(RadicalType::C, 3, 1), 3},
                               {P(RadicalType::C, 3, 2), 3}, {P(RadicalType::D, 4, 1), 3},
                               {P(RadicalType::D, 4, 2), 3}, {P(RadicalType::U, 2, 1), 3},
                               {P(RadicalType::C, 2, 1), 5}};
  for (const auto& [p, q] : list) {
    const bool m = census_matches(p, q, orbit_census(RadicalGroup(p, Field::create(q))));
    o.ok &= m;
    if (!m) o.detail += " mismatch " + p.label() + " q=" + std::to_string(q);
  }
  o.detail = std::to_string(list.size()) + " instances" + o.detail;
  return o;
}

Outcome crit4() {
  Outcome o;
  const RadicalGroup grp(P(RadicalType::C, 2, 1), Field::create(3));
  const OrbitCensus oc = orbit_census(grp);
  const std::uint64_t deg1 = oc.buckets.count(0) ? oc.buckets.at(0).characters : 0;
  const std::uint64_t deg3 = oc.buckets.count(1) ? oc.buckets.at(1).characters : 0;
  const std::uint64_t classes = class_count_brute(grp);
  o.ok = deg1 == 9 && deg3 == 2 && oc.buckets.size() == 2 && classes == 11 && oc.group_order == 27;
  o.detail = std::to_string(deg1) + " of degree 1, " + std::to_string(deg3) + " of degree 3, " +
             std::to_string(classes) + " classes";
  return o;
}

Outcome crit5() {
  Outcome o;
  std::size_t symbolic = 0;
  for (const auto& p : all_params(8)) {
    if (!sum_of_squares_check(p)) {
      o.ok = false;
      o.detail += " sum-of-squares " + p.label();
    }
    ++symbolic;
  }
  // Oracle instances at q = 3: orbit census sum of squares, and class counts
  // wherever the group order fits the class budget.
  std::vector<RadicalParams> oracle;
  for (unsigned n = 2; n <= 3; ++n)
    for (unsigned d = 1; d <= n; ++d) oracle.push_back(P(RadicalType::C, n, d));
  for (unsigned d = 1; d <= 2; ++d) oracle.push_back(P(RadicalType::D, 4, d));
  oracle.push_back(P(RadicalType::U, 2, 1));
  oracle.push_back(P(RadicalType::U, 3, 1));
  std::size_t classes_checked = 0;
  for (const auto& p : oracle) {
    const RadicalGroup grp(p, Field::create(3));
    const OrbitCensus oc = orbit_census(grp);
    if (oc.sum_of_squares(p.field_exponent(), 3) != eval_at(radical_order(p), 3)) {
      o.ok = false;
      o.detail += " orbit sum-of-squares " + p.label();
    }
    try {
      const std::uint64_t classes = class_count_brute(grp, 100'000);
      if (eval_at(census_table(p).total_count(), 3) != classes) {
        o.ok = false;
        o.detail += " classes " + p.label();
      }
      ++classes_checked;
    } catch (const BudgetError&) {
    }
  }
  o.detail = std::to_string(symbolic) + " symbolic, " + std::to_string(oracle.size()) + " orbit, " +
             std::to_string(classes_checked) + " class-count instances" + o.detail;
  return o;
}

Outcome crit6() {
  Outcome o;
  std::size_t polys = 0;
  for (const auto& p : all_params(10))
    for (const auto& row : qminus1_report(p)) {
      ++polys;
      if (!row.nonnegative) {
        o.ok = false;
        o.detail += " negative " + p.label() + " e=" + std::to_string(row.e);
      }
    }
  o.detail = std::to_string(polys) + " count polynomials, n <= 10" + o.detail;
  return o;
}

Outcome crit7() {
  Outcome o;
  std::size_t n_checked = 0;
  for (std::uint32_t q : {3u, 5u})
    for (const auto& p : all_params(4)) {
      ++n_checked;
      if (!pairing_nondegeneracy_check(RadicalGroup(p, Field::create(q)))) {
        o.ok = false;
        o.detail += " degenerate " + p.label() + " q=" + std::to_string(q);
      }
    }
  o.detail = std::to_string(n_checked) + " Gram matrices" + o.detail;
  return o;
}

Outcome crit8() {
  Outcome o;
  std::uint64_t triples = 0;
  for (const auto& p : {P(RadicalType::C, 3, 1), P(RadicalType::C, 3, 2), P(RadicalType::D, 4, 2),
                        P(RadicalType::U, 2, 1)}) {
    const RadicalGroup grp(p, Field::create(3));
    const ActionLawReport law = check_action_law(grp);
    triples += law.checked;
    const OrbitCensus oc = orbit_census(grp);
    std::uint64_t pts = 0;
    for (const auto& [e, b] : oc.buckets) pts += b.dual_points;
    const bool ok = law.holds && oc.orbit_rank_consistent && oc.fixed_points_match && pts == oc.dual_size;
    o.ok &= ok;
    if (!ok) o.detail += " failed " + p.label();
  }
  o.detail = std::to_string(triples) + " (g, h, T) triples" + o.detail;
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> crits{
      {1, "rank-census oracle equivalence", 60, crit1},
      {2, "completeness identities", 1, crit2},
      {3, "orbit-method equivalence", 60, crit3},
      {4, "extraspecial group of order 27", 5, crit4},
      {5, "global identities", 120, crit5},
      {6, "(q-1)-positivity", 10, crit6},
      {7, "pairing nondegeneracy", 10, crit7},
      {8, "action law and orbit-rank invariants", 120, crit8},
  };
  int failed = 0;
  for (const auto& c : crits) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs <= c.limit_s;
    const bool pass = o.ok && in_time;
    failed += !pass;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " -- " << o.detail << " ["
         << secs << " s, limit " << c.limit_s << " s" << (in_time ? "" : ", over time") << "]";
    std::cout << line.str() << std::endl;
  }
  std::cout << (failed ? "acceptance: FAIL" : "acceptance: PASS") << " (" << crits.size() - failed << "/"
            << crits.size() << ")" << std::endl;
  return failed ? 1 : 0;
}
