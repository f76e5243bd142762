#include "radchar/charcensus.hpp"

namespace radchar {

std::vector<std::pair<unsigned, unsigned>> degree_exponents(const RadicalParams& p) {
  if (p.trivial_h()) return {{0, 0}};
  std::vector<std::pair<unsigned, unsigned>> out;
  const unsigned step = p.type() == RadicalType::D ? 2 : 1;
  for (unsigned r = 0; r <= p.d(); r += step) out.emplace_back(r, p.m() * r);
  return out;
}

QPoly degree_poly(const RadicalParams& p, unsigned e) {
  return QPoly::monomial(p.field_exponent() * e);
}

QPoly char_count_poly(const RadicalParams& p, unsigned e, HermVariant v) {
  if (p.trivial_h()) return e == 0 ? radical_order(p) : QPoly();
  for (auto [r, ee] : degree_exponents(p)) {
    if (ee != e) continue;
    const unsigned fe = p.field_exponent();
    const QPoly scale = QPoly::monomial(2 * fe * (p.d() * p.m() - e));
    switch (p.type()) {
      case RadicalType::C: return scale * sym_rank_census(p.d(), r);
      case RadicalType::D: return scale * skew_rank_census(p.d(), r);
      case RadicalType::U: return scale * skewherm_rank_census(p.d(), r, v);
    }
  }
  return {};
}

DegreeCensus census_table(const RadicalParams& p, HermVariant v) {
  DegreeCensus c{p, v, {}};
  for (auto [r, e] : degree_exponents(p)) c.rows.push_back({r, e, degree_poly(p, e), char_count_poly(p, e, v)});
  return c;
}

QPoly DegreeCensus::total_count() const {
  QPoly s;
  for (const auto& row : rows) s += row.count;
  return s;
}

QPoly DegreeCensus::sum_of_squares() const {
  QPoly s;
  for (const auto& row : rows) s += row.count * row.degree * row.degree;
  return s;
}

bool sum_of_squares_check(const RadicalParams& p, HermVariant v) {
  return census_table(p, v).sum_of_squares() == radical_order(p);
}

std::vector<QMinus1Row> qminus1_report(const RadicalParams& p, HermVariant v) {
  std::vector<QMinus1Row> out;
  for (const auto& row : census_table(p, v).rows) {
    QMinus1Expansion x = to_qminus1_basis(row.count);
    out.push_back({row.e, std::move(x.coeffs), x.nonnegative});
  }
  return out;
}

}  // namespace radchar
