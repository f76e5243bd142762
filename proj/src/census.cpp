#include "radchar/census.hpp"

#include "radchar/error.hpp"

namespace radchar {

std::string to_string(HermVariant v) {
  return v == HermVariant::Printed ? "printed" : "corrected";
}

HermVariant parse_herm_variant(const std::string& s) {
  if (s == "printed") return HermVariant::Printed;
  if (s == "corrected") return HermVariant::Corrected;
  throw ParamError("unknown variant '" + s + "' (expected printed|corrected)");
}

namespace {

void check_rank(unsigned n, unsigned r) {
  if (r > n) throw ParamError("rank exceeds matrix size");
}

// prod_{i=0}^{count-1} (q^{n-i} - 1)
QPoly falling_q_product(unsigned n, unsigned count) {
  QPoly p(1);
  for (unsigned i = 0; i < count; ++i) p *= QPoly::q_power_minus_one(n - i);
  return p;
}

}  // namespace

QPoly sym_rank_census(unsigned n, unsigned r) {
  check_rank(n, r);
  const unsigned s = r / 2;
  // prod_{i=1}^{s} q^{2i} / (q^{2i} - 1), times r factors (q^{n-i} - 1)
  QPoly num = QPoly::monomial(s * (s + 1)) * falling_q_product(n, r);
  QPoly den(1);
  for (unsigned i = 1; i <= s; ++i) den *= QPoly::q_power_minus_one(2 * i);
  return exact_div(num, den);
}

QPoly skew_rank_census(unsigned n, unsigned rank) {
  if (rank % 2 != 0) throw ParamError("skew-symmetric rank must be even");
  check_rank(n, rank);
  const unsigned s = rank / 2;
  QPoly num = QPoly::monomial(s * s - s) * falling_q_product(n, rank);
  QPoly den(1);
  for (unsigned i = 1; i <= s; ++i) den *= QPoly::q_power_minus_one(2 * i);
  return exact_div(num, den);
}

QPoly skewherm_rank_census(unsigned n, unsigned r, HermVariant v) {
  check_rank(n, r);
  // q^{r(r-1)/2} prod_{i=n-r+1}^{n} (q^{2i} - 1) / prod_{s=1}^{r} (q^s - (-1)^s)
  QPoly num = QPoly::monomial(r * (r - 1) / 2);
  for (unsigned i = n - r + 1; i <= n; ++i) num *= QPoly::q_power_minus_one(2 * i);
  QPoly den(1);
  for (unsigned s = 1; s <= r; ++s) den *= QPoly::monomial(s) - QPoly(s % 2 ? -1 : 1);
  QPoly count = exact_div(num, den);
  if (v == HermVariant::Printed) count *= QPoly::q() - QPoly(1);
  return count;
}

QPoly rank_census(SymmetryClass c, unsigned n, unsigned r, HermVariant v) {
  switch (c) {
    case SymmetryClass::Symmetric: return sym_rank_census(n, r);
    case SymmetryClass::SkewSymmetric: return skew_rank_census(n, r);
    case SymmetryClass::SkewHermitian: return skewherm_rank_census(n, r, v);
  }
  return {};
}

QPoly class_size(SymmetryClass c, unsigned n) {
  switch (c) {
    case SymmetryClass::Symmetric: return QPoly::monomial(n * (n + 1) / 2);
    case SymmetryClass::SkewSymmetric: return QPoly::monomial(n * (n - 1) / 2);
    case SymmetryClass::SkewHermitian: return QPoly::monomial(n * n);
  }
  return {};
}

RankHistogram brute_rank_census(SymmetryClass c, unsigned n, const FieldPtr& base,
                                std::optional<std::size_t> only_rank, std::uint64_t budget) {
  FieldPtr field = c == SymmetryClass::SkewHermitian ? base->extend() : base;
  ClassEnumerator en(n, c, field, budget);
  RankHistogram hist;
  en.for_each([&](const FfMatrix& m) { ++hist[rank(m)]; });
  if (only_rank) {
    const std::uint64_t keep = hist.count(*only_rank) ? hist[*only_rank] : 0;
    hist.clear();
    hist[*only_rank] = keep;
  }
  return hist;
}

}  // namespace radchar
