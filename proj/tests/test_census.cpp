#include "doctest.h"

#include "radchar/census.hpp"
#include "radchar/error.hpp"

using namespace radchar;

namespace {

const QPoly q = QPoly::q();

BigInt hist_at(const RankHistogram& h, std::size_t r) {
  auto it = h.find(r);
  return it == h.end() ? 0 : BigInt(it->second);
}

void check_oracle(SymmetryClass c, unsigned n, std::uint32_t p) {
  CAPTURE(to_string(c));
  CAPTURE(n);
  CAPTURE(p);
  const RankHistogram h = brute_rank_census(c, n, Field::create(p));
  std::uint64_t total = 0;
  for (auto [r, cnt] : h) total += cnt;
  CHECK(BigInt(total) == eval_at(class_size(c, n), p));
  for (unsigned r = 0; r <= n; ++r) {
    if (c == SymmetryClass::SkewSymmetric && r % 2) {
      CHECK(hist_at(h, r) == 0);
      continue;
    }
    CHECK(eval_at(rank_census(c, n, r), p) == hist_at(h, r));
  }
}

}  // namespace

TEST_CASE("sym_rank_census examples") {
  CHECK(sym_rank_census(4, 0) == QPoly(1));
  CHECK(sym_rank_census(2, 1) == QPoly::monomial(2) - 1);
  CHECK(sym_rank_census(2, 2) == QPoly::monomial(3) - QPoly::monomial(2));
  CHECK(eval_at(sym_rank_census(2, 1), 3) == 8);
  CHECK(eval_at(sym_rank_census(2, 2), 3) == 18);
  CHECK_THROWS_WITH_AS(sym_rank_census(2, 3), "rank exceeds matrix size", ParamError);
}

TEST_CASE("skew_rank_census examples") {
  CHECK(skew_rank_census(3, 0) == QPoly(1));
  CHECK(skew_rank_census(2, 2) == q - 1);
  CHECK(skew_rank_census(3, 2) == QPoly::monomial(3) - 1);
  CHECK(eval_at(skew_rank_census(3, 2), 3) == 26);
  CHECK_THROWS_WITH_AS(skew_rank_census(3, 1), "skew-symmetric rank must be even", ParamError);
  CHECK_THROWS_WITH_AS(rank_census(SymmetryClass::SkewSymmetric, 2, 1),
                       "skew-symmetric rank must be even", ParamError);
}

TEST_CASE("skewherm_rank_census examples") {
  CHECK(skewherm_rank_census(3, 0) == QPoly(1));
  CHECK(skewherm_rank_census(1, 1, HermVariant::Printed) == (q - 1) * (q - 1));
  CHECK(skewherm_rank_census(1, 1) == q - 1);
  CHECK(skewherm_rank_census(2, 1) == (q - 1) * (QPoly::monomial(2) + 1));
  CHECK(eval_at(skewherm_rank_census(2, 1), 3) == 20);
  CHECK(eval_at(skewherm_rank_census(2, 2), 3) == 60);
  CHECK_THROWS_AS(skewherm_rank_census(1, 2), ParamError);
}

TEST_CASE("brute_rank_census examples") {
  auto f3 = Field::create(3);
  CHECK(brute_rank_census(SymmetryClass::Symmetric, 2, f3) == RankHistogram{{0, 1}, {1, 8}, {2, 18}});
  CHECK(brute_rank_census(SymmetryClass::SkewSymmetric, 3, f3) == RankHistogram{{0, 1}, {2, 26}});
  CHECK(brute_rank_census(SymmetryClass::SkewHermitian, 1, f3) == RankHistogram{{0, 1}, {1, 2}});
  CHECK(brute_rank_census(SymmetryClass::Symmetric, 2, f3, 1) == RankHistogram{{1, 8}});
  CHECK(brute_rank_census(SymmetryClass::SkewSymmetric, 2, f3, 1) == RankHistogram{{1, 0}});
  CHECK_THROWS_AS(brute_rank_census(SymmetryClass::Symmetric, 3, f3, std::nullopt, 100), BudgetError);
}

TEST_CASE("closed forms match brute-force histograms") {
  for (unsigned n = 1; n <= 3; ++n)
    for (std::uint32_t p : {3u, 5u}) check_oracle(SymmetryClass::Symmetric, n, p);
  for (unsigned n = 1; n <= 4; ++n) check_oracle(SymmetryClass::SkewSymmetric, n, 3);
  for (unsigned n = 1; n <= 2; ++n)
    for (std::uint32_t p : {3u, 5u}) check_oracle(SymmetryClass::SkewHermitian, n, p);
  check_oracle(SymmetryClass::SkewHermitian, 3, 3);
}

TEST_CASE("printed skew-Hermitian variant disagrees with the oracle") {
  const RankHistogram h = brute_rank_census(SymmetryClass::SkewHermitian, 1, Field::create(3));
  CHECK(eval_at(skewherm_rank_census(1, 1, HermVariant::Printed), 3) != hist_at(h, 1));
  // At r = 0 the printed form is (q - 1), not 1.
  CHECK(skewherm_rank_census(2, 0, HermVariant::Printed) == q - 1);
}

TEST_CASE("completeness identities for n <= 8") {
  for (unsigned n = 1; n <= 8; ++n) {
    CAPTURE(n);
    QPoly sym, skew, herm, printed;
    for (unsigned r = 0; r <= n; ++r) {
      sym += sym_rank_census(n, r);
      if (r % 2 == 0) skew += skew_rank_census(n, r);
      herm += skewherm_rank_census(n, r);
      printed += skewherm_rank_census(n, r, HermVariant::Printed);
    }
    CHECK(sym == QPoly::monomial(n * (n + 1) / 2));
    CHECK(skew == QPoly::monomial(n * (n - 1) / 2));
    CHECK(herm == QPoly::monomial(n * n));
    CHECK(printed != QPoly::monomial(n * n));
  }
}

TEST_CASE("census polynomials are (q-1)-positive for n <= 10") {
  for (unsigned n = 1; n <= 10; ++n)
    for (unsigned r = 0; r <= n; ++r) {
      CAPTURE(n);
      CAPTURE(r);
      CHECK(to_qminus1_basis(sym_rank_census(n, r)).nonnegative);
      if (r % 2 == 0) CHECK(to_qminus1_basis(skew_rank_census(n, r)).nonnegative);
      CHECK(to_qminus1_basis(skewherm_rank_census(n, r)).nonnegative);
    }
}

TEST_CASE("variant parsing") {
  CHECK(parse_herm_variant("printed") == HermVariant::Printed);
  CHECK(parse_herm_variant("corrected") == HermVariant::Corrected);
  CHECK(to_string(HermVariant::Corrected) == "corrected");
  CHECK_THROWS_AS(parse_herm_variant("other"), ParamError);
}
