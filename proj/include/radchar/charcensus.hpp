#pragma once

// Closed-form counts N_{(X,d),e} of irreducible characters of each degree.
//
//   C: e = (n-d) r,  degree q^e,     count q^{2d(n-d)-2e} * N(d, r)
//   D: e = (n-d) 2s, degree q^e,     count q^{2d(n-d)-2e} * S(d, 2s)
//   U: e = (n-d) r,  degree q^{2e},  count q^{4d(n-d)-4e} * U(d, r)
//
// with N, S, U the symmetric, skew-symmetric and skew-Hermitian rank
// censuses. For d = n the radical is abelian and only e = 0 occurs.
// For type U the exponent e counts powers of |k| = q^2.

#include <string>
#include <utility>
#include <vector>

#include "radchar/census.hpp"
#include "radchar/radical.hpp"

namespace radchar {

struct DegreeRow {
  unsigned r = 0;  // rank of the form block
  unsigned e = 0;  // degree exponent: degree = |k|^e
  QPoly degree;
  QPoly count;
};

struct DegreeCensus {
  RadicalParams params;
  HermVariant variant = HermVariant::Corrected;
  std::vector<DegreeRow> rows;

  QPoly total_count() const;
  /// sum over rows of count * degree^2
  QPoly sum_of_squares() const;
};

/// Zero polynomial when e is not a degree exponent of the radical.
QPoly char_count_poly(const RadicalParams& p, unsigned e,
                      HermVariant v = HermVariant::Corrected);

/// (r, e) pairs in increasing e.
std::vector<std::pair<unsigned, unsigned>> degree_exponents(const RadicalParams& p);

/// q^e (C, D) or q^{2e} (U).
QPoly degree_poly(const RadicalParams& p, unsigned e);

DegreeCensus census_table(const RadicalParams& p, HermVariant v = HermVariant::Corrected);

/// sum count * degree^2 == |R_u| as a polynomial identity.
bool sum_of_squares_check(const RadicalParams& p, HermVariant v = HermVariant::Corrected);

struct QMinus1Row {
  unsigned e = 0;
  std::vector<BigInt> coeffs;
  bool nonnegative = true;
};

std::vector<QMinus1Row> qminus1_report(const RadicalParams& p,
                                       HermVariant v = HermVariant::Corrected);

}  // namespace radchar
