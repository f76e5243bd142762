#pragma once

// Exact univariate polynomials in the formal variable q with arbitrary
// precision integer coefficients.

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include "json.hpp"

namespace radchar {

using BigInt = boost::multiprecision::cpp_int;

class QPoly {
 public:
  QPoly() = default;
  /// Constant polynomial.
  QPoly(long long c);  // NOLINT(google-explicit-constructor)
  /// Coefficients, constant term first. Trailing zeros are dropped.
  explicit QPoly(std::vector<BigInt> coeffs);

  /// q^k.
  static QPoly monomial(unsigned k, BigInt c = 1);
  /// q^k - 1.
  static QPoly q_power_minus_one(unsigned k);
  static QPoly q() { return monomial(1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }

  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  QPoly operator-() const;
  QPoly& operator+=(const QPoly& o) { return *this = *this + o; }
  QPoly& operator-=(const QPoly& o) { return *this = *this - o; }
  QPoly& operator*=(const QPoly& o) { return *this = *this * o; }
  QPoly pow(unsigned k) const;

  /// Substitutes q -> q^k.
  QPoly compose_power(unsigned k) const;

  friend bool operator==(const QPoly&, const QPoly&) = default;

  /// Human-readable form, e.g. "q^3 - q^2 + 1".
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// c with a = b * c; throws ArithmeticError("not divisible") otherwise.
QPoly exact_div(const QPoly& a, const QPoly& b);

BigInt eval_at(const QPoly& a, const BigInt& q0);

struct QMinus1Expansion {
  std::vector<BigInt> coeffs;  // a(q) = sum_k coeffs[k] (q-1)^k
  bool nonnegative = true;
};

QMinus1Expansion to_qminus1_basis(const QPoly& a);
/// Inverse of to_qminus1_basis.
QPoly from_qminus1_basis(const std::vector<BigInt>& c);
/// Renders sum c_k (q-1)^k.
std::string qminus1_to_string(const std::vector<BigInt>& c);

/// q-binomial coefficient [n choose r]_q.
QPoly gaussian_binomial(unsigned n, unsigned r);

/// JSON array of decimal strings, constant term first.
nlohmann::json to_json(const QPoly& a);
QPoly qpoly_from_json(const nlohmann::json& j);
nlohmann::json to_json(const std::vector<BigInt>& coeffs);

}  // namespace radchar
