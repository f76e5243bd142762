#include "radchar/qpoly.hpp"

#include <sstream>

#include "radchar/error.hpp"

namespace radchar {

QPoly::QPoly(long long c) {
  if (c != 0) coeffs_.push_back(BigInt(c));
}

QPoly::QPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(unsigned k, BigInt c) {
  std::vector<BigInt> v(k + 1);
  v[k] = std::move(c);
  return QPoly(std::move(v));
}

QPoly QPoly::q_power_minus_one(unsigned k) { return monomial(k) - QPoly(1); }

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPoly QPoly::operator+(const QPoly& o) const {
  std::vector<BigInt> r(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = coeff(k) + o.coeff(k);
  return QPoly(std::move(r));
}

QPoly QPoly::operator-(const QPoly& o) const {
  std::vector<BigInt> r(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = coeff(k) - o.coeff(k);
  return QPoly(std::move(r));
}

QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<BigInt> r(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return QPoly(std::move(r));
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QPoly QPoly::pow(unsigned k) const {
  QPoly r(1), b = *this;
  while (k) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

QPoly QPoly::compose_power(unsigned k) const {
  if (is_zero()) return {};
  std::vector<BigInt> r(static_cast<std::size_t>(degree()) * k + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i * k] = coeffs_[i];
  return QPoly(std::move(r));
}

namespace {

std::string term(const BigInt& mag, std::size_t k, const std::string& var) {
  std::string s;
  if (k == 0) return mag.str();
  if (mag != 1) s = mag.str();
  s += var;
  if (k > 1) s += "^" + std::to_string(k);
  return s;
}

std::string render(const std::vector<BigInt>& c, const std::string& var) {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    const bool neg = c[k] < 0;
    const BigInt mag = neg ? BigInt(-c[k]) : c[k];
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    os << term(mag, k, var);
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace

std::string QPoly::to_string() const { return render(coeffs_, "q"); }

std::string qminus1_to_string(const std::vector<BigInt>& c) {
  std::vector<BigInt> t = c;
  while (!t.empty() && t.back() == 0) t.pop_back();
  return render(t, "(q-1)");
}

QPoly exact_div(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw ArithmeticError("zero divisor");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw ArithmeticError("not divisible");
  std::vector<BigInt> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const BigInt& lead = bc.back();
  const std::size_t db = bc.size() - 1;
  std::vector<BigInt> quot(rem.size() - db);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const BigInt& top = rem[k + db];
    if (top == 0) continue;
    if (top % lead != 0) throw ArithmeticError("not divisible");
    BigInt f = top / lead;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= f * bc[j];
    quot[k] = std::move(f);
  }
  for (const auto& r : rem)
    if (r != 0) throw ArithmeticError("not divisible");
  return QPoly(std::move(quot));
}

BigInt eval_at(const QPoly& a, const BigInt& q0) {
  BigInt r = 0;
  const auto& c = a.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) r = r * q0 + c[k];
  return r;
}

// Taylor shift: the coefficients of a(x + 1) in x = q - 1.
QMinus1Expansion to_qminus1_basis(const QPoly& a) {
  QMinus1Expansion out;
  out.coeffs = a.coeffs();
  auto& c = out.coeffs;
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t k = n - 1; k-- > i;) c[k] += c[k + 1];
  for (const auto& x : c)
    if (x < 0) out.nonnegative = false;
  return out;
}

QPoly from_qminus1_basis(const std::vector<BigInt>& c) {
  const QPoly x = QPoly::q() - QPoly(1);
  QPoly r;
  for (std::size_t k = c.size(); k-- > 0;) r = r * x + QPoly(std::vector<BigInt>{c[k]});
  return r;
}

QPoly gaussian_binomial(unsigned n, unsigned r) {
  if (r > n) throw ParamError("r out of range");
  QPoly num(1), den(1);
  for (unsigned i = n - r + 1; i <= n; ++i) num *= QPoly::q_power_minus_one(i);
  for (unsigned s = 1; s <= r; ++s) den *= QPoly::q_power_minus_one(s);
  return exact_div(num, den);
}

nlohmann::json to_json(const std::vector<BigInt>& coeffs) {
  auto j = nlohmann::json::array();
  for (const auto& c : coeffs) j.push_back(c.str());
  return j;
}

nlohmann::json to_json(const QPoly& a) { return to_json(a.coeffs()); }

QPoly qpoly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParamError("polynomial must be a JSON array");
  std::vector<BigInt> c;
  for (const auto& x : j) {
    if (!x.is_string()) throw ParamError("coefficients must be decimal strings");
    c.emplace_back(x.get<std::string>());
  }
  return QPoly(std::move(c));
}

}  // namespace radchar
