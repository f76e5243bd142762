#include "radchar/gf.hpp"

#include <limits>
#include <sstream>

#include "radchar/error.hpp"

namespace radchar {

bool is_odd_prime(std::uint64_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::uint64_t f = 3; f * f <= p; f += 2)
    if (p % f == 0) return false;
  return true;
}

bool prime_power(std::uint64_t q, std::uint32_t& p, unsigned& m) {
  if (q < 2) return false;
  std::uint64_t f = 2;
  while (f * f <= q && q % f != 0) ++f;
  if (q % f != 0) f = q;
  if (f > std::numeric_limits<std::uint32_t>::max()) return false;
  unsigned k = 0;
  while (q % f == 0) {
    q /= f;
    ++k;
  }
  if (q != 1) return false;
  p = static_cast<std::uint32_t>(f);
  m = k;
  return true;
}

FieldPtr Field::create(std::uint32_t p, unsigned m) {
  if (!is_odd_prime(p)) throw ParamError("odd prime required");
  if (m != 1 && m != 2) throw ParamError("unsupported extension degree");
  if (m == 2 && std::uint64_t{p} * p > 0xFFFFFFFFull)
    throw ParamError("field too large");
  FieldPtr prime(new Field(p));
  return m == 1 ? prime : prime->extend();
}

FieldPtr Field::for_order(std::uint64_t q) {
  std::uint32_t p = 0;
  unsigned m = 0;
  if (!prime_power(q, p, m) || p == 2) throw ParamError("odd prime power required");
  return create(p, m);
}

Field::Field(std::uint32_t p) : p_(p), degree_(1), order_(p) { build_tables(); }

Field::Field(FieldPtr base, Elem s)
    : p_(base->p_),
      degree_(2 * base->degree_),
      order_(base->order_ * base->order_),
      base_(std::move(base)),
      s_(s) {
  build_tables();
}

FieldPtr Field::extend() const {
  if (std::uint64_t{order_} * order_ > 0xFFFFFFFFull) throw ParamError("field too large");
  // Least nonsquare by code. x^2 - s is irreducible iff s is not a square,
  // which is_square() checks exhaustively.
  Elem s{};
  bool found = false;
  for (std::uint32_t c = 1; c < order_; ++c) {
    if (!is_square(Elem{c})) {
      s = Elem{c};
      found = true;
      break;
    }
  }
  if (!found) throw Error("no quadratic nonresidue found");
  auto self = shared_from_this();
  return FieldPtr(new Field(self, s));
}

Elem Field::defining_constant() const {
  if (!base_) throw ParamError("no conjugation defined");
  return s_;
}

Elem Field::generator() const {
  if (!base_) throw ParamError("no conjugation defined");
  return Elem{base_->order_};
}

Elem Field::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return Elem{static_cast<std::uint32_t>(r)};
}

Elem Field::from_code(std::uint64_t code) const {
  if (code >= order_) throw ParamError("element code out of range");
  return Elem{static_cast<std::uint32_t>(code)};
}

Elem Field::make(Elem a, Elem b) const {
  if (!base_) throw ParamError("no conjugation defined");
  return Elem{a.code + base_->order_ * b.code};
}

std::pair<Elem, Elem> Field::split(Elem x) const {
  if (!base_) throw ParamError("no conjugation defined");
  return {Elem{x.code % base_->order_}, Elem{x.code / base_->order_}};
}

void Field::build_tables() {
  if (order_ > kTableLimit) return;
  const std::uint32_t n = order_;
  add_tab_.resize(std::size_t{n} * n);
  mul_tab_.resize(std::size_t{n} * n);
  neg_tab_.resize(n);
  inv_tab_.resize(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    neg_tab_[a] = neg_raw(Elem{a}).code;
    for (std::uint32_t b = 0; b < n; ++b) {
      add_tab_[std::size_t{a} * n + b] = add_raw(Elem{a}, Elem{b}).code;
      mul_tab_[std::size_t{a} * n + b] = mul_raw(Elem{a}, Elem{b}).code;
    }
  }
  inv_tab_[0] = 0;
  for (std::uint32_t a = 1; a < n; ++a) {
    for (std::uint32_t b = 1; b < n; ++b) {
      if (mul_tab_[std::size_t{a} * n + b] == 1) {
        inv_tab_[a] = b;
        break;
      }
    }
  }
}

Elem Field::add_raw(Elem a, Elem b) const {
  if (!base_) return Elem{static_cast<std::uint32_t>((std::uint64_t{a.code} + b.code) % p_)};
  auto [a0, a1] = split(a);
  auto [b0, b1] = split(b);
  return make(base_->add(a0, b0), base_->add(a1, b1));
}

Elem Field::neg_raw(Elem a) const {
  if (!base_) return Elem{a.code == 0 ? 0 : p_ - a.code};
  auto [a0, a1] = split(a);
  return make(base_->neg(a0), base_->neg(a1));
}

Elem Field::mul_raw(Elem a, Elem b) const {
  if (!base_) return Elem{static_cast<std::uint32_t>((std::uint64_t{a.code} * b.code) % p_)};
  // (a0 + a1 t)(b0 + b1 t) = a0 b0 + s a1 b1 + (a0 b1 + a1 b0) t
  const Field& k = *base_;
  auto [a0, a1] = split(a);
  auto [b0, b1] = split(b);
  Elem c0 = k.add(k.mul(a0, b0), k.mul(s_, k.mul(a1, b1)));
  Elem c1 = k.add(k.mul(a0, b1), k.mul(a1, b0));
  return make(c0, c1);
}

Elem Field::inv_raw(Elem a) const {
  if (!base_) {
    // Fermat: a^(p-2)
    std::uint64_t r = 1, b = a.code, e = p_ - 2;
    while (e) {
      if (e & 1) r = r * b % p_;
      b = b * b % p_;
      e >>= 1;
    }
    return Elem{static_cast<std::uint32_t>(r)};
  }
  // a^{-1} = conj(a) / N(a)
  const Field& k = *base_;
  Elem n = relative_norm(a);
  Elem ninv = k.inv(n);
  auto [c0, c1] = split(frobenius(a));
  return make(k.mul(c0, ninv), k.mul(c1, ninv));
}

Elem Field::add(Elem a, Elem b) const {
  if (!add_tab_.empty()) return Elem{add_tab_[std::size_t{a.code} * order_ + b.code]};
  return add_raw(a, b);
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::neg(Elem a) const {
  if (!neg_tab_.empty()) return Elem{neg_tab_[a.code]};
  return neg_raw(a);
}

Elem Field::mul(Elem a, Elem b) const {
  if (!mul_tab_.empty()) return Elem{mul_tab_[std::size_t{a.code} * order_ + b.code]};
  return mul_raw(a, b);
}

Elem Field::inv(Elem a) const {
  if (a.code == 0) throw ArithmeticError("zero divisor");
  if (!inv_tab_.empty()) return Elem{inv_tab_[a.code]};
  return inv_raw(a);
}

Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Elem Field::pow(Elem a, std::uint64_t k) const {
  Elem r = one();
  while (k) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

// t^Q = t * s^((Q-1)/2) = -t because s is a nonsquare in the base.
Elem Field::frobenius(Elem a) const {
  if (!base_) throw ParamError("no conjugation defined");
  auto [a0, a1] = split(a);
  return make(a0, base_->neg(a1));
}

Elem Field::relative_trace(Elem a) const {
  if (!base_) throw ParamError("no conjugation defined");
  auto [a0, a1] = split(a);
  return base_->add(a0, a0);
}

Elem Field::relative_norm(Elem a) const {
  if (!base_) throw ParamError("no conjugation defined");
  // (a0 + a1 t)(a0 - a1 t) = a0^2 - s a1^2
  const Field& k = *base_;
  auto [a0, a1] = split(a);
  return k.sub(k.mul(a0, a0), k.mul(s_, k.mul(a1, a1)));
}

bool Field::in_base(Elem a) const {
  if (!base_) throw ParamError("no conjugation defined");
  return a.code < base_->order_;
}

bool Field::is_square(Elem a) const {
  if (a.code == 0) return true;
  for (std::uint32_t c = 1; c < order_; ++c)
    if (mul(Elem{c}, Elem{c}) == a) return true;
  return false;
}

std::vector<std::uint32_t> Field::coordinates(Elem a) const {
  std::vector<std::uint32_t> out(degree_);
  std::uint32_t c = a.code;
  for (unsigned i = 0; i < degree_; ++i) {
    out[i] = c % p_;
    c /= p_;
  }
  return out;
}

std::string Field::to_string(Elem a) const {
  if (!base_) return std::to_string(a.code);
  auto [a0, a1] = split(a);
  const std::string b0 = base_->to_string(a0);
  const std::string b1 = base_->to_string(a1);
  const char var = degree_ == 2 ? 't' : 'u';
  const bool paren1 = b1.find_first_of("+tu") != std::string::npos;
  std::ostringstream os;
  if (a1.code == 0) return b0;
  if (a0.code != 0) os << (b0.find('+') != std::string::npos ? "(" + b0 + ")" : b0) << "+";
  if (a1.code != 1) os << (paren1 ? "(" + b1 + ")" : b1);
  os << var;
  return os.str();
}

bool Field::same_as(const Field& other) const {
  if (this == &other) return true;
  if (p_ != other.p_ || degree_ != other.degree_) return false;
  if (!base_ || !other.base_) return !base_ && !other.base_;
  return s_ == other.s_ && base_->same_as(*other.base_);
}

std::vector<Elem> Field::elements() const {
  std::vector<Elem> out(order_);
  for (std::uint32_t c = 0; c < order_; ++c) out[c] = Elem{c};
  return out;
}

}  // namespace radchar
