#pragma once

// Finite fields of odd characteristic: prime fields F_p and towers of
// quadratic extensions F_p < F_{p^2} < F_{p^4}.
//
// An element is a plain value (Elem) holding its coordinate vector over F_p
// packed as base-p digits. For a quadratic extension K[t]/(t^2 - s) the code
// of a + b*t is code(a) + |K| * code(b), so elements of the base field keep
// their code when viewed inside the extension.

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace radchar {

struct Elem {
  std::uint32_t code = 0;

  friend constexpr bool operator==(Elem, Elem) = default;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Immutable field context. Share it through FieldPtr.
class Field : public std::enable_shared_from_this<Field> {
 public:
  /// F_{p^m} for an odd prime p and m in {1, 2}. For m = 2 the defining
  /// polynomial is x^2 - s with s the least quadratic nonresidue mod p.
  static FieldPtr create(std::uint32_t p, unsigned m = 1);

  /// F_q for an odd prime power q = p or p^2.
  static FieldPtr for_order(std::uint64_t q);

  /// Quadratic extension of this field by x^2 - s, s the least nonsquare
  /// (by code order).
  FieldPtr extend() const;

  std::uint32_t characteristic() const { return p_; }
  /// Degree over the prime field.
  unsigned degree() const { return degree_; }
  std::uint32_t order() const { return order_; }
  /// The field this one is a quadratic extension of, or nullptr.
  const FieldPtr& base() const { return base_; }
  bool is_extension() const { return base_ != nullptr; }
  /// s in the defining polynomial x^2 - s (extensions only).
  Elem defining_constant() const;
  /// The adjoined root t of x^2 - s (extensions only).
  Elem generator() const;

  Elem zero() const { return Elem{0}; }
  Elem one() const { return Elem{1}; }
  Elem from_int(long long v) const;
  Elem from_code(std::uint64_t code) const;
  /// a + b*t from base-field components (extensions only).
  Elem make(Elem a, Elem b) const;
  /// (a, b) with x = a + b*t (extensions only).
  std::pair<Elem, Elem> split(Elem x) const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const;
  Elem pow(Elem a, std::uint64_t k) const;

  /// x -> x^Q where Q is the order of the base field.
  Elem frobenius(Elem a) const;
  /// a + a^Q, an element of the base field.
  Elem relative_trace(Elem a) const;
  /// a^(Q+1), an element of the base field.
  Elem relative_norm(Elem a) const;
  bool in_base(Elem a) const;
  bool is_square(Elem a) const;

  std::vector<std::uint32_t> coordinates(Elem a) const;
  std::string to_string(Elem a) const;

  /// Structural equality: same characteristic and same tower.
  bool same_as(const Field& other) const;

  std::vector<Elem> elements() const;

 private:
  Field(std::uint32_t p);
  Field(FieldPtr base, Elem s);
  void build_tables();

  Elem add_raw(Elem a, Elem b) const;
  Elem neg_raw(Elem a) const;
  Elem mul_raw(Elem a, Elem b) const;
  Elem inv_raw(Elem a) const;

  std::uint32_t p_;
  unsigned degree_;
  std::uint32_t order_;
  FieldPtr base_;
  Elem s_{};

  // Lookup tables; filled when order() <= kTableLimit.
  static constexpr std::uint32_t kTableLimit = 1024;
  std::vector<std::uint32_t> add_tab_, mul_tab_, neg_tab_, inv_tab_;
};

bool is_odd_prime(std::uint64_t p);

/// Decompose q = p^m; returns false if q is not a prime power.
bool prime_power(std::uint64_t q, std::uint32_t& p, unsigned& m);

}  // namespace radchar
