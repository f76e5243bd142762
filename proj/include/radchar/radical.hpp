#pragma once

// Unipotent radicals R = A x| H of maximal parabolics in Sp_2n(q) (type C),
// SO_2n(q) (type D) and U_2n(q^2) (type U), realized inside GL_2n(k) with
// k = F_q (C, D) or F_{q^2} (U).
//
// Block layout of the ambient 2n x 2n matrices (m = n - d):
//
//   C, D   H: diag(L, L^{-t}),  L = [[I_d, A], [0, I_m]]
//          A: [[I, V], [0, I]], V = [[B1, B2], [+-B2^t, 0]]  (V symmetric / skew)
//   U      H: diag(L, N),  L = [[I_d, A1], [0, I_m]],  N = [[I_m, A2], [0, I_d]]
//          A: [[I, V], [0, I]], V = [[B1, B2], [0, B3]] (rows d|m, cols m|d)
//          A2 = -J_m conj(A1^t) J_d,  B1 = -J_d conj(B3^t) J_m,  B2 J_d skew-Hermitian
//
// Every parameter space is an F_q-vector space; points are addressed by
// F_q-coordinate vectors (one coordinate per F_q entry, two per F_{q^2}
// entry) and by integer indices with the first coordinate most significant.

#include <cstdint>
#include <string>
#include <vector>

#include "radchar/falinalg.hpp"
#include "radchar/gf.hpp"
#include "radchar/qpoly.hpp"

namespace radchar {

enum class RadicalType { C, D, U };

std::string to_string(RadicalType x);
RadicalType parse_radical_type(const std::string& s);

class RadicalParams {
 public:
  /// Valid ranges: n >= 2; 1 <= d <= n for C and D; 1 <= d <= n - 1 for U.
  RadicalParams(RadicalType type, unsigned n, unsigned d);

  RadicalType type() const { return type_; }
  unsigned n() const { return n_; }
  unsigned d() const { return d_; }
  /// n - d
  unsigned m() const { return n_ - d_; }

  /// log_q |k|: 1 for C and D, 2 for U.
  unsigned field_exponent() const { return type_ == RadicalType::U ? 2 : 1; }
  /// log_q |H|
  unsigned h_dim() const { return field_exponent() * d_ * m(); }
  /// log_q |A|
  unsigned a_dim() const;
  /// d = n: H is trivial and the radical is the abelian group A.
  bool trivial_h() const { return d_ == n_; }

  /// Notes for instances below the usual Dynkin-diagram ranges (C: n >= 3,
  /// D: n >= 4). They are still well-defined groups.
  std::vector<std::string> warnings() const;

  std::string label() const;

 private:
  RadicalType type_;
  unsigned n_, d_;
};

/// |R_u| as a polynomial in q.
QPoly radical_order(const RadicalParams& p);

using Coords = std::vector<Elem>;  // F_q coordinates

struct RadicalElement {
  Coords h;        // H-part parameters
  Coords a;        // A-part parameters
  FfMatrix ambient;  // (I + X_a) * h, a 2n x 2n matrix over k
};

/// The radical over one concrete field.
class RadicalGroup {
 public:
  /// `base` is F_q; type U works over its quadratic extension.
  RadicalGroup(RadicalParams params, FieldPtr base);

  const RadicalParams& params() const { return params_; }
  const FieldPtr& base_field() const { return base_; }
  /// k: F_q or F_{q^2}
  const FieldPtr& matrix_field() const { return k_; }
  std::uint32_t q() const { return base_->order(); }

  std::size_t h_coord_count() const { return params_.h_dim(); }
  std::size_t a_coord_count() const { return params_.a_dim(); }
  /// q^count, or throws BudgetError when above `budget`.
  std::uint64_t space_size(std::size_t coord_count, std::uint64_t budget) const;

  std::uint64_t encode(const Coords& c) const;
  Coords decode(std::uint64_t index, std::size_t coord_count) const;

  /// The parameter block A (d x m over F_q) or A1 (d x m over F_{q^2}).
  FfMatrix h_block(const Coords& c) const;
  FfMatrix h_matrix(const Coords& c) const;
  /// Nilpotent X = [[0, V], [0, 0]] in Lie(A).
  FfMatrix lie_a(const Coords& c) const;
  FfMatrix a_matrix(const Coords& c) const;
  /// X^t for X = lie_a(c): a point of the dual space Lie(A)^t.
  FfMatrix dual_matrix(const Coords& c) const;

  /// Inverse maps; throw Error when the matrix is not of the stated shape.
  Coords h_coords_of(const FfMatrix& ambient) const;
  Coords lie_a_coords_of(const FfMatrix& x) const;
  Coords dual_coords_of(const FfMatrix& t) const;

  RadicalElement element(const Coords& h, const Coords& a) const;
  RadicalElement identity() const;
  /// Splits an ambient matrix as (I + X_a) * h.
  RadicalElement decompose(const FfMatrix& ambient) const;
  RadicalElement multiply(const RadicalElement& g, const RadicalElement& h) const;

  /// Positions (i, j) of the 2n x 2n matrix that can be nonzero in Lie(A).
  const std::vector<std::vector<bool>>& lie_a_support() const { return support_; }

  /// F_q-coordinate unit vectors scaled by an F_p-basis of F_q: a generating
  /// set of the additive group of a parameter space.
  std::vector<Coords> additive_generators(std::size_t coord_count) const;

 private:
  // Entry of k from F_q coordinates starting at c[pos]; advances pos.
  Elem take_k(const Coords& c, std::size_t& pos) const;
  void put_k(Coords& out, Elem x) const;

  RadicalParams params_;
  FieldPtr base_, k_;
  FfMatrix jd_, jm_;
  std::vector<std::vector<bool>> support_;
};

}  // namespace radchar
