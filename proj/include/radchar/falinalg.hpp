#pragma once

// Dense matrices over a finite field, symmetry classes and their exhaustive
// enumeration, trace pairings, and the congruence normal form of
// skew-Hermitian matrices.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "radchar/gf.hpp"

namespace radchar {

class FfMatrix {
 public:
  FfMatrix() = default;
  /// Zero matrix. rows == 0 gives the empty 0 x cols matrix.
  FfMatrix(FieldPtr field, std::size_t rows, std::size_t cols);

  static FfMatrix identity(FieldPtr field, std::size_t n);
  /// J_n: ones on the antidiagonal.
  static FfMatrix antidiagonal(FieldPtr field, std::size_t n);
  /// E_{ij} of the given shape.
  static FfMatrix unit(FieldPtr field, std::size_t rows, std::size_t cols, std::size_t i,
                       std::size_t j);
  /// Row-major integer entries reduced into the field.
  static FfMatrix from_ints(FieldPtr field, std::size_t rows, std::size_t cols,
                            const std::vector<long long>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  const FieldPtr& field() const { return field_; }
  const Field& f() const { return *field_; }

  Elem operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const std::vector<Elem>& data() const { return data_; }

  FfMatrix operator+(const FfMatrix& o) const;
  FfMatrix operator-(const FfMatrix& o) const;
  FfMatrix operator*(const FfMatrix& o) const;
  FfMatrix operator-() const;
  FfMatrix scaled(Elem c) const;

  FfMatrix transpose() const;
  /// Entrywise Frobenius; needs a quadratic extension.
  FfMatrix conj() const;
  /// (conj_transpose(M))_{ij} = frobenius(M_{ji}).
  FfMatrix conj_transpose() const;

  FfMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const FfMatrix& b);

  bool is_zero() const;
  std::string to_string() const;

  friend bool operator==(const FfMatrix& a, const FfMatrix& b);

 private:
  void require_same(const FfMatrix& o, const char* what) const;

  FieldPtr field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Elem> data_;
};

/// Block diagonal matrix with `copies` copies of `b`.
FfMatrix block_diagonal(const FfMatrix& b, std::size_t copies);

std::size_t rank(const FfMatrix& m);
/// Throws ArithmeticError for singular input.
FfMatrix inverse(const FfMatrix& m);
Elem trace(const FfMatrix& m);

enum class SymmetryClass { Symmetric, SkewSymmetric, SkewHermitian };

std::string to_string(SymmetryClass c);

bool is_in_class(const FfMatrix& m, SymmetryClass c);

/// tr(X * Y).
Elem trace_pairing(const FfMatrix& x, const FfMatrix& y);
/// tr(X * Y) + tr(X * Y)^q, an element of the base field.
Elem twisted_trace_pairing(const FfMatrix& x, const FfMatrix& y);

inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

/// All n x n matrices of one symmetry class, in a fixed order: the free
/// entries are listed row-major, the first one being the most significant
/// digit. Symmetric and skew-symmetric matrices live over `field`; for
/// skew-Hermitian matrices `field` is F_{q^2} and the diagonal runs over the
/// trace-zero line c * t, c in F_q.
class ClassEnumerator {
 public:
  ClassEnumerator(std::size_t n, SymmetryClass c, FieldPtr field,
                  std::uint64_t budget = kDefaultEnumerationBudget);

  std::uint64_t size() const { return size_; }
  FfMatrix at(std::uint64_t index) const;
  void for_each(const std::function<void(const FfMatrix&)>& fn) const;
  /// Visit indices in [first, last).
  void for_range(std::uint64_t first, std::uint64_t last,
                 const std::function<void(const FfMatrix&)>& fn) const;

 private:
  struct Slot {
    std::size_t i, j;
    std::uint32_t radix;
  };
  void fill(FfMatrix& m, std::size_t slot, std::uint32_t digit) const;

  std::size_t n_;
  SymmetryClass class_;
  FieldPtr field_;
  std::vector<Slot> slots_;
  std::uint64_t size_ = 1;
};

struct SkewHermitianForm {
  FfMatrix transform;  // A, invertible
  std::size_t rank = 0;
  Elem alpha;          // the generator t of F_{q^2} / F_q
};

/// A with A * C * conj_transpose(A) = t * diag(I_r, 0).
SkewHermitianForm skew_hermitian_normal_form(const FfMatrix& c);

}  // namespace radchar
