#include "radchar/falinalg.hpp"

#include <sstream>
#include <utility>

#include "radchar/error.hpp"

namespace radchar {

FfMatrix::FfMatrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, Elem{0}) {}

FfMatrix FfMatrix::identity(FieldPtr field, std::size_t n) {
  FfMatrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Elem{1};
  return m;
}

FfMatrix FfMatrix::antidiagonal(FieldPtr field, std::size_t n) {
  FfMatrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, n - 1 - i) = Elem{1};
  return m;
}

FfMatrix FfMatrix::unit(FieldPtr field, std::size_t rows, std::size_t cols, std::size_t i,
                        std::size_t j) {
  FfMatrix m(std::move(field), rows, cols);
  m(i, j) = Elem{1};
  return m;
}

FfMatrix FfMatrix::from_ints(FieldPtr field, std::size_t rows, std::size_t cols,
                             const std::vector<long long>& entries) {
  if (entries.size() != rows * cols) throw ParamError("shape mismatch");
  FfMatrix m(field, rows, cols);
  for (std::size_t k = 0; k < entries.size(); ++k) m.data_[k] = field->from_int(entries[k]);
  return m;
}

void FfMatrix::require_same(const FfMatrix& o, const char* what) const {
  if (!field_ || !o.field_ || !field_->same_as(*o.field_))
    throw ParamError(std::string("field context mismatch in ") + what);
}

FfMatrix FfMatrix::operator+(const FfMatrix& o) const {
  require_same(o, "add");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ParamError("shape mismatch");
  FfMatrix r(field_, rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = field_->add(data_[k], o.data_[k]);
  return r;
}

FfMatrix FfMatrix::operator-(const FfMatrix& o) const {
  require_same(o, "sub");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ParamError("shape mismatch");
  FfMatrix r(field_, rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = field_->sub(data_[k], o.data_[k]);
  return r;
}

FfMatrix FfMatrix::operator*(const FfMatrix& o) const {
  require_same(o, "mul");
  if (cols_ != o.rows_) throw ParamError("shape mismatch");
  const Field& F = *field_;
  FfMatrix r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Elem a = data_[i * cols_ + k];
      if (a.code == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Elem b = o.data_[k * o.cols_ + j];
        if (b.code == 0) continue;
        Elem& dst = r.data_[i * o.cols_ + j];
        dst = F.add(dst, F.mul(a, b));
      }
    }
  }
  return r;
}

FfMatrix FfMatrix::operator-() const {
  FfMatrix r(field_, rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = field_->neg(data_[k]);
  return r;
}

FfMatrix FfMatrix::scaled(Elem c) const {
  FfMatrix r(field_, rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = field_->mul(c, data_[k]);
  return r;
}

FfMatrix FfMatrix::transpose() const {
  FfMatrix r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

FfMatrix FfMatrix::conj() const {
  FfMatrix r(field_, rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = field_->frobenius(data_[k]);
  return r;
}

FfMatrix FfMatrix::conj_transpose() const {
  FfMatrix r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = field_->frobenius((*this)(i, j));
  return r;
}

FfMatrix FfMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw ParamError("block out of range");
  FfMatrix r(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) r(i, j) = (*this)(r0 + i, c0 + j);
  return r;
}

void FfMatrix::set_block(std::size_t r0, std::size_t c0, const FfMatrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw ParamError("block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

bool FfMatrix::is_zero() const {
  for (Elem e : data_)
    if (e.code != 0) return false;
  return true;
}

std::string FfMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << field_->to_string((*this)(i, j));
    os << "]";
  }
  os << "]";
  return os.str();
}

bool operator==(const FfMatrix& a, const FfMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_ &&
         (a.field_ == b.field_ || (a.field_ && b.field_ && a.field_->same_as(*b.field_)));
}

FfMatrix block_diagonal(const FfMatrix& b, std::size_t copies) {
  FfMatrix r(b.field(), b.rows() * copies, b.cols() * copies);
  for (std::size_t k = 0; k < copies; ++k) r.set_block(k * b.rows(), k * b.cols(), b);
  return r;
}

namespace {

// Row-reduces m in place; returns the rank.
std::size_t eliminate(FfMatrix& m) {
  const Field& F = m.f();
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c).code == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    const Elem inv = F.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = F.mul(inv, m(r, j));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      const Elem f = m(i, c);
      if (f.code == 0) continue;
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = F.sub(m(i, j), F.mul(f, m(r, j)));
    }
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank(const FfMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  FfMatrix w = m;
  return eliminate(w);
}

FfMatrix inverse(const FfMatrix& m) {
  if (!m.square()) throw ParamError("non-square matrix");
  const std::size_t n = m.rows();
  const Field& F = m.f();
  FfMatrix aug(m.field(), n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, FfMatrix::identity(m.field(), n));
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && aug(piv, c).code == 0) ++piv;
    if (piv == n) throw ArithmeticError("singular matrix");
    if (piv != c)
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(aug(piv, j), aug(c, j));
    const Elem inv = F.inv(aug(c, c));
    for (std::size_t j = 0; j < 2 * n; ++j) aug(c, j) = F.mul(inv, aug(c, j));
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c) continue;
      const Elem f = aug(i, c);
      if (f.code == 0) continue;
      for (std::size_t j = 0; j < 2 * n; ++j) aug(i, j) = F.sub(aug(i, j), F.mul(f, aug(c, j)));
    }
  }
  return aug.block(0, n, n, n);
}

Elem trace(const FfMatrix& m) {
  if (!m.square()) throw ParamError("non-square matrix");
  Elem t{0};
  for (std::size_t i = 0; i < m.rows(); ++i) t = m.f().add(t, m(i, i));
  return t;
}

std::string to_string(SymmetryClass c) {
  switch (c) {
    case SymmetryClass::Symmetric: return "symmetric";
    case SymmetryClass::SkewSymmetric: return "skew-symmetric";
    case SymmetryClass::SkewHermitian: return "skew-hermitian";
  }
  return "?";
}

bool is_in_class(const FfMatrix& m, SymmetryClass c) {
  if (!m.square()) throw ParamError("non-square matrix");
  switch (c) {
    case SymmetryClass::Symmetric: return m == m.transpose();
    case SymmetryClass::SkewSymmetric: return m == -m.transpose();
    case SymmetryClass::SkewHermitian:
      if (!m.f().is_extension()) throw ParamError("no conjugation defined");
      return m == -m.conj_transpose();
  }
  return false;
}

Elem trace_pairing(const FfMatrix& x, const FfMatrix& y) {
  if (x.cols() != y.rows() || x.rows() != y.cols()) throw ParamError("shape mismatch");
  if (!x.f().same_as(y.f())) throw ParamError("field context mismatch in trace_pairing");
  const Field& F = x.f();
  Elem t{0};
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t k = 0; k < x.cols(); ++k) t = F.add(t, F.mul(x(i, k), y(k, i)));
  return t;
}

Elem twisted_trace_pairing(const FfMatrix& x, const FfMatrix& y) {
  if (!x.f().is_extension()) throw ParamError("no conjugation defined");
  return x.f().relative_trace(trace_pairing(x, y));
}

ClassEnumerator::ClassEnumerator(std::size_t n, SymmetryClass c, FieldPtr field,
                                 std::uint64_t budget)
    : n_(n), class_(c), field_(std::move(field)) {
  if (c == SymmetryClass::SkewHermitian && !field_->is_extension())
    throw ParamError("no conjugation defined");
  const std::uint32_t q = field_->order();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (i == j && c == SymmetryClass::SkewSymmetric) continue;
      const std::uint32_t radix =
          (i == j && c == SymmetryClass::SkewHermitian) ? field_->base()->order() : q;
      slots_.push_back({i, j, radix});
    }
  }
  for (const Slot& s : slots_) {
    if (size_ > budget / s.radix) throw BudgetError("enumeration too large");
    size_ *= s.radix;
  }
  if (size_ > budget) throw BudgetError("enumeration too large");
}

void ClassEnumerator::fill(FfMatrix& m, std::size_t slot, std::uint32_t digit) const {
  const Field& F = *field_;
  const Slot& s = slots_[slot];
  switch (class_) {
    case SymmetryClass::Symmetric:
      m(s.i, s.j) = Elem{digit};
      m(s.j, s.i) = Elem{digit};
      break;
    case SymmetryClass::SkewSymmetric:
      m(s.i, s.j) = Elem{digit};
      m(s.j, s.i) = F.neg(Elem{digit});
      break;
    case SymmetryClass::SkewHermitian:
      if (s.i == s.j) {
        m(s.i, s.i) = F.mul(Elem{digit}, F.generator());
      } else {
        m(s.i, s.j) = Elem{digit};
        m(s.j, s.i) = F.neg(F.frobenius(Elem{digit}));
      }
      break;
  }
}

FfMatrix ClassEnumerator::at(std::uint64_t index) const {
  if (index >= size_) throw ParamError("enumeration index out of range");
  FfMatrix m(field_, n_, n_);
  for (std::size_t k = slots_.size(); k-- > 0;) {
    fill(m, k, static_cast<std::uint32_t>(index % slots_[k].radix));
    index /= slots_[k].radix;
  }
  return m;
}

void ClassEnumerator::for_each(const std::function<void(const FfMatrix&)>& fn) const {
  for_range(0, size_, fn);
}

void ClassEnumerator::for_range(std::uint64_t first, std::uint64_t last,
                                const std::function<void(const FfMatrix&)>& fn) const {
  if (first >= last) return;
  if (last > size_) throw ParamError("enumeration index out of range");
  // Odometer increment on the digits, last slot fastest.
  FfMatrix m = at(first);
  std::vector<std::uint32_t> digits(slots_.size());
  std::uint64_t idx = first;
  for (std::size_t k = slots_.size(); k-- > 0;) {
    digits[k] = static_cast<std::uint32_t>(idx % slots_[k].radix);
    idx /= slots_[k].radix;
  }
  for (std::uint64_t i = first; i < last; ++i) {
    fn(m);
    for (std::size_t k = slots_.size(); k-- > 0;) {
      if (++digits[k] < slots_[k].radix) {
        fill(m, k, digits[k]);
        break;
      }
      digits[k] = 0;
      fill(m, k, 0);
    }
  }
}

SkewHermitianForm skew_hermitian_normal_form(const FfMatrix& c) {
  if (!c.square()) throw ParamError("non-square matrix");
  if (!is_in_class(c, SymmetryClass::SkewHermitian)) throw ParamError("input not skew-Hermitian");
  const Field& E = c.f();
  const FieldPtr& ctx = c.field();
  const Elem t = E.generator();
  const std::size_t n = c.rows();

  // t^{-1} C is Hermitian; diagonalise that form by congruence.
  const FfMatrix h = c.scaled(E.inv(t));
  FfMatrix a = FfMatrix::identity(ctx, n);
  auto gram = [&] { return a * h * a.conj_transpose(); };
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < n; ++k) std::swap(a(i, k), a(j, k));
  };
  auto add_row = [&](std::size_t dst, std::size_t src, Elem f) {
    for (std::size_t k = 0; k < n; ++k) a(dst, k) = E.add(a(dst, k), E.mul(f, a(src, k)));
  };

  std::size_t r = 0;
  for (; r < n; ++r) {
    FfMatrix m = gram();
    std::size_t piv = n;
    for (std::size_t i = r; i < n && piv == n; ++i)
      if (m(i, i).code != 0) piv = i;
    if (piv == n) {
      // Zero diagonal: e_i + c e_j with c = M_ji^{-1} has value 2.
      for (std::size_t i = r; i < n && piv == n; ++i) {
        for (std::size_t j = r; j < n; ++j) {
          if (i != j && m(j, i).code != 0) {
            add_row(i, j, E.inv(m(j, i)));
            piv = i;
            break;
          }
        }
      }
    }
    if (piv == n) break;
    swap_rows(r, piv);
    m = gram();
    const Elem pinv = E.inv(m(r, r));
    for (std::size_t i = r + 1; i < n; ++i)
      if (m(i, r).code != 0) add_row(i, r, E.neg(E.mul(m(i, r), pinv)));
  }

  // Rescale each pivot row by c with N(c) = 1 / h_ii; the norm is onto F_q^*.
  FfMatrix m = gram();
  for (std::size_t i = 0; i < r; ++i) {
    const Elem target = E.inv(m(i, i));
    Elem scale{0};
    for (std::uint32_t code = 1; code < E.order(); ++code) {
      if (E.relative_norm(Elem{code}) == target) {
        scale = Elem{code};
        break;
      }
    }
    if (scale.code == 0) throw Error("norm map not surjective");
    for (std::size_t k = 0; k < n; ++k) a(i, k) = E.mul(scale, a(i, k));
  }

  FfMatrix expect(ctx, n, n);
  for (std::size_t i = 0; i < r; ++i) expect(i, i) = t;
  if (!(a * c * a.conj_transpose() == expect)) throw Error("normal form reduction failed");
  return {std::move(a), r, t};
}

}  // namespace radchar
