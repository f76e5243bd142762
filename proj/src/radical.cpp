#include "radchar/radical.hpp"

#include "radchar/error.hpp"

namespace radchar {

std::string to_string(RadicalType x) {
  switch (x) {
    case RadicalType::C: return "C";
    case RadicalType::D: return "D";
    case RadicalType::U: return "U";
  }
  return "?";
}

RadicalType parse_radical_type(const std::string& s) {
  if (s == "C" || s == "c") return RadicalType::C;
  if (s == "D" || s == "d") return RadicalType::D;
  if (s == "U" || s == "u") return RadicalType::U;
  throw ParamError("unknown type '" + s + "' (expected C|D|U)");
}

RadicalParams::RadicalParams(RadicalType type, unsigned n, unsigned d)
    : type_(type), n_(n), d_(d) {
  if (n < 2) throw ParamError("n must be at least 2");
  const unsigned dmax = type == RadicalType::U ? n - 1 : n;
  if (d < 1 || d > dmax)
    throw ParamError("d out of range for type " + to_string(type) + ": need 1 <= d <= " +
                     std::to_string(dmax));
}

unsigned RadicalParams::a_dim() const {
  switch (type_) {
    case RadicalType::C: return d_ * (d_ + 1) / 2 + d_ * m();
    case RadicalType::D: return d_ * (d_ - 1) / 2 + d_ * m();
    case RadicalType::U: return d_ * d_ + 2 * d_ * m();
  }
  return 0;
}

std::vector<std::string> RadicalParams::warnings() const {
  std::vector<std::string> w;
  if (type_ == RadicalType::C && n_ < 3)
    w.push_back("type C with n < 3 lies below the C_n diagram range (n >= 3)");
  if (type_ == RadicalType::D && n_ < 4)
    w.push_back("type D with n < 4 lies below the D_n diagram range (n >= 4)");
  return w;
}

std::string RadicalParams::label() const {
  return "(" + to_string(type_) + "," + std::to_string(n_) + "," + std::to_string(d_) + ")";
}

QPoly radical_order(const RadicalParams& p) { return QPoly::monomial(p.h_dim() + p.a_dim()); }

RadicalGroup::RadicalGroup(RadicalParams params, FieldPtr base)
    : params_(params), base_(std::move(base)) {
  if (base_->is_extension() && base_->degree() > 2) throw ParamError("unsupported extension degree");
  k_ = params_.type() == RadicalType::U ? base_->extend() : base_;
  jd_ = FfMatrix::antidiagonal(k_, params_.d());
  jm_ = FfMatrix::antidiagonal(k_, params_.m());

  const std::size_t N = 2 * params_.n();
  support_.assign(N, std::vector<bool>(N, false));
  for (const Coords& g : additive_generators(a_coord_count())) {
    const FfMatrix x = lie_a(g);
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j)
        if (x(i, j).code != 0) support_[i][j] = true;
  }
}

std::uint64_t RadicalGroup::space_size(std::size_t coord_count, std::uint64_t budget) const {
  std::uint64_t s = 1;
  for (std::size_t i = 0; i < coord_count; ++i) {
    if (s > budget / q()) throw BudgetError("enumeration too large (budget " + std::to_string(budget) + ")");
    s *= q();
  }
  if (s > budget) throw BudgetError("enumeration too large (budget " + std::to_string(budget) + ")");
  return s;
}

std::uint64_t RadicalGroup::encode(const Coords& c) const {
  std::uint64_t idx = 0;
  for (Elem e : c) idx = idx * q() + e.code;
  return idx;
}

Coords RadicalGroup::decode(std::uint64_t index, std::size_t coord_count) const {
  Coords c(coord_count);
  for (std::size_t k = coord_count; k-- > 0;) {
    c[k] = Elem{static_cast<std::uint32_t>(index % q())};
    index /= q();
  }
  return c;
}

Elem RadicalGroup::take_k(const Coords& c, std::size_t& pos) const {
  if (params_.type() != RadicalType::U) return c.at(pos++);
  const Elem a = c.at(pos), b = c.at(pos + 1);
  pos += 2;
  return k_->make(a, b);
}

void RadicalGroup::put_k(Coords& out, Elem x) const {
  if (params_.type() != RadicalType::U) {
    out.push_back(x);
    return;
  }
  auto [a, b] = k_->split(x);
  out.push_back(a);
  out.push_back(b);
}

FfMatrix RadicalGroup::h_block(const Coords& c) const {
  if (c.size() != h_coord_count()) throw ParamError("wrong number of H coordinates");
  const unsigned d = params_.d(), m = params_.m();
  FfMatrix a(k_, d, m);
  std::size_t pos = 0;
  for (unsigned i = 0; i < d; ++i)
    for (unsigned j = 0; j < m; ++j) a(i, j) = take_k(c, pos);
  return a;
}

FfMatrix RadicalGroup::h_matrix(const Coords& c) const {
  const unsigned n = params_.n(), d = params_.d(), m = params_.m();
  FfMatrix g = FfMatrix::identity(k_, 2 * n);
  if (m == 0) return g;
  const FfMatrix a = h_block(c);
  g.set_block(0, d, a);
  if (params_.type() == RadicalType::U) {
    // A2 = -J_m conj(A1^t) J_d, placed at rows n..n+m, cols n+m..2n
    g.set_block(n, n + m, -(jm_ * a.conj_transpose() * jd_));
  } else {
    // L^{-t} = [[I_d, 0], [-A^t, I_m]]
    g.set_block(n + d, n, -a.transpose());
  }
  return g;
}

FfMatrix RadicalGroup::lie_a(const Coords& c) const {
  if (c.size() != a_coord_count()) throw ParamError("wrong number of A coordinates");
  const unsigned n = params_.n(), d = params_.d(), m = params_.m();
  const Field& K = *k_;
  FfMatrix v(k_, n, n);
  std::size_t pos = 0;
  switch (params_.type()) {
    case RadicalType::C:
    case RadicalType::D: {
      const bool skew = params_.type() == RadicalType::D;
      for (unsigned i = 0; i < d; ++i) {
        for (unsigned j = skew ? i + 1 : i; j < d; ++j) {
          const Elem x = take_k(c, pos);
          v(i, j) = x;
          v(j, i) = skew ? K.neg(x) : x;
        }
      }
      for (unsigned i = 0; i < d; ++i) {
        for (unsigned j = 0; j < m; ++j) {
          const Elem x = take_k(c, pos);
          v(i, d + j) = x;
          v(d + j, i) = skew ? K.neg(x) : x;
        }
      }
      break;
    }
    case RadicalType::U: {
      // S = B2 J_d skew-Hermitian: diagonal on the trace-zero line.
      FfMatrix s(k_, d, d);
      for (unsigned i = 0; i < d; ++i) {
        for (unsigned j = i; j < d; ++j) {
          if (i == j) {
            s(i, i) = K.mul(c.at(pos++), K.generator());
          } else {
            const Elem x = take_k(c, pos);
            s(i, j) = x;
            s(j, i) = K.neg(K.frobenius(x));
          }
        }
      }
      FfMatrix b3(k_, m, d);
      for (unsigned i = 0; i < m; ++i)
        for (unsigned j = 0; j < d; ++j) b3(i, j) = take_k(c, pos);
      v.set_block(0, m, s * jd_);
      v.set_block(d, m, b3);
      if (m > 0) v.set_block(0, 0, -(jd_ * b3.conj_transpose() * jm_));
      break;
    }
  }
  FfMatrix x(k_, 2 * n, 2 * n);
  x.set_block(0, n, v);
  return x;
}

FfMatrix RadicalGroup::a_matrix(const Coords& c) const {
  return FfMatrix::identity(k_, 2 * params_.n()) + lie_a(c);
}

FfMatrix RadicalGroup::dual_matrix(const Coords& c) const { return lie_a(c).transpose(); }

Coords RadicalGroup::h_coords_of(const FfMatrix& ambient) const {
  const unsigned d = params_.d(), m = params_.m();
  Coords c;
  c.reserve(h_coord_count());
  for (unsigned i = 0; i < d; ++i)
    for (unsigned j = 0; j < m; ++j) put_k(c, ambient(i, d + j));
  if (!(h_matrix(c) == ambient)) throw Error("matrix is not an element of H");
  return c;
}

Coords RadicalGroup::lie_a_coords_of(const FfMatrix& x) const {
  const unsigned n = params_.n(), d = params_.d(), m = params_.m();
  const Field& K = *k_;
  Coords c;
  c.reserve(a_coord_count());
  switch (params_.type()) {
    case RadicalType::C:
    case RadicalType::D: {
      const bool skew = params_.type() == RadicalType::D;
      for (unsigned i = 0; i < d; ++i)
        for (unsigned j = skew ? i + 1 : i; j < d; ++j) put_k(c, x(i, n + j));
      for (unsigned i = 0; i < d; ++i)
        for (unsigned j = 0; j < m; ++j) put_k(c, x(i, n + d + j));
      break;
    }
    case RadicalType::U: {
      // S(i, j) = B2(i, d-1-j); B2 sits at rows 0..d, cols n+m..2n.
      const Elem tinv = K.inv(K.generator());
      for (unsigned i = 0; i < d; ++i) {
        for (unsigned j = i; j < d; ++j) {
          const Elem s = x(i, n + m + (d - 1 - j));
          if (i == j) {
            const Elem cdiag = K.mul(s, tinv);
            if (!K.in_base(cdiag)) throw Error("matrix is not in Lie(A)");
            c.push_back(cdiag);
          } else {
            put_k(c, s);
          }
        }
      }
      for (unsigned i = 0; i < m; ++i)
        for (unsigned j = 0; j < d; ++j) put_k(c, x(d + i, n + m + j));
      break;
    }
  }
  if (!(lie_a(c) == x)) throw Error("matrix is not in Lie(A)");
  return c;
}

Coords RadicalGroup::dual_coords_of(const FfMatrix& t) const {
  return lie_a_coords_of(t.transpose());
}

RadicalElement RadicalGroup::element(const Coords& h, const Coords& a) const {
  return {h, a, a_matrix(a) * h_matrix(h)};
}

RadicalElement RadicalGroup::identity() const {
  return element(Coords(h_coord_count()), Coords(a_coord_count()));
}

RadicalElement RadicalGroup::decompose(const FfMatrix& ambient) const {
  const unsigned n = params_.n();
  if (ambient.rows() != 2 * n || ambient.cols() != 2 * n) throw Error("wrong ambient size");
  // (I + X) * diag(L, N) = [[L, V N], [0, N]]
  FfMatrix hm = FfMatrix::identity(k_, 2 * n);
  hm.set_block(0, 0, ambient.block(0, 0, n, n));
  hm.set_block(n, n, ambient.block(n, n, n, n));
  Coords h = h_coords_of(hm);
  const FfMatrix x = ambient * inverse(hm) - FfMatrix::identity(k_, 2 * n);
  Coords a = lie_a_coords_of(x);
  return {std::move(h), std::move(a), ambient};
}

RadicalElement RadicalGroup::multiply(const RadicalElement& g, const RadicalElement& h) const {
  return decompose(g.ambient * h.ambient);
}

std::vector<Coords> RadicalGroup::additive_generators(std::size_t coord_count) const {
  std::vector<Coords> gens;
  const std::uint32_t p = base_->characteristic();
  for (std::size_t k = 0; k < coord_count; ++k) {
    std::uint32_t code = 1;
    for (unsigned b = 0; b < base_->degree(); ++b, code *= p) {
      Coords c(coord_count);
      c[k] = Elem{code};
      gens.push_back(std::move(c));
    }
  }
  return gens;
}

}  // namespace radchar
