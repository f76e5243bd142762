#include "radchar/orbitmethod.hpp"

#include <deque>
#include <unordered_set>

#include "radchar/error.hpp"

namespace radchar {

namespace {

FfMatrix project_to_dual(const RadicalGroup& grp, FfMatrix m) {
  const auto& supp = grp.lie_a_support();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!supp[j][i]) m(i, j) = Elem{0};
  return m;
}

struct Generator {
  FfMatrix g, g_inv;
};

std::vector<Generator> h_generators(const RadicalGroup& grp) {
  std::vector<Generator> out;
  for (const Coords& c : grp.additive_generators(grp.h_coord_count())) {
    FfMatrix g = grp.h_matrix(c);
    FfMatrix gi = inverse(g);
    out.push_back({std::move(g), std::move(gi)});
  }
  return out;
}

// Row offset (inside the 2n x 2n dual matrix) of the d x m block that
// carries the stabilizer equations.
std::size_t equation_row(const RadicalParams& p) {
  return p.type() == RadicalType::U ? p.n() + p.m() : p.n();
}

// Exact e with size == base^e, or throws.
unsigned exact_log(std::uint64_t size, std::uint64_t base) {
  unsigned e = 0;
  while (size > 1) {
    if (size % base != 0) throw Error("orbit size is not a power of |k|");
    size /= base;
    ++e;
  }
  return e;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

Coords coadjoint_act(const RadicalGroup& grp, const FfMatrix& g, const FfMatrix& g_inv,
                     const Coords& dual) {
  const FfMatrix t = grp.dual_matrix(dual);
  return grp.dual_coords_of(project_to_dual(grp, g * t * g_inv));
}

Coords coadjoint_act(const RadicalGroup& grp, const Coords& h, const Coords& dual) {
  const FfMatrix g = grp.h_matrix(h);
  return coadjoint_act(grp, g, inverse(g), dual);
}

FfMatrix form_block(const RadicalGroup& grp, const Coords& dual) {
  const RadicalParams& p = grp.params();
  const FfMatrix t = grp.dual_matrix(dual);
  const std::size_t row = p.type() == RadicalType::U ? p.n() + p.m() : p.n();
  return t.block(row, 0, p.d(), p.d());
}

FfMatrix coefficient_matrix(const RadicalGroup& grp, const Coords& dual) {
  const RadicalParams& p = grp.params();
  const unsigned d = p.d(), m = p.m(), fe = p.field_exponent();
  const std::size_t vars = std::size_t{d} * m;
  FfMatrix coeff(grp.matrix_field(), vars, vars);
  if (vars == 0) return coeff;
  const Field& K = *grp.matrix_field();
  const FfMatrix t = grp.dual_matrix(dual);
  const std::size_t row0 = equation_row(p);
  // The increment restricted to the equation block is linear in A, so the
  // column for variable a_ij is minus the increment at A = E_ij.
  for (unsigned j = 0; j < m; ++j) {
    for (unsigned i = 0; i < d; ++i) {
      Coords h(grp.h_coord_count());
      h[(std::size_t{i} * m + j) * fe] = Elem{1};
      const FfMatrix g = grp.h_matrix(h);
      const FfMatrix moved = project_to_dual(grp, g * t * inverse(g));
      const std::size_t var = std::size_t{j} * d + i;
      for (unsigned jj = 0; jj < m; ++jj) {
        for (unsigned k = 0; k < d; ++k) {
          const Elem inc = K.sub(moved(row0 + k, d + jj), t(row0 + k, d + jj));
          coeff(std::size_t{jj} * d + k, var) = K.neg(inc);
        }
      }
    }
  }
  return coeff;
}

OrbitRecord orbit_of(const RadicalGroup& grp, const Coords& dual, std::uint64_t budget) {
  const std::uint64_t h_order = grp.space_size(grp.h_coord_count(), budget);
  const auto gens = h_generators(grp);
  std::unordered_set<std::uint64_t> seen{grp.encode(dual)};
  std::deque<Coords> todo{dual};
  while (!todo.empty()) {
    Coords cur = std::move(todo.front());
    todo.pop_front();
    for (const Generator& g : gens) {
      Coords nxt = coadjoint_act(grp, g.g, g.g_inv, cur);
      if (seen.insert(grp.encode(nxt)).second) todo.push_back(std::move(nxt));
    }
  }
  OrbitRecord rec;
  rec.representative = dual;
  rec.orbit_size = seen.size();
  if (h_order % rec.orbit_size != 0) throw Error("orbit size does not divide |H|");
  rec.stabilizer_order = h_order / rec.orbit_size;
  rec.e = exact_log(rec.orbit_size, ipow(grp.q(), grp.params().field_exponent()));
  if (rec.e != rank(coefficient_matrix(grp, dual)))
    throw Error("orbit size disagrees with coefficient matrix rank");
  return rec;
}

std::uint64_t OrbitCensus::total_characters() const {
  std::uint64_t s = 0;
  for (const auto& [e, b] : buckets) s += b.characters;
  return s;
}

BigInt OrbitCensus::sum_of_squares(unsigned field_exponent, std::uint32_t q) const {
  BigInt s = 0;
  for (const auto& [e, b] : buckets) {
    BigInt deg = 1;
    for (unsigned i = 0; i < e * field_exponent; ++i) deg *= q;
    s += BigInt(b.characters) * deg * deg;
  }
  return s;
}

OrbitCensus orbit_census(const RadicalGroup& grp, std::uint64_t budget) {
  OrbitCensus out;
  const RadicalParams& p = grp.params();
  out.dual_size = grp.space_size(grp.a_coord_count(), budget);
  out.h_order = grp.space_size(grp.h_coord_count(), budget);
  out.group_order = out.dual_size * out.h_order;
  const std::uint64_t k_order = ipow(grp.q(), p.field_exponent());
  const auto gens = h_generators(grp);

  std::vector<bool> seen(out.dual_size, false);
  std::vector<std::uint64_t> members;
  for (std::uint64_t start = 0; start < out.dual_size; ++start) {
    if (seen[start]) continue;
    members.assign(1, start);
    seen[start] = true;
    for (std::size_t k = 0; k < members.size(); ++k) {
      const Coords cur = grp.decode(members[k], grp.a_coord_count());
      for (const Generator& g : gens) {
        const std::uint64_t nxt = grp.encode(coadjoint_act(grp, g.g, g.g_inv, cur));
        if (!seen[nxt]) {
          seen[nxt] = true;
          members.push_back(nxt);
        }
      }
    }
    const std::uint64_t size = members.size();
    if (out.h_order % size != 0) throw Error("orbit size does not divide |H|");
    const unsigned e = exact_log(size, k_order);

    for (std::uint64_t idx : members) {
      const Coords c = grp.decode(idx, grp.a_coord_count());
      if (rank(coefficient_matrix(grp, c)) != e) out.orbit_rank_consistent = false;
      // with H trivial (d = n) every point is fixed
      const bool zero_form = p.trivial_h() || form_block(grp, c).is_zero();
      if ((size == 1) != zero_form) out.fixed_points_match = false;
    }

    OrbitBucket& b = out.buckets[e];
    b.e = e;
    b.orbits += 1;
    b.dual_points += size;
    b.characters += out.h_order / size;
  }

  // characters(e) = |k|^{-2e} * |union of orbits with index |k|^e| * |H|
  for (const auto& [e, b] : out.buckets) {
    const BigInt lhs = BigInt(b.characters) * ipow(k_order, 2 * e);
    const BigInt rhs = BigInt(b.dual_points) * out.h_order;
    if (lhs != rhs) throw Error("character count disagrees with |k|^-2e |P(e)| |H|");
  }
  return out;
}

std::uint64_t class_count_brute(const RadicalGroup& grp, std::uint64_t budget) {
  const std::size_t hc = grp.h_coord_count(), ac = grp.a_coord_count();
  const std::uint64_t order = grp.space_size(hc + ac, budget);
  const std::uint64_t a_size = grp.space_size(ac, budget);

  std::vector<Generator> gens;
  for (const Coords& c : grp.additive_generators(hc)) {
    FfMatrix g = grp.element(c, Coords(ac)).ambient;
    FfMatrix gi = inverse(g);
    gens.push_back({std::move(g), std::move(gi)});
  }
  for (const Coords& c : grp.additive_generators(ac)) {
    FfMatrix g = grp.element(Coords(hc), c).ambient;
    FfMatrix gi = inverse(g);
    gens.push_back({std::move(g), std::move(gi)});
  }

  auto index_of = [&](const RadicalElement& e) {
    return grp.encode(e.h) * a_size + grp.encode(e.a);
  };
  auto element_at = [&](std::uint64_t idx) {
    return grp.element(grp.decode(idx / a_size, hc), grp.decode(idx % a_size, ac));
  };

  std::vector<bool> seen(order, false);
  std::vector<std::uint64_t> members;
  std::uint64_t classes = 0;
  for (std::uint64_t start = 0; start < order; ++start) {
    if (seen[start]) continue;
    ++classes;
    seen[start] = true;
    members.assign(1, start);
    for (std::size_t k = 0; k < members.size(); ++k) {
      const FfMatrix cur = element_at(members[k]).ambient;
      for (const Generator& x : gens) {
        const std::uint64_t nxt = index_of(grp.decompose(x.g * cur * x.g_inv));
        if (!seen[nxt]) {
          seen[nxt] = true;
          members.push_back(nxt);
        }
      }
    }
  }
  return classes;
}

FfMatrix pairing_gram_matrix(const RadicalGroup& grp) {
  const std::size_t dim = grp.a_coord_count();
  const bool twisted = grp.params().type() == RadicalType::U;
  std::vector<FfMatrix> xs, ys;
  for (std::size_t k = 0; k < dim; ++k) {
    Coords c(dim);
    c[k] = Elem{1};
    xs.push_back(grp.lie_a(c));
    ys.push_back(grp.dual_matrix(c));
  }
  FfMatrix gram(grp.base_field(), dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      gram(i, j) = twisted ? twisted_trace_pairing(xs[i], ys[j]) : trace_pairing(xs[i], ys[j]);
  return gram;
}

bool pairing_nondegeneracy_check(const RadicalGroup& grp) {
  const FfMatrix gram = pairing_gram_matrix(grp);
  return rank(gram) == gram.rows();
}

ActionLawReport check_action_law(const RadicalGroup& grp, std::uint64_t budget) {
  ActionLawReport rep;
  rep.h_order = grp.space_size(grp.h_coord_count(), budget);
  rep.dual_size = grp.space_size(grp.a_coord_count(), budget);
  if (rep.h_order > budget / rep.h_order || rep.h_order * rep.h_order > budget / rep.dual_size)
    throw BudgetError("enumeration too large (budget " + std::to_string(budget) + ")");

  const std::size_t hc = grp.h_coord_count(), ac = grp.a_coord_count();
  std::vector<FfMatrix> hs;
  std::vector<std::vector<std::uint32_t>> act(rep.h_order);
  for (std::uint64_t h = 0; h < rep.h_order; ++h) {
    hs.push_back(grp.h_matrix(grp.decode(h, hc)));
    const FfMatrix hi = inverse(hs.back());
    act[h].resize(rep.dual_size);
    for (std::uint64_t t = 0; t < rep.dual_size; ++t)
      act[h][t] = static_cast<std::uint32_t>(
          grp.encode(coadjoint_act(grp, hs.back(), hi, grp.decode(t, ac))));
  }
  for (std::uint64_t g = 0; g < rep.h_order; ++g) {
    for (std::uint64_t h = 0; h < rep.h_order; ++h) {
      const std::uint64_t gh = grp.encode(grp.h_coords_of(hs[g] * hs[h]));
      for (std::uint64_t t = 0; t < rep.dual_size; ++t) {
        if (act[gh][t] != act[g][act[h][t]]) rep.holds = false;
        ++rep.checked;
      }
    }
  }
  return rep;
}

}  // namespace radchar
