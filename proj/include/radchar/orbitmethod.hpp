#pragma once

// Coadjoint orbits of H on Lie(A)^t and the character counts they give by
// Clifford theory, together with the brute-force oracles that check them.
//
// A character of A is identified with a dual point T via the (twisted)
// trace pairing; H acts by T -> [g T g^{-1}]_B, where [.]_B keeps entry
// (i, j) only if (j, i) lies in the support of Lie(A). An orbit of size
// |k|^e with stabilizer H_T contributes |H_T| characters of degree |k|^e.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "radchar/radical.hpp"

namespace radchar {

inline constexpr std::uint64_t kDefaultOrbitBudget = 1'000'000;
inline constexpr std::uint64_t kDefaultClassBudget = 10'000;

/// [g T g^{-1}]_B for g = h_matrix(h).
Coords coadjoint_act(const RadicalGroup& grp, const Coords& h, const Coords& dual);
/// Same, with g and g^{-1} already realized.
Coords coadjoint_act(const RadicalGroup& grp, const FfMatrix& g, const FfMatrix& g_inv,
                     const Coords& dual);

/// The block of the dual point whose rank governs the orbit: B1 (symmetric
/// or skew, d x d) for C and D, B2 (d x d, B2 J_d skew-Hermitian) for U.
FfMatrix form_block(const RadicalGroup& grp, const Coords& dual);

/// Coefficient matrix of the linear stabilizer equations in the d * m
/// entries of A (or A1). Variables and equations are grouped by column of
/// A, which makes the matrix block diagonal with m copies of form_block.
/// Over k; its rank is the degree exponent e.
FfMatrix coefficient_matrix(const RadicalGroup& grp, const Coords& dual);

struct OrbitRecord {
  Coords representative;
  std::uint64_t orbit_size = 0;
  std::uint64_t stabilizer_order = 0;
  unsigned e = 0;  // orbit_size = |k|^e
};

/// Orbit of one dual point by closure under the additive generators of H.
OrbitRecord orbit_of(const RadicalGroup& grp, const Coords& dual,
                     std::uint64_t budget = kDefaultOrbitBudget);

struct OrbitBucket {
  unsigned e = 0;
  std::uint64_t orbits = 0;
  std::uint64_t dual_points = 0;  // |union of orbits with this e|
  std::uint64_t characters = 0;
};

struct OrbitCensus {
  std::map<unsigned, OrbitBucket> buckets;
  std::uint64_t dual_size = 0;
  std::uint64_t h_order = 0;
  std::uint64_t group_order = 0;
  /// Every dual point has orbit size |k|^{rank(coefficient_matrix)}.
  bool orbit_rank_consistent = true;
  /// Fixed points are exactly the duals with a zero form block (every point
  /// when d = n).
  bool fixed_points_match = true;

  std::uint64_t total_characters() const;
  /// sum over buckets of characters * degree^2
  BigInt sum_of_squares(unsigned field_exponent, std::uint32_t q) const;
};

/// Enumerates every orbit of the dual space.
OrbitCensus orbit_census(const RadicalGroup& grp, std::uint64_t budget = kDefaultOrbitBudget);

/// Number of conjugacy classes of the radical, by closing each element under
/// conjugation by the additive generators of H and A.
std::uint64_t class_count_brute(const RadicalGroup& grp,
                                std::uint64_t budget = kDefaultClassBudget);

/// Gram matrix (over F_q) of the trace pairing (C, D) or the twisted trace
/// pairing (U) between F_q-bases of Lie(A) and Lie(A)^t.
FfMatrix pairing_gram_matrix(const RadicalGroup& grp);
bool pairing_nondegeneracy_check(const RadicalGroup& grp);

struct ActionLawReport {
  std::uint64_t h_order = 0;
  std::uint64_t dual_size = 0;
  std::uint64_t checked = 0;  // (g, h, T) triples
  bool holds = true;
};

/// g.(h.T) == (gh).T for every g, h in H and T in the dual, with gh formed in
/// the ambient group.
ActionLawReport check_action_law(const RadicalGroup& grp,
                                 std::uint64_t budget = 50'000'000);

}  // namespace radchar
