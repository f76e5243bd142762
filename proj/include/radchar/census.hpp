#pragma once

// Closed-form rank censuses of symmetric, skew-symmetric and skew-Hermitian
// matrices, and their brute-force counterparts.

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "radchar/falinalg.hpp"
#include "radchar/gf.hpp"
#include "radchar/qpoly.hpp"

namespace radchar {

/// Two forms of the skew-Hermitian census. `Printed` carries an extra
/// leading (q - 1) factor and fails both the completeness identity and the
/// brute-force count; it is kept only to report that discrepancy.
enum class HermVariant { Printed, Corrected };

std::string to_string(HermVariant v);
HermVariant parse_herm_variant(const std::string& s);

/// Number of symmetric n x n matrices of rank r over F_q.
QPoly sym_rank_census(unsigned n, unsigned r);

/// Number of skew-symmetric n x n matrices of (even) rank `rank` over F_q.
QPoly skew_rank_census(unsigned n, unsigned rank);

/// Number of skew-Hermitian n x n matrices of rank r over F_{q^2}.
QPoly skewherm_rank_census(unsigned n, unsigned r, HermVariant v = HermVariant::Corrected);

/// Dispatches on the class. Skew-symmetric with odd r throws.
QPoly rank_census(SymmetryClass c, unsigned n, unsigned r,
                  HermVariant v = HermVariant::Corrected);

/// q^{n(n+1)/2}, q^{n(n-1)/2} or q^{n^2}: size of the whole class.
QPoly class_size(SymmetryClass c, unsigned n);

using RankHistogram = std::map<std::size_t, std::uint64_t>;

/// Exhaustive rank histogram over F_q (`base` is F_q; the skew-Hermitian
/// class is enumerated over its quadratic extension). With `only_rank`
/// the histogram keeps that single entry (zero counts included).
RankHistogram brute_rank_census(SymmetryClass c, unsigned n, const FieldPtr& base,
                                std::optional<std::size_t> only_rank = std::nullopt,
                                std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace radchar
