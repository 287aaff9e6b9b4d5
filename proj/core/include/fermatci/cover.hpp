#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fermatci/group.hpp"
#include "fermatci/numeric.hpp"

namespace fermatci {

/// Cyclic cover of the line attached to a nontrivial character
/// (a_0, ..., a_n) mod d: the curve y^e = prod_i (x - c_i)^{b_i} with
/// e = d / gcd(a_0, ..., a_n, d) and b_i = a_i e / d.
struct BranchData {
  std::int64_t degree = 0;  // the covering degree e
  ResidueVec exponents;     // the reduced exponents b_i, in [0, e)
  bool unbranched_at_infinity = false;
};

/// UsageError on the trivial character (no cover).
BranchData branch_data(const CharacterVec& chi);

/// Genus of the smooth projective model from the Riemann-Hurwitz formula in
/// the standard form 2g - 2 = -2e + sum_i (e - gcd(b_i, e)).
std::int64_t genus_riemann_hurwitz(const BranchData& b);

/// Dimension of the chi-eigenspace of the middle cohomology of the branch
/// divisor complement: max(B - 2, 0), B = #{i : a_i != 0}. 0 for trivial chi.
std::int64_t eigenspace_dimension(const CharacterVec& chi);

struct CoverSummary {
  std::int64_t genus = 0;
  std::int64_t eigen_dim = 0;
  std::int64_t branch_count = 0;
  /// Genus recomputed with the alternative local-term bookkeeping sometimes
  /// seen in displays of the Hurwitz count (e/gcd(b_i, e) instead of
  /// e - gcd(b_i, e) at branch points with exponent != 1). Reported for
  /// comparison; absent when that variant does not produce an integer.
  std::optional<std::int64_t> display_variant_genus;
  bool display_variant_matches = false;
};

CoverSummary cover_summary(const CharacterVec& chi);

struct DecompEntry {
  ResidueVec chi;
  std::int64_t eigen_dim = 0;
  Int wedge_dim;
};

/// The chi-isotypic dimensions of the primitive middle cohomology of the
/// (d, ..., d; n) family member with r equations: for each character,
/// C(eigenspace_dimension, n - r). Only nonzero entries are materialized,
/// in lexicographic character order; total is the sum over all d^n characters.
struct Decomposition {
  std::int64_t n = 0, r = 0, modulus = 0;
  std::vector<DecompEntry> entries;
  Int total;
};

Decomposition primitive_decomposition(std::int64_t n, std::int64_t r, std::int64_t modulus,
                                      int workers = 1);

}  // namespace fermatci
