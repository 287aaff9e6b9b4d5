#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fermatci/numeric.hpp"
#include "fermatci/perm.hpp"

namespace fermatci {

/// The r-equation family member cut out by sum_i lambda_i^j x_i^d = 0 for
/// j = 0..r-1, with pairwise distinct coefficients lambda_i.
struct FermatFamily {
  std::int64_t n = 0, r = 0, degree = 0;
  RatVec lambdas;  // size n + 1
};

FermatFamily make_family(std::int64_t n, std::int64_t r, std::int64_t degree, RatVec lambdas);

/// The canonical coefficient tuple (0, 1, ..., n).
RatVec sample_lambda_canonical(std::int64_t n);

/// Deterministic seeded tuple of pairwise distinct rationals with numerator
/// in [-height, height] and denominator in [1, height]. The generator is
/// mt19937_64 with explicit modulo reduction (no distribution objects), so
/// the output is identical across platforms and standard libraries.
RatVec sample_lambda_seeded(std::int64_t n, std::uint64_t seed, std::int64_t height);

/// Whether some polynomial p of degree <= r - 1 satisfies
/// p(lambda_i) = lambda_{tau(i)} for all i; decided exactly by comparing the
/// rank of the (n+1) x r Vandermonde matrix with and without the target
/// column appended.
bool interpolation_exists(const RatVec& lambdas, const Perm& tau, std::int64_t r);

/// Solution of the linear system expressing that the monomial map with
/// coordinate scalings mu and coordinate permutation tau preserves the span
/// of the defining equations: V diag(mu) P_tau must kill the nullspace of V,
/// where V is the r x (n+1) coefficient Vandermonde matrix.
struct PermSolveReport {
  Perm tau = Perm::identity(1);
  std::int64_t solution_dim = 0;
  /// True when no coordinate functional vanishes identically on the solution
  /// space (an all-nonzero scaling exists, so tau is realized by an actual
  /// coordinate automorphism).
  bool admissible = false;
  std::optional<RatVec> sample_mu;  // all entries nonzero; rowspace-verified
};

PermSolveReport automorphisms_for_permutation(const FermatFamily& f, const Perm& tau);

struct AutOrderReport {
  FermatFamily family;
  bool generic = false;          // only the identity admissible, solution_dim 1
  std::optional<Int> order;      // d^n when generic
  std::vector<PermSolveReport> admissible;  // lexicographic tau order
  std::int64_t permutations_scanned = 0;
};

/// Scans all (n+1)! coordinate permutations (bounded by 10^6) in
/// lexicographic order.
AutOrderReport aut_group_order(const FermatFamily& f);

}  // namespace fermatci
