#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fermatci/cover.hpp"
#include "fermatci/group.hpp"
#include "fermatci/perm.hpp"

namespace fermatci {

enum class Verdict { faithful, not_faithful };

struct SeparatingEntry {
  CharacterVec chi;
  std::int64_t eigen_dim = 0;
  Int wedge_dim;
};

/// Machine-checkable verdict on whether the diagonal quotient group acts
/// faithfully on the primitive middle cohomology at parameters (n, r, d).
struct FaithfulnessCertificate {
  std::int64_t n = 0, r = 0, modulus = 0;
  Verdict verdict = Verdict::faithful;
  std::string mode;  // "quadric" | "star"
  std::optional<StarParams> star;
  std::vector<SeparatingEntry> separating_set;
  JointKernelReport kernel;
  std::optional<GroupElement> witness;  // a nontrivial element acting trivially
  std::vector<std::string> diagnostics;
};

/// d = 2 case analysis: not faithful exactly when r = 2 and n + 1 is even
/// (witness: a product of two sign flips); otherwise certifies faithfulness
/// with pair-zero or single-zero character families.
FaithfulnessCertificate quadric_verdict(std::int64_t n, std::int64_t r);

/// Dispatches to quadric_verdict for d = 2; for d >= 3 builds the separating
/// family from star_parameters, verifies every member has wedge dimension
/// >= 1 and that the joint kernel is the diagonal. If the minimal-t parameter
/// choice produces a vanishing wedge dimension, the next (s, t) pair
/// satisfying the same congruences is tried (recorded in diagnostics); a
/// CheckFailure is raised only when no admissible pair works.
FaithfulnessCertificate faithfulness_certificate(std::int64_t n, std::int64_t r, std::int64_t modulus);

struct BruteForceResult {
  Verdict verdict = Verdict::faithful;
  std::optional<GroupElement> witness;  // first in canonical order
  std::int64_t contributing_characters = 0;
};

/// Independent oracle: enumerates all d^n group elements and all characters
/// with nonzero wedge dimension directly (no Smith-form machinery). Guarded
/// by d^n <= 10^6.
BruteForceResult brute_force_faithful(std::int64_t n, std::int64_t r, std::int64_t modulus,
                                      int workers = 1);

/// First character in lexicographic order with nonzero wedge dimension that
/// is moved by the coordinate permutation tau. UsageError for the identity;
/// CheckFailure when the search is exhausted.
CharacterVec permutation_witness(std::int64_t n, std::int64_t r, std::int64_t modulus,
                                 const Perm& tau);

/// Test support: re-checks the certificate invariants from scratch (wedge
/// positivity + kernel verdict for "faithful"; witness annihilated by every
/// contributing character for "not_faithful"). Throws std::logic_error.
void validate_certificate(const FaithfulnessCertificate& cert);

}  // namespace fermatci
