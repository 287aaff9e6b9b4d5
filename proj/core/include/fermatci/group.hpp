#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "fermatci/linalg.hpp"
#include "fermatci/numeric.hpp"
#include "fermatci/perm.hpp"

namespace fermatci {

/// Element of (Z/d)^(n+1) / diagonal, stored as the canonical coset
/// representative whose first entry is 0.
struct GroupElement {
  std::int64_t modulus = 0;
  ResidueVec entries;  // entries[0] == 0, all in [0, modulus)

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// Reduces a raw tuple to the canonical representative (subtracts the first
/// entry from every coordinate mod d).
GroupElement canonicalize(std::int64_t modulus, const ResidueVec& raw);

GroupElement identity_element(std::int64_t modulus, std::int64_t n);

bool is_identity(const GroupElement& g);

/// Character of the diagonal quotient group: an exponent tuple (a_0, ..., a_n)
/// mod d with zero coordinate sum, evaluated additively (the value is the
/// exponent of a fixed primitive d-th root of unity).
struct CharacterVec {
  std::int64_t modulus = 0;
  ResidueVec entries;  // all in [0, modulus); sum == 0 mod modulus

  friend bool operator==(const CharacterVec&, const CharacterVec&) = default;
};

/// Validates the zero-sum invariant (UsageError otherwise) and reduces entries
/// into [0, d).
CharacterVec make_character(std::int64_t modulus, const ResidueVec& entries);

bool is_trivial(const CharacterVec& chi);

/// Sum a_i * g_i mod d. Well defined on cosets because the exponents sum to 0.
std::int64_t evaluate_character(const CharacterVec& chi, const GroupElement& g);

/// Parameters for the separating character family at (n, d):
///   k = (-n) mod d,
///   t = smallest t >= 0 with gcd(n + t, d) = 1,
///   s = (k + 1 - t) mod d.
/// They satisfy d | k + n, d | s + t + n - 1, gcd(n + t, d) = 1.
struct StarParams {
  std::int64_t k = 0, s = 0, t = 0;

  friend bool operator==(const StarParams&, const StarParams&) = default;
};

StarParams star_parameters(std::int64_t n, std::int64_t modulus);

/// The n+1 separating characters for given parameters: first
/// (1, ..., 1, k), then for each position i = 0..n-1 the tuple with s at
/// position i, t at position n and 1 elsewhere.
std::vector<CharacterVec> separating_characters(std::int64_t n, std::int64_t modulus, const StarParams& p);
std::vector<CharacterVec> separating_characters(std::int64_t n, std::int64_t modulus);

struct JointKernelReport {
  bool is_diagonal = false;
  bool contains_diagonal = false;  // every row kills (1, ..., 1)
  KernelDescription kernel;
};

/// Stacks the characters as rows of an integer matrix and compares the
/// solution set of M x == 0 (mod d) with the diagonal subgroup {(a, ..., a)}.
JointKernelReport joint_kernel_is_diagonal(const std::vector<CharacterVec>& chars);

/// Pullback along the coordinate permutation tau: entry i of the result is
/// a_{tau^-1(i)} (the entry at position tau(j) is the old entry at j).
CharacterVec conjugate_character(const CharacterVec& chi, const Perm& tau);

/// Visits every zero-sum exponent tuple (a_0, ..., a_n) mod d exactly once in
/// lexicographic order (d^n tuples: the first n coordinates range freely and
/// determine the last). The buffer passed to fn is reused between calls.
void for_each_character(std::int64_t modulus, std::int64_t n,
                        const std::function<void(const ResidueVec&)>& fn);

/// The index-th tuple (0-based) of the enumeration above.
ResidueVec character_at_index(std::int64_t modulus, std::int64_t n, std::uint64_t index);

}  // namespace fermatci
