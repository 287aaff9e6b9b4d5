#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fermatci/numeric.hpp"

namespace fermatci {

/// Smooth complete intersection of multidegree (d_1 <= ... <= d_c) in
/// projective n-space; its dimension is m = n - c.
struct MultiDegree {
  std::vector<std::int64_t> degrees;  // sorted ascending, each >= 2
  std::int64_t n = 0;

  std::int64_t c() const { return static_cast<std::int64_t>(degrees.size()); }
  std::int64_t m() const { return n - c(); }

  friend bool operator==(const MultiDegree&, const MultiDegree&) = default;
};

/// Sorts the degrees and validates (each >= 2, 1 <= c, m >= 0).
MultiDegree make_multidegree(std::vector<std::int64_t> degrees, std::int64_t n);

/// Topological Euler characteristic: (prod d_i) times the h^m coefficient of
/// (1 + h)^(n+1) / prod (1 + d_i h).
Int euler_characteristic(const MultiDegree& md);

/// Rank of the primitive part of the middle cohomology: for m even
/// chi - m - 1, for m odd (m + 1) - chi.
Int primitive_middle_betti(const MultiDegree& md);

/// chi(O_X(t)) by the Koszul resolution:
/// sum over subsets S of the degrees of (-1)^|S| C(n + t - sum(S), n).
Int chi_structure_sheaf_twist(const MultiDegree& md, std::int64_t t);

/// chi(Omega^p_X) for p = 0..m via Hirzebruch-Riemann-Roch with exact
/// truncated series.
std::vector<Int> chi_omega(const MultiDegree& md);

/// values[p] = h^{p, m-p}; primitive subtracts 1 at the center when m is even.
struct HodgeMiddleRow {
  std::vector<Int> values;
  std::vector<Int> primitive;
};

/// Throws std::logic_error if the computed row violates symmetry,
/// nonnegativity, or the middle Betti sum.
HodgeMiddleRow hodge_middle_row(const MultiDegree& md);

/// All multidegrees with m >= 2, n <= n_max, 2 <= d_i <= d_max, c <= c_max
/// whose primitive middle row vanishes away from the center (vacuous
/// vanishing counts). Deterministic order: c ascending, degree tuple
/// lexicographic, n ascending.
std::vector<MultiDegree> straight_polygon_scan(std::int64_t n_max, std::int64_t d_max,
                                               std::int64_t c_max);

enum class TheoremCase {
  covered_main_theorem,
  excluded_plane_cubic,
  hyperquadric,
  two_quadrics,
  open_per_remark,
};

std::string to_string(TheoremCase c);

/// The reduction (d, r) = (d_1, multiplicity of d_1) together with which case
/// of the automorphism classification the multidegree falls into.
struct Classification {
  std::int64_t reduced_degree = 0;
  std::int64_t reduced_count = 0;
  TheoremCase kind = TheoremCase::covered_main_theorem;
};

Classification classify_theorem_case(const MultiDegree& md);

}  // namespace fermatci
