#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fermatci/numeric.hpp"

namespace fermatci {

/// Dimensions (e1, e2) of the even and odd parts of the degree-d forms on
/// k^{n1} (+) k^{n2} when the involution negates the second block:
/// e1 = sum over even j of C(n1-1+d-j, d-j) C(n2-1+j, j), e2 the odd sum.
/// They satisfy e1 + e2 = C(n1+n2-1+d, d).
std::pair<Int, Int> plus_minus_dims(std::int64_t n1, std::int64_t n2, std::int64_t degree);

/// The minimized obstruction count for equipping some member of the
/// (d, ..., d; n) family with an involution of the given block shape:
/// defect(n1, n2, f1, f2) = f2 (e1 - f1) + f1 (e2 - f2) - 2 n1 n2,
/// minimized over n1 + n2 = n + 1 (n_i >= 1) and f1 + f2 = r (0 <= f_i <= e_i).
/// Argmin reported as the lexicographically smallest (n1, n2, f1, f2).
struct DefectResult {
  Int minimum;
  std::int64_t n1 = 0, n2 = 0, f1 = 0, f2 = 0;
  bool positive = false;
};

DefectResult min_defect(std::int64_t n, std::int64_t r, std::int64_t degree);

struct InvolutionRow {
  std::int64_t n = 0, r = 0, degree = 0;
  DefectResult defect;
  /// d >= 3, or d = 2 with r >= 3: the range where positivity is asserted.
  bool hypothesis = false;
};

/// All (n, r, d) with 3 <= n <= n_max, 1 <= r < n, 2 <= d <= d_max, in
/// lexicographic (n, r, d) order. Rows outside the hypothesis are the
/// negative controls.
std::vector<InvolutionRow> involution_scan(std::int64_t n_max, std::int64_t d_max);

}  // namespace fermatci
