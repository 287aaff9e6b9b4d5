#include "fermatci/involution.hpp"

#include "fermatci/errors.hpp"

namespace fermatci {

std::pair<Int, Int> plus_minus_dims(std::int64_t n1, std::int64_t n2, std::int64_t degree) {
  if (n1 < 1 || n2 < 1) throw UsageError("block sizes must be >= 1");
  if (degree < 1) throw UsageError("degree must be >= 1");
  Int even = 0, odd = 0;
  for (std::int64_t j = 0; j <= degree; ++j) {
    // Monomials with j factors from the negated block: S^{d-j} x S^j.
    const Int term = binomial(n1 - 1 + degree - j, degree - j) * binomial(n2 - 1 + j, j);
    (j % 2 == 0 ? even : odd) += term;
  }
  return {even, odd};
}

DefectResult min_defect(std::int64_t n, std::int64_t r, std::int64_t degree) {
  if (n < 3) throw UsageError("need n >= 3");
  if (r < 1 || r >= n) throw UsageError("need 1 <= r < n");
  if (degree < 2) throw UsageError("need d >= 2");

  DefectResult best;
  bool have = false;
  for (std::int64_t n1 = 1; n1 <= n; ++n1) {
    const std::int64_t n2 = n + 1 - n1;
    const auto [e1, e2] = plus_minus_dims(n1, n2, degree);
    for (std::int64_t f1 = 0; f1 <= r; ++f1) {
      const std::int64_t f2 = r - f1;
      if (e1 < f1 || e2 < f2) continue;
      const Int defect =
          f2 * (e1 - f1) + f1 * (e2 - f2) - Int(2) * static_cast<long>(n1) * static_cast<long>(n2);
      // Ascending (n1, f1) scan plus strict improvement = lexicographically
      // smallest argmin.
      if (!have || defect < best.minimum) {
        have = true;
        best.minimum = defect;
        best.n1 = n1;
        best.n2 = n2;
        best.f1 = f1;
        best.f2 = f2;
      }
    }
  }
  if (!have) throw std::logic_error("no feasible (f1, f2) split");  // f1 = r always feasible
  best.positive = best.minimum > 0;
  return best;
}

std::vector<InvolutionRow> involution_scan(std::int64_t n_max, std::int64_t d_max) {
  if (n_max < 3 || d_max < 2) throw UsageError("need n_max >= 3 and d_max >= 2");
  std::vector<InvolutionRow> rows;
  for (std::int64_t n = 3; n <= n_max; ++n)
    for (std::int64_t r = 1; r < n; ++r)
      for (std::int64_t d = 2; d <= d_max; ++d) {
        InvolutionRow row;
        row.n = n;
        row.r = r;
        row.degree = d;
        row.defect = min_defect(n, r, d);
        row.hypothesis = d >= 3 || r >= 3;
        rows.push_back(std::move(row));
      }
  return rows;
}

}  // namespace fermatci
