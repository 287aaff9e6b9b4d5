#include "fermatci/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

#include "fermatci/errors.hpp"

namespace fermatci {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) throw UsageError("matrix dimensions must be positive");
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  if (rows.size() == 0 || rows.begin()->size() == 0) throw UsageError("matrix literal must be nonempty");
  IntMatrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    if (r.size() != m.cols()) throw UsageError("ragged matrix literal");
    std::size_t j = 0;
    for (long v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw UsageError("matrix product dimension mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) throw UsageError("matrix dimensions must be positive");
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  if (rows.size() == 0 || rows.begin()->size() == 0) throw UsageError("matrix literal must be nonempty");
  RatMatrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    if (r.size() != m.cols()) throw UsageError("ragged matrix literal");
    std::size_t j = 0;
    for (long v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw UsageError("matrix product dimension mismatch");
  RatMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

namespace {

Int trunc_quot(const Int& num, const Int& den) {
  Int q;
  mpz_tdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m) {
  const std::size_t R = m.rows(), C = m.cols();
  const std::size_t t = std::min(R, C);
  IntMatrix A = m;
  IntMatrix U = IntMatrix::identity(R);
  IntMatrix V = IntMatrix::identity(C);

  // Row operations act on the left (A' = L A, so U' = L U); column operations
  // act on the right (A' = A Rt, so V' = V Rt).
  auto row_swap = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < C; ++j) swap(A(a, j), A(b, j));
    for (std::size_t j = 0; j < R; ++j) swap(U(a, j), U(b, j));
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < R; ++i) swap(A(i, a), A(i, b));
    for (std::size_t i = 0; i < C; ++i) swap(V(i, a), V(i, b));
  };
  auto row_sub = [&](std::size_t i, std::size_t k, const Int& q) {  // R_i -= q R_k
    if (q == 0) return;
    for (std::size_t j = 0; j < C; ++j) A(i, j) -= q * A(k, j);
    for (std::size_t j = 0; j < R; ++j) U(i, j) -= q * U(k, j);
  };
  auto col_sub = [&](std::size_t j, std::size_t k, const Int& q) {  // C_j -= q C_k
    if (q == 0) return;
    for (std::size_t i = 0; i < R; ++i) A(i, j) -= q * A(i, k);
    for (std::size_t i = 0; i < C; ++i) V(i, j) -= q * V(i, k);
  };
  auto row_add = [&](std::size_t i, std::size_t k) {  // R_i += R_k
    for (std::size_t j = 0; j < C; ++j) A(i, j) += A(k, j);
    for (std::size_t j = 0; j < R; ++j) U(i, j) += U(k, j);
  };

  // Smallest-|value| nonzero entry of the trailing submatrix, ties broken by
  // lowest (row, col); false when the submatrix is zero.
  auto find_pivot = [&](std::size_t k, std::size_t& pi, std::size_t& pj) -> bool {
    bool found = false;
    Int best;
    for (std::size_t i = k; i < R; ++i)
      for (std::size_t j = k; j < C; ++j) {
        if (A(i, j) == 0) continue;
        Int a = abs(A(i, j));
        if (!found || a < best) {
          found = true;
          best = a;
          pi = i;
          pj = j;
        }
      }
    return found;
  };

  for (std::size_t k = 0; k < t; ++k) {
    std::size_t pi, pj;
    if (!find_pivot(k, pi, pj)) break;  // trailing zero block
    while (true) {
      row_swap(k, pi);
      col_swap(k, pj);
      bool clean = true;
      for (std::size_t i = k + 1; i < R; ++i) {
        if (A(i, k) == 0) continue;
        row_sub(i, k, trunc_quot(A(i, k), A(k, k)));
        if (A(i, k) != 0) clean = false;  // remainder smaller than the pivot
      }
      for (std::size_t j = k + 1; j < C; ++j) {
        if (A(k, j) == 0) continue;
        col_sub(j, k, trunc_quot(A(k, j), A(k, k)));
        if (A(k, j) != 0) clean = false;
      }
      if (clean) break;
      // A strictly smaller candidate now exists; reselect and go again.
      find_pivot(k, pi, pj);
    }
  }

  // Nonnegative diagonal.
  for (std::size_t k = 0; k < t; ++k) {
    if (A(k, k) < 0) {
      for (std::size_t j = 0; j < C; ++j) A(k, j) = -A(k, j);
      for (std::size_t j = 0; j < R; ++j) U(k, j) = -U(k, j);
    }
  }

  // Enforce the divisibility chain with 2x2 diagonal transforms:
  // diag(a, b) -> diag(gcd(a, b), ab/gcd(a, b)). Adjacent sweeps to fixpoint.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < t; ++i) {
      const Int a = A(i, i), b = A(i + 1, i + 1);
      if (a == 0 && b == 0) continue;
      if (a != 0 && b % a == 0) continue;
      Int g, s, w;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), w.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      const Int ag = a / g, bg = b / g;
      row_add(i, i + 1);  // block is now [[a, b], [0, b]]
      // Columns (i, i+1) *= [[s, -bg], [w, ag]], a determinant-1 matrix.
      for (std::size_t r = 0; r < R; ++r) {
        Int ci = A(r, i), cj = A(r, i + 1);
        A(r, i) = s * ci + w * cj;
        A(r, i + 1) = -bg * ci + ag * cj;
      }
      for (std::size_t r = 0; r < C; ++r) {
        Int ci = V(r, i), cj = V(r, i + 1);
        V(r, i) = s * ci + w * cj;
        V(r, i + 1) = -bg * ci + ag * cj;
      }
      row_sub(i + 1, i, w * bg);  // block is now diag(g, ab/g)
      changed = true;
    }
  }

  assert([&] {
    for (std::size_t i = 0; i < R; ++i)
      for (std::size_t j = 0; j < C; ++j)
        if (i != j && A(i, j) != 0) return false;
    for (std::size_t i = 0; i + 1 < t; ++i) {
      if (A(i, i) == 0 && A(i + 1, i + 1) != 0) return false;
      if (A(i, i) != 0 && A(i + 1, i + 1) % A(i, i) != 0) return false;
    }
    return true;
  }());

  return SnfResult{std::move(U), std::move(A), std::move(V)};
}

KernelDescription kernel_mod(const IntMatrix& m, std::int64_t modulus) {
  if (modulus < 2) throw UsageError("kernel_mod: modulus must be >= 2");
  const SnfResult snf = smith_normal_form(m);
  const std::size_t R = m.rows(), C = m.cols();
  const Int dz(static_cast<long>(modulus));

  KernelDescription out;
  out.modulus = modulus;
  // With U M V = D and x = V y, the system M x == 0 (mod d) becomes
  // D(i,i) y_i == 0 (mod d) per coordinate (no constraint past the diagonal).
  for (std::size_t i = 0; i < C; ++i) {
    Int ci = (i < R) ? snf.D(i, i) : Int(0);
    Int gz;
    mpz_gcd(gz.get_mpz_t(), ci.get_mpz_t(), dz.get_mpz_t());
    const std::int64_t g = gz.get_si();  // divides modulus, fits easily
    if (g <= 1) continue;                // coordinate admits only y_i = 0
    const std::int64_t step = modulus / g;
    ResidueVec gen(C);
    bool nonzero = false;
    for (std::size_t r = 0; r < C; ++r) {
      Int val = snf.V(r, i) * static_cast<long>(step);
      Int rem;
      mpz_fdiv_r(rem.get_mpz_t(), val.get_mpz_t(), dz.get_mpz_t());
      gen[r] = rem.get_si();
      nonzero = nonzero || gen[r] != 0;
    }
    assert(nonzero);  // y -> V y is invertible mod d, orders are preserved
    out.generators.push_back(std::move(gen));
    out.orders.push_back(g);
    out.cardinality *= g;
  }
  return out;
}

namespace {

// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(RatMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < a.cols(); ++j) swap(a(p, j), a(row, j));
    const Rat piv = a(row, col);
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) /= piv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      const Rat f = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<RatVec> rational_nullspace(const RatMatrix& m) {
  RatMatrix a = m;
  const std::vector<std::size_t> pivots = rref(a);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<RatVec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVec v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const RatMatrix& m) {
  RatMatrix a = m;
  return rref(a).size();
}

Rat determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw UsageError("determinant of a non-square matrix");
  RatMatrix a = m;
  const std::size_t n = a.rows();
  Rat det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a(p, col) == 0) ++p;
    if (p == n) return Rat(0);
    if (p != col) {
      for (std::size_t j = 0; j < n; ++j) swap(a(p, j), a(col, j));
      det = -det;
    }
    const Rat piv = a(col, col);
    det *= piv;
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a(i, col) == 0) continue;
      const Rat f = a(i, col) / piv;
      for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return det;
}

RatVec apply(const RatMatrix& m, const RatVec& v) {
  if (v.size() != m.cols()) throw UsageError("matrix-vector dimension mismatch");
  RatVec out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0 && v[j] != 0) out[i] += m(i, j) * v[j];
  return out;
}

}  // namespace fermatci
