#include "fermatci/hodge.hpp"

#include <algorithm>
#include <stdexcept>

#include "fermatci/errors.hpp"
#include "fermatci/series.hpp"

namespace fermatci {

MultiDegree make_multidegree(std::vector<std::int64_t> degrees, std::int64_t n) {
  if (degrees.empty()) throw UsageError("need at least one degree");
  for (std::int64_t d : degrees)
    if (d < 2) throw UsageError("degrees must be >= 2");
  std::sort(degrees.begin(), degrees.end());
  MultiDegree md;
  md.degrees = std::move(degrees);
  md.n = n;
  if (md.m() < 0) throw UsageError("need n >= number of degrees");
  return md;
}

namespace {

Int degree_product(const MultiDegree& md) {
  Int p = 1;
  for (std::int64_t d : md.degrees) p *= static_cast<long>(d);
  return p;
}

Rat h_coefficient(const Series& s, std::int64_t deg) { return s[static_cast<std::size_t>(deg)]; }

Int rat_to_int(const Rat& q, const char* what) {
  if (q.get_den() != 1) throw std::logic_error(std::string(what) + ": expected an integer");
  return q.get_num();
}

}  // namespace

Int euler_characteristic(const MultiDegree& md) {
  const auto cap = static_cast<std::size_t>(md.n);
  Series f = geometric_pow(1, md.n + 1, cap);  // (1 + h)^(n+1)
  for (std::int64_t d : md.degrees) f = f * geometric_pow(d, -1, cap);
  return rat_to_int(degree_product(md) * h_coefficient(f, md.m()), "euler characteristic");
}

Int primitive_middle_betti(const MultiDegree& md) {
  if (md.m() < 1) throw UsageError("need positive dimension");
  const Int chi = euler_characteristic(md);
  const std::int64_t m = md.m();
  if (m % 2 == 0) return chi - static_cast<long>(m) - 1;
  return Int(static_cast<long>(m + 1)) - chi;
}

Int chi_structure_sheaf_twist(const MultiDegree& md, std::int64_t t) {
  const auto c = static_cast<std::size_t>(md.c());
  Int total = 0;
  // Alternating sum over subsets of the defining degrees.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c); ++mask) {
    std::int64_t drop = 0;
    int bits = 0;
    for (std::size_t i = 0; i < c; ++i)
      if (mask >> i & 1) {
        drop += md.degrees[i];
        ++bits;
      }
    const Int term = binomial(md.n + t - drop, md.n);
    total += (bits % 2 == 0) ? term : -term;
  }
  return total;
}

std::vector<Int> chi_omega(const MultiDegree& md) {
  const std::int64_t m = md.m();
  if (m < 1) throw UsageError("need positive dimension");
  const auto cap = static_cast<std::size_t>(md.n);
  const auto ycap = static_cast<std::size_t>(m);

  // Bivariate bookkeeping: index p holds the h-series cofficient of y^p.
  using YSeries = std::vector<Series>;
  auto yconst = [&](const Series& s) {
    YSeries v(ycap + 1, Series(cap));
    v[0] = s;
    return v;
  };
  auto ymul = [&](const YSeries& a, const YSeries& b) {
    YSeries out(ycap + 1, Series(cap));
    for (std::size_t i = 0; i <= ycap; ++i)
      for (std::size_t j = 0; i + j <= ycap; ++j) out[i + j] += a[i] * b[j];
    return out;
  };
  // Inverse in the y-adic sense; needs a[0] invertible as an h-series.
  auto yinv = [&](const YSeries& a) {
    YSeries out(ycap + 1, Series(cap));
    const Series inv0 = a[0].inverse();
    out[0] = inv0;
    for (std::size_t k = 1; k <= ycap; ++k) {
      Series acc(cap);
      for (std::size_t j = 1; j <= k; ++j) acc += a[j] * out[k - j];
      out[k] = Series(cap) - inv0 * acc;
    }
    return out;
  };
  // 1 + y * (h-series)
  auto one_plus_y = [&](const Series& s) {
    YSeries v(ycap + 1, Series(cap));
    v[0] = Series::constant(cap, 1);
    if (ycap >= 1) v[1] = s;
    return v;
  };

  // Exterior-power generating series of the cotangent sheaf, restricted to X:
  // (1 + y e^{-h})^{n+1} / ((1 + y) * prod_i (1 + y e^{-d_i h})).
  YSeries lambda = yconst(Series::constant(cap, 1));
  {
    const YSeries base = one_plus_y(exp_series(-1, cap));
    for (std::int64_t i = 0; i < md.n + 1; ++i) lambda = ymul(lambda, base);
  }
  lambda = ymul(lambda, yinv(one_plus_y(Series::constant(cap, 1))));
  for (std::int64_t d : md.degrees) lambda = ymul(lambda, yinv(one_plus_y(exp_series(-d, cap))));

  // Todd class of the tangent sheaf of X, written through the ambient space:
  // td(h)^{n+1} / prod_i td(d_i h).
  Series todd = todd_line(1, cap).pow(md.n + 1);
  for (std::int64_t d : md.degrees) todd = todd * todd_line(d, cap).inverse();

  const Int scale = degree_product(md);
  std::vector<Int> out;
  out.reserve(ycap + 1);
  for (std::size_t p = 0; p <= ycap; ++p) {
    const Series total = lambda[p] * todd;
    out.push_back(rat_to_int(scale * h_coefficient(total, m), "chi(Omega^p)"));
  }
  return out;
}

HodgeMiddleRow hodge_middle_row(const MultiDegree& md) {
  const std::int64_t m = md.m();
  if (m < 1) throw UsageError("need positive dimension");
  const std::vector<Int> chis = chi_omega(md);

  HodgeMiddleRow row;
  row.values.resize(static_cast<std::size_t>(m + 1));
  for (std::int64_t p = 0; p <= m; ++p) {
    // chi(Omega^p) = (-1)^{m-p} h^{p,m-p} + (-1)^p [2p != m]: off-middle Hodge
    // numbers of a complete intersection are Kronecker deltas.
    Int v = chis[static_cast<std::size_t>(p)];
    if (2 * p != m) v -= (p % 2 == 0) ? 1 : -1;
    if ((m - p) % 2 != 0) v = -v;
    row.values[static_cast<std::size_t>(p)] = v;
  }

  const Int bm = primitive_middle_betti(md) + ((m % 2 == 0) ? 1 : 0);
  Int sum = 0;
  for (std::int64_t p = 0; p <= m; ++p) {
    const Int& v = row.values[static_cast<std::size_t>(p)];
    if (v < 0) throw std::logic_error("negative Hodge number");
    if (v != row.values[static_cast<std::size_t>(m - p)])
      throw std::logic_error("Hodge row violates conjugation symmetry");
    sum += v;
  }
  if (sum != bm) throw std::logic_error("Hodge row does not sum to the middle Betti number");

  row.primitive = row.values;
  if (m % 2 == 0) {
    Int& center = row.primitive[static_cast<std::size_t>(m / 2)];
    center -= 1;
    if (center < 0) throw std::logic_error("negative primitive Hodge number");
  }
  return row;
}

std::vector<MultiDegree> straight_polygon_scan(std::int64_t n_max, std::int64_t d_max,
                                               std::int64_t c_max) {
  if (n_max < 3 || d_max < 2 || c_max < 1) throw UsageError("scan bounds too small");
  std::vector<MultiDegree> straight;

  std::vector<std::int64_t> degrees;
  auto scan_n = [&]() {
    for (std::int64_t n = static_cast<std::int64_t>(degrees.size()) + 2; n <= n_max; ++n) {
      MultiDegree md;
      md.degrees = degrees;
      md.n = n;
      const HodgeMiddleRow row = hodge_middle_row(md);
      bool ok = true;
      const std::int64_t m = md.m();
      for (std::int64_t p = 0; p <= m && ok; ++p)
        if (2 * p != m && row.primitive[static_cast<std::size_t>(p)] != 0) ok = false;
      if (ok) straight.push_back(md);
    }
  };
  // Nondecreasing degree tuples, shortest first, lexicographic within length.
  auto rec = [&](auto&& self, std::int64_t min_d) -> void {
    if (!degrees.empty()) scan_n();
    if (static_cast<std::int64_t>(degrees.size()) == c_max) return;
    for (std::int64_t d = min_d; d <= d_max; ++d) {
      degrees.push_back(d);
      self(self, d);
      degrees.pop_back();
    }
  };
  rec(rec, 2);

  std::sort(straight.begin(), straight.end(), [](const MultiDegree& a, const MultiDegree& b) {
    if (a.c() != b.c()) return a.c() < b.c();
    if (a.degrees != b.degrees) return a.degrees < b.degrees;
    return a.n < b.n;
  });
  return straight;
}

std::string to_string(TheoremCase c) {
  switch (c) {
    case TheoremCase::covered_main_theorem: return "covered_main_theorem";
    case TheoremCase::excluded_plane_cubic: return "excluded_plane_cubic";
    case TheoremCase::hyperquadric: return "hyperquadric";
    case TheoremCase::two_quadrics: return "two_quadrics";
    case TheoremCase::open_per_remark: return "open_per_remark";
  }
  return "unknown";
}

Classification classify_theorem_case(const MultiDegree& md) {
  Classification out;
  out.reduced_degree = md.degrees.front();
  out.reduced_count = static_cast<std::int64_t>(
      std::count(md.degrees.begin(), md.degrees.end(), md.degrees.front()));

  const std::int64_t c = md.c();
  if (c == 1 && out.reduced_degree == 3 && md.n == 2) {
    out.kind = TheoremCase::excluded_plane_cubic;
  } else if (out.reduced_degree >= 3) {
    out.kind = TheoremCase::covered_main_theorem;
  } else if (out.reduced_count >= 3) {
    out.kind = TheoremCase::covered_main_theorem;  // all-quadric block of length >= 3
  } else if (out.reduced_count == c) {
    out.kind = (c == 1) ? TheoremCase::hyperquadric : TheoremCase::two_quadrics;
  } else {
    out.kind = TheoremCase::open_per_remark;  // (2, d, ...) or (2, 2, d, ...) with d > 2
  }
  return out;
}

}  // namespace fermatci
