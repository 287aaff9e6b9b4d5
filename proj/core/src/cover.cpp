#include "fermatci/cover.hpp"

#include <stdexcept>

#include "fermatci/errors.hpp"
#include "fermatci/parallel.hpp"

namespace fermatci {

BranchData branch_data(const CharacterVec& chi) {
  if (is_trivial(chi)) throw UsageError("trivial character has no cover");
  std::int64_t g0 = chi.modulus;
  for (std::int64_t a : chi.entries) g0 = gcd64(g0, a);
  BranchData b;
  b.degree = chi.modulus / g0;
  b.exponents.resize(chi.entries.size());
  for (std::size_t i = 0; i < chi.entries.size(); ++i) b.exponents[i] = chi.entries[i] / g0;
  std::int64_t sum = 0;
  for (std::int64_t e : b.exponents) sum = (sum + e) % b.degree;
  b.unbranched_at_infinity = (sum == 0);
  return b;
}

std::int64_t genus_riemann_hurwitz(const BranchData& b) {
  const std::int64_t e = b.degree;
  if (e < 2) throw UsageError("covering degree must be >= 2");
  std::int64_t local = 0;
  for (std::int64_t bi : b.exponents) {
    if (bi == 0) continue;  // unbranched coordinate, zero local term
    local += e - gcd64(bi, e);
  }
  const std::int64_t twog = -2 * e + local + 2;  // 2g
  if (twog % 2 != 0 || twog < 0) throw std::logic_error("Riemann-Hurwitz count is not a genus");
  return twog / 2;
}

std::int64_t eigenspace_dimension(const CharacterVec& chi) {
  std::int64_t count = 0;
  for (std::int64_t a : chi.entries)
    if (a != 0) ++count;
  return count >= 2 ? count - 2 : 0;
}

CoverSummary cover_summary(const CharacterVec& chi) {
  const BranchData b = branch_data(chi);
  CoverSummary s;
  s.genus = genus_riemann_hurwitz(b);
  s.eigen_dim = eigenspace_dimension(chi);
  for (std::int64_t a : chi.entries)
    if (a != 0) ++s.branch_count;

  const std::int64_t e = b.degree;
  std::int64_t variant_local = 0;
  for (std::int64_t bi : b.exponents) {
    if (bi == 0) continue;
    variant_local += bi == 1 ? e - 1 : e / gcd64(bi, e);
  }
  const std::int64_t twog = -2 * e + variant_local + 2;
  if (twog >= 0 && twog % 2 == 0) s.display_variant_genus = twog / 2;
  s.display_variant_matches = s.display_variant_genus.has_value() && *s.display_variant_genus == s.genus;
  return s;
}

Decomposition primitive_decomposition(std::int64_t n, std::int64_t r, std::int64_t modulus,
                                      int workers) {
  if (n < 3) throw UsageError("need n >= 3");
  if (r < 2 || r >= n) throw UsageError("need 2 <= r < n");
  if (modulus < 2) throw UsageError("need d >= 2");

  Decomposition out;
  out.n = n;
  out.r = r;
  out.modulus = modulus;

  std::uint64_t total_chars = 1;
  for (std::int64_t i = 0; i < n; ++i) total_chars *= static_cast<std::uint64_t>(modulus);

  const std::int64_t wedge_index = n - r;
  const auto len = static_cast<std::size_t>(n + 1);

  if (workers < 1) workers = 1;
  std::vector<std::vector<DecompEntry>> chunk_entries(static_cast<std::size_t>(workers));
  std::vector<Int> chunk_totals(static_cast<std::size_t>(workers), Int(0));

  parallel_chunks(total_chars, workers, [&](int chunk, std::size_t begin, std::size_t end) {
    if (begin == end) return;
    auto& entries = chunk_entries[static_cast<std::size_t>(chunk)];
    auto& total = chunk_totals[static_cast<std::size_t>(chunk)];
    ResidueVec a = character_at_index(modulus, n, begin);
    for (std::size_t idx = begin; idx < end; ++idx) {
      std::int64_t nonzero = 0;
      for (std::int64_t v : a) nonzero += v != 0;
      const std::int64_t eigen = nonzero >= 2 ? nonzero - 2 : 0;
      if (eigen >= wedge_index) {
        DecompEntry e;
        e.chi = a;
        e.eigen_dim = eigen;
        e.wedge_dim = binomial(eigen, wedge_index);
        total += e.wedge_dim;
        entries.push_back(std::move(e));
      }
      // Advance the lexicographic odometer (free coordinates 0..n-1, then
      // recompute the dependent last coordinate).
      std::size_t pos = len - 1;
      while (pos > 0) {
        --pos;
        if (++a[pos] < modulus) break;
        a[pos] = 0;
      }
      std::int64_t sum = 0;
      for (std::size_t i = 0; i + 1 < len; ++i) sum += a[i];
      a[len - 1] = mod_reduce(-sum, modulus);
    }
  });

  for (std::size_t c = 0; c < chunk_entries.size(); ++c) {
    out.total += chunk_totals[c];
    for (auto& e : chunk_entries[c]) out.entries.push_back(std::move(e));
  }
  return out;
}

}  // namespace fermatci
