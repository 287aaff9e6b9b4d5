#include "fermatci/faithful.hpp"

#include <stdexcept>

#include "fermatci/errors.hpp"
#include "fermatci/parallel.hpp"

namespace fermatci {

namespace {

void check_params(std::int64_t n, std::int64_t r, std::int64_t modulus) {
  if (n < 3) throw UsageError("need n >= 3");
  if (r < 2 || r >= n) throw UsageError("need 2 <= r < n");
  if (modulus < 2) throw UsageError("need d >= 2");
}

Int wedge_of(const CharacterVec& chi, std::int64_t n, std::int64_t r) {
  return binomial(eigenspace_dimension(chi), n - r);
}

SeparatingEntry entry_of(const CharacterVec& chi, std::int64_t n, std::int64_t r) {
  SeparatingEntry e;
  e.chi = chi;
  e.eigen_dim = eigenspace_dimension(chi);
  e.wedge_dim = binomial(e.eigen_dim, n - r);
  return e;
}

std::uint64_t checked_pow(std::int64_t base, std::int64_t exp, std::uint64_t limit) {
  std::uint64_t v = 1;
  for (std::int64_t i = 0; i < exp; ++i) {
    v *= static_cast<std::uint64_t>(base);
    if (v > limit) return limit + 1;
  }
  return v;
}

constexpr std::uint64_t kEnumerationLimit = 1'000'000;

}  // namespace

FaithfulnessCertificate quadric_verdict(std::int64_t n, std::int64_t r) {
  check_params(n, r, 2);
  const auto len = static_cast<std::size_t>(n + 1);

  FaithfulnessCertificate cert;
  cert.n = n;
  cert.r = r;
  cert.modulus = 2;
  cert.mode = "quadric";

  if ((n + 1) % 2 == 0 && r == 2) {
    // Pencils of quadrics in odd projective dimension: the lone contributing
    // character is the all-ones tuple and any product of two sign flips acts
    // trivially. Deterministic witness: flips at the two lowest positions
    // available in canonical form.
    cert.verdict = Verdict::not_faithful;
    cert.separating_set.push_back(entry_of(make_character(2, ResidueVec(len, 1)), n, r));
    cert.kernel = joint_kernel_is_diagonal({cert.separating_set.front().chi});
    ResidueVec w(len, 0);
    w[1] = w[2] = 1;
    cert.witness = canonicalize(2, w);
    cert.diagnostics.push_back("odd-dimensional quadric pencil: unique contributing character");
    return cert;
  }

  std::vector<CharacterVec> fam;
  if ((n + 1) % 2 == 0) {
    // r >= 3: characters vanishing at a pair of positions.
    for (std::size_t i = 0; i < len; ++i)
      for (std::size_t j = i + 1; j < len; ++j) {
        ResidueVec chi(len, 1);
        chi[i] = chi[j] = 0;
        fam.push_back(make_character(2, chi));
      }
  } else {
    // n + 1 odd: characters vanishing at a single position.
    for (std::size_t i = 0; i < len; ++i) {
      ResidueVec chi(len, 1);
      chi[i] = 0;
      fam.push_back(make_character(2, chi));
    }
  }
  for (const auto& chi : fam) {
    auto e = entry_of(chi, n, r);
    if (e.wedge_dim == 0) throw CheckFailure("quadric separating character has vanishing wedge dimension");
    cert.separating_set.push_back(std::move(e));
  }
  cert.kernel = joint_kernel_is_diagonal(fam);
  if (!cert.kernel.is_diagonal) throw CheckFailure("quadric separating family has nontrivial joint kernel");
  cert.verdict = Verdict::faithful;
  return cert;
}

FaithfulnessCertificate faithfulness_certificate(std::int64_t n, std::int64_t r, std::int64_t modulus) {
  check_params(n, r, modulus);
  if (modulus == 2) return quadric_verdict(n, r);

  FaithfulnessCertificate cert;
  cert.n = n;
  cert.r = r;
  cert.modulus = modulus;
  cert.mode = "star";

  const StarParams minimal = star_parameters(n, modulus);

  // Scan (s, t) pairs satisfying the defining congruences in ascending t; the
  // first admissible t is exactly the minimal-t choice of star_parameters.
  for (std::int64_t t = 0; t < modulus; ++t) {
    if (gcd64(n + t, modulus) != 1) continue;
    StarParams p;
    p.k = minimal.k;
    p.t = t;
    p.s = mod_reduce(p.k + 1 - t, modulus);

    const std::vector<CharacterVec> fam = separating_characters(n, modulus, p);
    std::vector<SeparatingEntry> entries;
    bool all_positive = true;
    for (const auto& chi : fam) {
      auto e = entry_of(chi, n, r);
      all_positive = all_positive && e.wedge_dim > 0;
      entries.push_back(std::move(e));
    }
    if (!all_positive) continue;

    cert.star = p;
    cert.separating_set = std::move(entries);
    if (!(p == minimal))
      cert.diagnostics.push_back(
          "minimal-t separating parameters give a vanishing wedge dimension; using t = " +
          std::to_string(p.t) + ", s = " + std::to_string(p.s));
    break;
  }
  if (!cert.star)
    throw CheckFailure("no (s, t) parameter choice yields all-positive wedge dimensions");

  if (n == 3 && r == 2)
    cert.diagnostics.push_back(
        "n = 3 pencil subcase: wedge positivity holds without requiring s, t nonzero");

  std::vector<CharacterVec> fam;
  fam.reserve(cert.separating_set.size());
  for (const auto& e : cert.separating_set) fam.push_back(e.chi);
  cert.kernel = joint_kernel_is_diagonal(fam);
  if (!cert.kernel.is_diagonal)
    throw CheckFailure("separating family has joint kernel larger than the diagonal");

  cert.verdict = Verdict::faithful;
  return cert;
}

BruteForceResult brute_force_faithful(std::int64_t n, std::int64_t r, std::int64_t modulus,
                                      int workers) {
  check_params(n, r, modulus);
  const std::uint64_t count = checked_pow(modulus, n, kEnumerationLimit);
  if (count > kEnumerationLimit)
    throw UsageError("d^n exceeds the enumeration bound; use the certificate path");

  // Characters with nonzero wedge dimension, gathered without any normal-form
  // machinery so this stays an independent oracle.
  const std::int64_t wedge_index = n - r;
  std::vector<ResidueVec> contributing;
  for_each_character(modulus, n, [&](const ResidueVec& a) {
    std::int64_t nonzero = 0;
    for (std::int64_t v : a) nonzero += v != 0;
    if (nonzero - 2 >= wedge_index) contributing.push_back(a);
  });

  BruteForceResult out;
  out.contributing_characters = static_cast<std::int64_t>(contributing.size());

  const auto len = static_cast<std::size_t>(n + 1);
  if (workers < 1) workers = 1;
  std::vector<std::uint64_t> found(static_cast<std::size_t>(workers), count);

  // Group elements in canonical form are (0, g_1, ..., g_n); enumerate the
  // free coordinates as base-d digits of the element index.
  parallel_chunks(count, workers, [&](int chunk, std::size_t begin, std::size_t end) {
    ResidueVec g(len, 0);
    for (std::size_t idx = begin; idx < end; ++idx) {
      std::uint64_t rest = idx;
      for (std::size_t i = len; i-- > 1;) {
        g[i] = static_cast<std::int64_t>(rest % static_cast<std::uint64_t>(modulus));
        rest /= static_cast<std::uint64_t>(modulus);
      }
      if (idx == 0) continue;  // identity
      bool trivial_action = true;
      for (const auto& a : contributing) {
        std::int64_t acc = 0;
        for (std::size_t i = 1; i < len; ++i) acc += a[i] * g[i];
        if (acc % modulus != 0) {
          trivial_action = false;
          break;
        }
      }
      if (trivial_action) {
        found[static_cast<std::size_t>(chunk)] = idx;
        return;  // chunks scan ascending; the first hit is chunk-minimal
      }
    }
  });

  std::uint64_t best = count;
  for (std::uint64_t f : found) best = std::min(best, f);
  if (best < count) {
    out.verdict = Verdict::not_faithful;
    ResidueVec g(len, 0);
    std::uint64_t rest = best;
    for (std::size_t i = len; i-- > 1;) {
      g[i] = static_cast<std::int64_t>(rest % static_cast<std::uint64_t>(modulus));
      rest /= static_cast<std::uint64_t>(modulus);
    }
    out.witness = canonicalize(modulus, g);
  }
  return out;
}

CharacterVec permutation_witness(std::int64_t n, std::int64_t r, std::int64_t modulus,
                                 const Perm& tau) {
  check_params(n, r, modulus);
  if (tau.size() != n + 1) throw UsageError("permutation size must be n + 1");
  if (tau.is_identity()) throw UsageError("identity permutation moves no character");
  if (checked_pow(modulus, n, kEnumerationLimit) > kEnumerationLimit)
    throw UsageError("d^n exceeds the enumeration bound");

  std::optional<CharacterVec> hit;
  for_each_character(modulus, n, [&](const ResidueVec& a) {
    if (hit) return;
    CharacterVec chi;
    chi.modulus = modulus;
    chi.entries = a;
    if (is_trivial(chi)) return;
    if (wedge_of(chi, n, r) == 0) return;
    if (!(conjugate_character(chi, tau) == chi)) hit = chi;
  });
  if (!hit) throw CheckFailure("no contributing character is moved by the permutation");
  return *hit;
}

void validate_certificate(const FaithfulnessCertificate& cert) {
  if (cert.verdict == Verdict::faithful) {
    if (cert.separating_set.empty()) throw std::logic_error("faithful certificate without characters");
    for (const auto& e : cert.separating_set) {
      if (e.wedge_dim <= 0) throw std::logic_error("faithful certificate lists a zero-wedge character");
      if (!(wedge_of(e.chi, cert.n, cert.r) == e.wedge_dim))
        throw std::logic_error("certificate wedge dimension is stale");
    }
    std::vector<CharacterVec> fam;
    for (const auto& e : cert.separating_set) fam.push_back(e.chi);
    if (!joint_kernel_is_diagonal(fam).is_diagonal)
      throw std::logic_error("faithful certificate kernel is not the diagonal");
    return;
  }
  if (!cert.witness) throw std::logic_error("not_faithful certificate without witness");
  if (is_identity(*cert.witness)) throw std::logic_error("witness is the identity");
  if (checked_pow(cert.modulus, cert.n, kEnumerationLimit) > kEnumerationLimit)
    throw std::logic_error("certificate validation beyond enumeration bound");
  for_each_character(cert.modulus, cert.n, [&](const ResidueVec& a) {
    CharacterVec chi;
    chi.modulus = cert.modulus;
    chi.entries = a;
    if (wedge_of(chi, cert.n, cert.r) == 0) return;
    if (evaluate_character(chi, *cert.witness) != 0)
      throw std::logic_error("witness is detected by a contributing character");
  });
}

}  // namespace fermatci
