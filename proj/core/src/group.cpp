#include "fermatci/group.hpp"

#include <numeric>

#include "fermatci/errors.hpp"

namespace fermatci {

namespace {

void check_modulus(std::int64_t d) {
  if (d < 2) throw UsageError("modulus must be >= 2");
}

}  // namespace

GroupElement canonicalize(std::int64_t modulus, const ResidueVec& raw) {
  check_modulus(modulus);
  if (raw.empty()) throw UsageError("empty tuple");
  GroupElement g;
  g.modulus = modulus;
  g.entries.resize(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) g.entries[i] = mod_reduce(raw[i] - raw[0], modulus);
  return g;
}

GroupElement identity_element(std::int64_t modulus, std::int64_t n) {
  check_modulus(modulus);
  if (n < 1) throw UsageError("need n >= 1");
  GroupElement g;
  g.modulus = modulus;
  g.entries.assign(static_cast<std::size_t>(n + 1), 0);
  return g;
}

bool is_identity(const GroupElement& g) {
  for (std::int64_t e : g.entries)
    if (e != 0) return false;
  return true;
}

CharacterVec make_character(std::int64_t modulus, const ResidueVec& entries) {
  check_modulus(modulus);
  if (entries.empty()) throw UsageError("empty character tuple");
  CharacterVec chi;
  chi.modulus = modulus;
  chi.entries.resize(entries.size());
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    chi.entries[i] = mod_reduce(entries[i], modulus);
    sum = (sum + chi.entries[i]) % modulus;
  }
  if (sum != 0) throw UsageError("character exponents must sum to 0 mod d");
  return chi;
}

bool is_trivial(const CharacterVec& chi) {
  for (std::int64_t a : chi.entries)
    if (a != 0) return false;
  return true;
}

std::int64_t evaluate_character(const CharacterVec& chi, const GroupElement& g) {
  if (chi.modulus != g.modulus) throw UsageError("character/element modulus mismatch");
  if (chi.entries.size() != g.entries.size()) throw UsageError("character/element length mismatch");
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < chi.entries.size(); ++i)
    acc = (acc + chi.entries[i] * g.entries[i]) % chi.modulus;
  return acc;
}

StarParams star_parameters(std::int64_t n, std::int64_t modulus) {
  check_modulus(modulus);
  if (n < 3) throw UsageError("need n >= 3");
  StarParams p;
  p.k = mod_reduce(-n, modulus);
  p.t = 0;
  while (gcd64(n + p.t, modulus) != 1) ++p.t;  // terminates: gcd(n + t, d) cycles through all residues
  p.s = mod_reduce(p.k + 1 - p.t, modulus);
  return p;
}

std::vector<CharacterVec> separating_characters(std::int64_t n, std::int64_t modulus, const StarParams& p) {
  check_modulus(modulus);
  if (n < 3) throw UsageError("need n >= 3");
  const auto len = static_cast<std::size_t>(n + 1);
  std::vector<CharacterVec> out;
  out.reserve(len);

  ResidueVec chi_k(len, 1);
  chi_k[len - 1] = p.k;
  out.push_back(make_character(modulus, chi_k));

  for (std::size_t i = 0; i + 1 < len; ++i) {
    ResidueVec chi(len, 1);
    chi[i] = p.s;
    chi[len - 1] = p.t;
    out.push_back(make_character(modulus, chi));
  }
  return out;
}

std::vector<CharacterVec> separating_characters(std::int64_t n, std::int64_t modulus) {
  return separating_characters(n, modulus, star_parameters(n, modulus));
}

JointKernelReport joint_kernel_is_diagonal(const std::vector<CharacterVec>& chars) {
  if (chars.empty()) throw UsageError("need at least one character");
  const std::int64_t d = chars.front().modulus;
  const std::size_t len = chars.front().entries.size();
  for (const auto& chi : chars)
    if (chi.modulus != d || chi.entries.size() != len)
      throw UsageError("characters must share modulus and length");

  IntMatrix m(chars.size(), len);
  for (std::size_t i = 0; i < chars.size(); ++i)
    for (std::size_t j = 0; j < len; ++j) m(i, j) = static_cast<long>(chars[i].entries[j]);

  JointKernelReport rep;
  rep.kernel = kernel_mod(m, d);
  // The diagonal lies in the kernel iff every row has zero coordinate sum;
  // check it directly rather than relying on the character invariant.
  rep.contains_diagonal = true;
  for (const auto& chi : chars) {
    std::int64_t sum = 0;
    for (std::int64_t a : chi.entries) sum = (sum + a) % d;
    if (sum != 0) {
      rep.contains_diagonal = false;
      break;
    }
  }
  // Cardinality d plus containment pins the kernel to exactly the diagonal.
  rep.is_diagonal = rep.contains_diagonal && rep.kernel.cardinality == Int(static_cast<long>(d));
  return rep;
}

CharacterVec conjugate_character(const CharacterVec& chi, const Perm& tau) {
  if (static_cast<std::size_t>(tau.size()) != chi.entries.size())
    throw UsageError("permutation size must match character length");
  const Perm inv = tau.inverse();
  ResidueVec out(chi.entries.size());
  for (int i = 0; i < tau.size(); ++i)
    out[static_cast<std::size_t>(i)] = chi.entries[static_cast<std::size_t>(inv(i))];
  return make_character(chi.modulus, out);
}

void for_each_character(std::int64_t modulus, std::int64_t n,
                        const std::function<void(const ResidueVec&)>& fn) {
  check_modulus(modulus);
  if (n < 1) throw UsageError("need n >= 1");
  const auto len = static_cast<std::size_t>(n + 1);
  ResidueVec a(len, 0);
  while (true) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i + 1 < len; ++i) sum += a[i];
    a[len - 1] = mod_reduce(-sum, modulus);
    fn(a);
    // Odometer over the first n coordinates, most significant first.
    std::size_t pos = len - 1;
    while (pos > 0) {
      --pos;
      if (++a[pos] < modulus) break;
      a[pos] = 0;
      if (pos == 0) return;  // wrapped past the most significant digit
    }
  }
}

ResidueVec character_at_index(std::int64_t modulus, std::int64_t n, std::uint64_t index) {
  check_modulus(modulus);
  if (n < 1) throw UsageError("need n >= 1");
  const auto len = static_cast<std::size_t>(n + 1);
  ResidueVec a(len, 0);
  std::int64_t sum = 0;
  for (std::size_t i = len - 1; i-- > 0;) {
    a[i] = static_cast<std::int64_t>(index % static_cast<std::uint64_t>(modulus));
    index /= static_cast<std::uint64_t>(modulus);
    sum += a[i];
  }
  if (index != 0) throw UsageError("character index out of range");
  a[len - 1] = mod_reduce(-sum, modulus);
  return a;
}

}  // namespace fermatci
