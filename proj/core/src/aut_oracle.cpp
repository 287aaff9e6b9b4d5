#include "fermatci/aut_oracle.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "fermatci/errors.hpp"
#include "fermatci/linalg.hpp"

namespace fermatci {

namespace {

void check_distinct(const RatVec& lambdas) {
  for (std::size_t i = 0; i < lambdas.size(); ++i)
    for (std::size_t j = i + 1; j < lambdas.size(); ++j)
      if (lambdas[i] == lambdas[j]) throw UsageError("coefficients must be pairwise distinct");
}

/// The r x (n+1) matrix with rows (lambda_0^j, ..., lambda_n^j), j = 0..r-1.
RatMatrix vandermonde_rows(const RatVec& lambdas, std::int64_t r) {
  RatMatrix v(static_cast<std::size_t>(r), lambdas.size());
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    Rat p = 1;
    for (std::size_t j = 0; j < static_cast<std::size_t>(r); ++j) {
      v(j, i) = p;
      p *= lambdas[i];
    }
  }
  return v;
}

}  // namespace

FermatFamily make_family(std::int64_t n, std::int64_t r, std::int64_t degree, RatVec lambdas) {
  if (n < 3) throw UsageError("need n >= 3");
  if (r < 2 || r >= n) throw UsageError("need 2 <= r < n");
  if (degree < 2) throw UsageError("need d >= 2");
  if (lambdas.size() != static_cast<std::size_t>(n + 1)) throw UsageError("need n + 1 coefficients");
  check_distinct(lambdas);
  FermatFamily f;
  f.n = n;
  f.r = r;
  f.degree = degree;
  f.lambdas = std::move(lambdas);
  return f;
}

RatVec sample_lambda_canonical(std::int64_t n) {
  if (n < 1) throw UsageError("need n >= 1");
  RatVec out;
  out.reserve(static_cast<std::size_t>(n + 1));
  for (std::int64_t i = 0; i <= n; ++i) out.push_back(make_rat(i));
  return out;
}

RatVec sample_lambda_seeded(std::int64_t n, std::uint64_t seed, std::int64_t height) {
  if (n < 1) throw UsageError("need n >= 1");
  if (height < 1) throw UsageError("need height >= 1");
  std::mt19937_64 eng(seed);
  const auto span = static_cast<std::uint64_t>(2 * height + 1);
  RatVec out;
  out.reserve(static_cast<std::size_t>(n + 1));
  // Collisions trigger a fresh draw. The cap only guards against heights so
  // small that n + 1 distinct values cannot exist (the loop would never end).
  std::int64_t draws_left = 256 * (n + 1);
  while (out.size() < static_cast<std::size_t>(n + 1)) {
    if (draws_left-- == 0) throw UsageError("height too small to produce n + 1 distinct coefficients");
    const auto num = static_cast<std::int64_t>(eng() % span) - height;
    const auto den = static_cast<std::int64_t>(eng() % static_cast<std::uint64_t>(height)) + 1;
    Rat candidate = make_rat(num, den);
    if (std::find(out.begin(), out.end(), candidate) == out.end()) out.push_back(std::move(candidate));
  }
  return out;
}

bool interpolation_exists(const RatVec& lambdas, const Perm& tau, std::int64_t r) {
  const auto n = static_cast<std::int64_t>(lambdas.size()) - 1;
  if (r <= 1 || r >= n) throw UsageError("need 1 < r < n");
  if (tau.size() != n + 1) throw UsageError("permutation size must be n + 1");
  check_distinct(lambdas);

  RatMatrix v(lambdas.size(), static_cast<std::size_t>(r));
  RatMatrix augmented(lambdas.size(), static_cast<std::size_t>(r) + 1);
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    Rat p = 1;
    for (std::size_t j = 0; j < static_cast<std::size_t>(r); ++j) {
      v(i, j) = p;
      augmented(i, j) = p;
      p *= lambdas[i];
    }
    augmented(i, static_cast<std::size_t>(r)) = lambdas[static_cast<std::size_t>(tau(static_cast<int>(i)))];
  }
  return rank(augmented) == rank(v);
}

PermSolveReport automorphisms_for_permutation(const FermatFamily& f, const Perm& tau) {
  if (tau.size() != f.n + 1) throw UsageError("permutation size must be n + 1");
  const auto len = static_cast<std::size_t>(f.n + 1);

  const RatMatrix v = vandermonde_rows(f.lambdas, f.r);
  const std::vector<RatVec> u_basis = rational_nullspace(v);

  PermSolveReport rep;
  rep.tau = tau;
  if (u_basis.empty()) throw std::logic_error("defining rows span everything; no equations left");

  // Constraints on nu_i := mu_{tau(i)}: for every u in the nullspace of V and
  // every row index j: sum_i lambda_{tau(i)}^j u_i nu_i = 0.
  RatMatrix cons(u_basis.size() * static_cast<std::size_t>(f.r), len);
  std::size_t row = 0;
  for (const auto& u : u_basis) {
    for (std::size_t j = 0; j < static_cast<std::size_t>(f.r); ++j, ++row) {
      for (std::size_t i = 0; i < len; ++i) {
        const auto ti = static_cast<std::size_t>(tau(static_cast<int>(i)));
        cons(row, i) = v(j, ti) * u[i];
      }
    }
  }

  const std::vector<RatVec> nu_basis = rational_nullspace(cons);
  rep.solution_dim = static_cast<std::int64_t>(nu_basis.size());
  if (nu_basis.empty()) return rep;

  // Transport back: mu_{tau(i)} = nu_i.
  std::vector<RatVec> mu_basis;
  mu_basis.reserve(nu_basis.size());
  for (const auto& nu : nu_basis) {
    RatVec mu(len);
    for (std::size_t i = 0; i < len; ++i) mu[static_cast<std::size_t>(tau(static_cast<int>(i)))] = nu[i];
    mu_basis.push_back(std::move(mu));
  }

  for (std::size_t i = 0; i < len; ++i) {
    bool hit = false;
    for (const auto& mu : mu_basis) hit = hit || mu[i] != 0;
    if (!hit) return rep;  // coordinate functional vanishes identically
  }
  rep.admissible = true;

  // Deterministic all-nonzero sample: combine the basis with weights t^j; each
  // coordinate is a nonzero polynomial in t, so small t suffices.
  const std::int64_t t_cap = static_cast<std::int64_t>(len) * rep.solution_dim + 1;
  for (std::int64_t t = 1; t <= t_cap; ++t) {
    RatVec candidate(len);
    Rat w = 1;
    for (const auto& mu : mu_basis) {
      for (std::size_t i = 0; i < len; ++i) candidate[i] += w * mu[i];
      w *= t;
    }
    bool all_nonzero = true;
    for (const auto& x : candidate) all_nonzero = all_nonzero && x != 0;
    if (all_nonzero) {
      rep.sample_mu = std::move(candidate);
      break;
    }
  }
  if (!rep.sample_mu) throw std::logic_error("no all-nonzero combination found below the bound");

  // Exact verification that V diag(mu) P_tau has the same rowspace as V.
  RatMatrix w(static_cast<std::size_t>(f.r), len);
  RatMatrix stacked(2 * static_cast<std::size_t>(f.r), len);
  for (std::size_t j = 0; j < static_cast<std::size_t>(f.r); ++j)
    for (std::size_t i = 0; i < len; ++i) {
      const auto ti = static_cast<std::size_t>(tau(static_cast<int>(i)));
      w(j, i) = (*rep.sample_mu)[ti] * v(j, ti);
      stacked(j, i) = v(j, i);
      stacked(static_cast<std::size_t>(f.r) + j, i) = w(j, i);
    }
  const std::size_t rv = rank(v);
  if (rank(w) != rv || rank(stacked) != rv)
    throw std::logic_error("admissible scaling does not preserve the equation span");

  return rep;
}

AutOrderReport aut_group_order(const FermatFamily& f) {
  std::uint64_t factorial = 1;
  for (std::int64_t i = 2; i <= f.n + 1; ++i) {
    factorial *= static_cast<std::uint64_t>(i);
    if (factorial > 1'000'000) throw UsageError("(n+1)! exceeds the permutation scan bound");
  }

  AutOrderReport out;
  out.family = f;
  Perm tau = Perm::identity(static_cast<int>(f.n + 1));
  bool more = true;
  while (more) {
    ++out.permutations_scanned;
    PermSolveReport rep = automorphisms_for_permutation(f, tau);
    if (rep.admissible) out.admissible.push_back(std::move(rep));
    more = tau.next();
  }

  out.generic = out.admissible.size() == 1 && out.admissible.front().tau.is_identity() &&
                out.admissible.front().solution_dim == 1;
  if (out.generic) out.order = int_pow(Int(static_cast<long>(f.degree)), f.n);
  return out;
}

}  // namespace fermatci
