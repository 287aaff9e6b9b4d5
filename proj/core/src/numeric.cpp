#include "fermatci/numeric.hpp"

#include <numeric>

#include "fermatci/errors.hpp"

namespace fermatci {

Int binomial(std::int64_t a, std::int64_t b) {
  if (b < 0 || a < b) return Int(0);
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return out;
}

Int int_pow(const Int& x, std::int64_t e) {
  if (e < 0) throw UsageError("int_pow: negative exponent");
  Int out;
  mpz_pow_ui(out.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(e));
  return out;
}

std::int64_t mod_reduce(std::int64_t v, std::int64_t d) {
  std::int64_t r = v % d;
  return r < 0 ? r + d : r;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

Rat make_rat(std::int64_t num, std::int64_t den) {
  if (den == 0) throw UsageError("rational with zero denominator");
  Rat q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& q) { return q.get_str(); }

Rat rat_from_string(const std::string& text) {
  Rat q;
  if (text.empty() || q.set_str(text, 10) != 0)
    throw UsageError("malformed rational: '" + text + "'");
  if (q.get_den() == 0) throw UsageError("rational with zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

}  // namespace fermatci
