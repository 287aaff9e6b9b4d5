#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace fermatci {

/// Exact arbitrary-precision integer / rational scalar types.
using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

/// Residues mod d and other small bookkeeping integers.
using ResidueVec = std::vector<std::int64_t>;

/// C(a, b) with the combinatorial convention: 0 whenever b < 0 or a < b
/// (covers negative a for any b >= 0).
Int binomial(std::int64_t a, std::int64_t b);

/// x^e for e >= 0.
Int int_pow(const Int& x, std::int64_t e);

/// Least nonnegative residue of v mod d (d >= 1).
std::int64_t mod_reduce(std::int64_t v, std::int64_t d);

/// gcd(a, d) for a >= 0, d >= 1.
std::int64_t gcd64(std::int64_t a, std::int64_t b);

/// Rational p/q in canonical (reduced, positive denominator) form.
Rat make_rat(std::int64_t num, std::int64_t den = 1);

/// Canonical decimal rendering: "5", "-3", "1/2".
std::string rat_to_string(const Rat& q);

/// Parses "5", "-3", "1/2"; throws UsageError on malformed input or zero
/// denominator.
Rat rat_from_string(const std::string& text);

}  // namespace fermatci
