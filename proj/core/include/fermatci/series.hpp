#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fermatci/numeric.hpp"

namespace fermatci {

/// Truncated power series over Q in one variable: coefficients for degrees
/// 0..cap, everything above the cap discarded. All arithmetic is exact.
class Series {
 public:
  explicit Series(std::size_t cap) : c_(cap + 1) {}
  static Series constant(std::size_t cap, const Rat& v) {
    Series s(cap);
    s.c_[0] = v;
    return s;
  }

  std::size_t cap() const { return c_.size() - 1; }
  Rat& operator[](std::size_t i) { return c_[i]; }
  const Rat& operator[](std::size_t i) const { return c_[i]; }

  Series operator+(const Series& o) const;
  Series operator-(const Series& o) const;
  Series operator*(const Series& o) const;
  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);

  /// Multiplicative inverse; requires a nonzero constant term.
  Series inverse() const;

  Series pow(std::int64_t e) const;

  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<Rat> c_;
};

/// exp(k h) truncated: sum_j (k h)^j / j!.
Series exp_series(std::int64_t k, std::size_t cap);

/// The Todd series of a line bundle with first Chern class k h:
/// (k h) / (1 - exp(-k h)) = 1 + kh/2 + (kh)^2/12 - ...
Series todd_line(std::int64_t k, std::size_t cap);

/// (1 + k h)^e for integer e (negative exponents via geometric expansion).
Series geometric_pow(std::int64_t k, std::int64_t e, std::size_t cap);

}  // namespace fermatci
