#include "fermatci/series.hpp"

#include "fermatci/errors.hpp"

namespace fermatci {

namespace {

void check_caps(const Series& a, const Series& b) {
  if (a.cap() != b.cap()) throw UsageError("series truncation caps differ");
}

}  // namespace

Series Series::operator+(const Series& o) const {
  check_caps(*this, o);
  Series out(cap());
  for (std::size_t i = 0; i <= cap(); ++i) out[i] = c_[i] + o[i];
  return out;
}

Series Series::operator-(const Series& o) const {
  check_caps(*this, o);
  Series out(cap());
  for (std::size_t i = 0; i <= cap(); ++i) out[i] = c_[i] - o[i];
  return out;
}

Series& Series::operator+=(const Series& o) {
  check_caps(*this, o);
  for (std::size_t i = 0; i <= cap(); ++i) c_[i] += o[i];
  return *this;
}

Series& Series::operator-=(const Series& o) {
  check_caps(*this, o);
  for (std::size_t i = 0; i <= cap(); ++i) c_[i] -= o[i];
  return *this;
}

Series Series::operator*(const Series& o) const {
  check_caps(*this, o);
  Series out(cap());
  for (std::size_t i = 0; i <= cap(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= cap(); ++j) {
      if (o[j] == 0) continue;
      out[i + j] += c_[i] * o[j];
    }
  }
  return out;
}

Series Series::inverse() const {
  if (c_[0] == 0) throw UsageError("series with zero constant term has no inverse");
  Series out(cap());
  out[0] = 1 / c_[0];
  for (std::size_t k = 1; k <= cap(); ++k) {
    Rat acc;
    for (std::size_t j = 1; j <= k; ++j) acc += c_[j] * out[k - j];
    out[k] = -acc / c_[0];
  }
  return out;
}

Series Series::pow(std::int64_t e) const {
  if (e < 0) throw UsageError("negative power of a series; invert first");
  Series out = Series::constant(cap(), 1);
  Series base = *this;
  while (e > 0) {
    if (e & 1) out = out * base;
    base = base * base;
    e >>= 1;
  }
  return out;
}

Series exp_series(std::int64_t k, std::size_t cap) {
  Series s(cap);
  Rat term = 1;
  s[0] = 1;
  for (std::size_t j = 1; j <= cap; ++j) {
    term *= make_rat(k, static_cast<std::int64_t>(j));
    s[j] = term;
  }
  return s;
}

Series todd_line(std::int64_t k, std::size_t cap) {
  // (1 - exp(-k h)) / (k h) = sum_j (-k)^j h^j / (j+1)! ; invert it.
  Series denom(cap);
  Rat term = 1;
  denom[0] = 1;
  for (std::size_t j = 1; j <= cap; ++j) {
    term *= make_rat(-k, static_cast<std::int64_t>(j + 1));
    denom[j] = term;
  }
  return denom.inverse();
}

Series geometric_pow(std::int64_t k, std::int64_t e, std::size_t cap) {
  Series base(cap);
  base[0] = 1;
  if (cap >= 1) base[1] = make_rat(k);
  if (e >= 0) return base.pow(e);
  return base.inverse().pow(-e);
}

}  // namespace fermatci
