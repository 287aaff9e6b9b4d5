#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "fermatci/errors.hpp"

namespace fermatci {

/// Permutation of {0, ..., n-1} stored as an image list: images()[i] = tau(i).
///
/// Composition convention, fixed project-wide: compose(sigma, tau) applies tau
/// first, i.e. compose(sigma, tau)(i) = sigma(tau(i)).
class Perm {
 public:
  explicit Perm(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
      if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[v])
        throw UsageError("permutation image list is not a bijection");
      seen[v] = true;
    }
  }

  static Perm identity(int n) {
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 0);
    return Perm(std::move(im));
  }

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const {
    for (int i = 0; i < size(); ++i)
      if (images_[static_cast<std::size_t>(i)] != i) return false;
    return true;
  }

  Perm inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 0; i < size(); ++i)
      inv[static_cast<std::size_t>(images_[static_cast<std::size_t>(i)])] = i;
    return Perm(std::move(inv));
  }

  /// Advances to the next permutation in lexicographic order on image lists;
  /// returns false (and wraps to identity) after the last one.
  bool next() { return std::next_permutation(images_.begin(), images_.end()); }

  /// "(0 1)(2 3)" in cycle notation; "id" for the identity.
  std::string cycle_string() const {
    if (is_identity()) return "id";
    std::string out;
    std::vector<bool> done(images_.size(), false);
    for (int i = 0; i < size(); ++i) {
      if (done[static_cast<std::size_t>(i)] || images_[static_cast<std::size_t>(i)] == i) continue;
      out += "(";
      int j = i;
      bool first = true;
      while (!done[static_cast<std::size_t>(j)]) {
        done[static_cast<std::size_t>(j)] = true;
        if (!first) out += " ";
        out += std::to_string(j);
        first = false;
        j = images_[static_cast<std::size_t>(j)];
      }
      out += ")";
    }
    return out;
  }

  friend bool operator==(const Perm& a, const Perm& b) = default;

 private:
  std::vector<int> images_;
};

/// (sigma ∘ tau): tau applied first.
inline Perm compose(const Perm& sigma, const Perm& tau) {
  if (sigma.size() != tau.size()) throw UsageError("composing permutations of different sizes");
  std::vector<int> im(static_cast<std::size_t>(sigma.size()));
  for (int i = 0; i < sigma.size(); ++i) im[static_cast<std::size_t>(i)] = sigma(tau(i));
  return Perm(std::move(im));
}

}  // namespace fermatci
