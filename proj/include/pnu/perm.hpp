#ifndef PNU_PERM_HPP
#define PNU_PERM_HPP

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "pnu/common.hpp"

namespace pnu {

// Permutation of {0..n-1} stored as its image array.  Products compose left
// to right: (a*b)(p) = b(a(p)), matching right multiplication in coset tables.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::size_t n) : im_(n) {
    std::iota(im_.begin(), im_.end(), 0u);
  }
  explicit Perm(std::vector<std::uint32_t> images) : im_(std::move(images)) {
#ifndef NDEBUG
    std::vector<bool> seen(im_.size(), false);
    for (auto v : im_) {
      PNU_CHECK(v < im_.size() && !seen[v], "permutation image is not a bijection");
      seen[v] = true;
    }
#endif
  }

  static Perm identity(std::size_t n) { return Perm(n); }

  std::size_t degree() const { return im_.size(); }
  std::uint32_t operator[](std::size_t p) const { return im_[p]; }
  const std::vector<std::uint32_t>& images() const { return im_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < im_.size(); ++i)
      if (im_[i] != i) return false;
    return true;
  }

  bool operator==(const Perm&) const = default;

  Perm operator*(const Perm& o) const {
    PNU_CHECK(degree() == o.degree(), "permutation degrees differ");
    Perm r;
    r.im_.resize(im_.size());
    for (std::size_t i = 0; i < im_.size(); ++i) r.im_[i] = o.im_[im_[i]];
    return r;
  }

  Perm inverse() const {
    Perm r;
    r.im_.resize(im_.size());
    for (std::size_t i = 0; i < im_.size(); ++i) r.im_[im_[i]] = static_cast<std::uint32_t>(i);
    return r;
  }

  // Smallest point moved, or degree() if identity.
  std::size_t first_moved() const {
    for (std::size_t i = 0; i < im_.size(); ++i)
      if (im_[i] != i) return i;
    return im_.size();
  }

  std::uint64_t order() const {
    std::vector<bool> seen(im_.size(), false);
    std::uint64_t ord = 1;
    for (std::size_t i = 0; i < im_.size(); ++i) {
      if (seen[i]) continue;
      std::uint64_t len = 0;
      std::size_t j = i;
      while (!seen[j]) {
        seen[j] = true;
        j = im_[j];
        ++len;
      }
      ord = std::lcm(ord, len);
    }
    return ord;
  }

  // Cycle notation on 1-based points, identity prints as "()".
  std::string to_cycles() const {
    std::string s;
    std::vector<bool> seen(im_.size(), false);
    for (std::size_t i = 0; i < im_.size(); ++i) {
      if (seen[i] || im_[i] == i) continue;
      s += "(";
      std::size_t j = i;
      bool first = true;
      while (!seen[j]) {
        seen[j] = true;
        if (!first) s += " ";
        s += std::to_string(j + 1);
        first = false;
        j = im_[j];
      }
      s += ")";
    }
    return s.empty() ? "()" : s;
  }

  std::uint64_t hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto v : im_) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }

 private:
  std::vector<std::uint32_t> im_;
};

}  // namespace pnu

#endif  // PNU_PERM_HPP
