#ifndef PNU_COMMON_HPP
#define PNU_COMMON_HPP

#include <cstdint>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace pnu {

// Hard ceiling for element-by-element work (exponents, omega, oracles).
// Above it operations fail loudly instead of approximating.
inline constexpr std::uint64_t kElementThreshold = 10'000'000;

// Default live-coset bound for Todd-Coxeter enumeration.
inline constexpr std::uint64_t kDefaultMaxCosets = 5'000'000;

struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Enumeration or element sweep would pass its configured bound.
struct resource_exceeded : error {
  explicit resource_exceeded(const std::string& what) : error(what) {}
};

// A subgroup handed to a quotient/embedding was not normal; carries a witness.
struct not_normal : error {
  explicit not_normal(const std::string& what) : error(what) {}
};

// An internal consistency assertion failed (always fatal, never masked).
struct invariant_violation : error {
  explicit invariant_violation(const std::string& what) : error(what) {}
};

struct parse_error : error {
  int line = 0;
  int column = 0;
  parse_error(const std::string& what, int line_, int col_)
      : error(what + " (line " + std::to_string(line_) + ", column " +
              std::to_string(col_) + ")"),
        line(line_),
        column(col_) {}
};

#define PNU_CHECK(cond, msg)                         \
  do {                                               \
    if (!(cond)) throw ::pnu::invariant_violation(msg); \
  } while (0)

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    throw error("integer overflow in exact arithmetic");
  return a * b;
}

inline std::uint64_t checked_pow(std::uint64_t base, std::uint64_t e) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) r = checked_mul(r, base);
  return r;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Writes n = p^k; returns false if n is not a power of the prime p.
inline bool prime_power_log(std::uint64_t n, std::uint64_t p, unsigned& k) {
  k = 0;
  if (n == 0) return false;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return n == 1;
}

inline std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// Fixed-size bit set over {0..n-1}; the workhorse for element sets of
// subgroups living inside one regular representation.
class DynBitset {
 public:
  DynBitset() = default;
  explicit DynBitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }

  bool test(std::size_t i) const {
    return (w_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i) { w_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }

  bool operator==(const DynBitset& o) const { return n_ == o.n_ && w_ == o.w_; }

  bool is_subset_of(const DynBitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  DynBitset intersect(const DynBitset& o) const {
    DynBitset r(n_);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
    return r;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace pnu

#endif  // PNU_COMMON_HPP
