#ifndef PNU_SMITH_HPP
#define PNU_SMITH_HPP

#include <cstdint>
#include <cstdlib>
#include <vector>

#include "pnu/common.hpp"

namespace pnu {

namespace detail {

inline std::int64_t checked_addi(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw resource_exceeded("integer overflow in Smith reduction");
  return r;
}

inline std::int64_t checked_muli(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw resource_exceeded("integer overflow in Smith reduction");
  return r;
}

}  // namespace detail

struct SmithResult {
  std::vector<std::int64_t> divisors;  // diagonal, d1 | d2 | ..., all positive
  std::size_t rank = 0;
};

// Elementary divisors by row/column reduction with minimal-pivot selection.
// Entries of the boundary matrices this sees start out in {-4..4}; the
// minimal-pivot strategy keeps growth tame, and all arithmetic is
// overflow-checked.
class SmithSolver {
 public:
  SmithSolver(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  std::int64_t& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

  SmithResult run() {
    SmithResult res;
    std::size_t r = 0;
    std::size_t nmin = std::min(rows_, cols_);
    while (r < nmin) {
      std::size_t pi = 0, pj = 0;
      if (!find_pivot(r, pi, pj)) break;
      swap_rows(r, pi);
      swap_cols(r, pj);
      for (;;) {
        bool again = false;
        for (std::size_t i = r + 1; i < rows_; ++i) {
          if (at(i, r) == 0) continue;
          std::int64_t q = at(i, r) / at(r, r);
          if (q) add_row(i, r, -q);
          if (at(i, r) != 0) {
            swap_rows(i, r);
            again = true;
          }
        }
        for (std::size_t j = r + 1; j < cols_; ++j) {
          if (at(r, j) == 0) continue;
          std::int64_t q = at(r, j) / at(r, r);
          if (q) add_col(j, r, -q);
          if (at(r, j) != 0) {
            swap_cols(j, r);
            again = true;
          }
        }
        if (!again) break;
      }
      // divisibility of the remaining block
      bool redo = false;
      for (std::size_t i = r + 1; i < rows_ && !redo; ++i)
        for (std::size_t j = r + 1; j < cols_ && !redo; ++j)
          if (at(i, j) % at(r, r) != 0) {
            add_row(r, i, 1);
            redo = true;
          }
      if (redo) continue;
      res.divisors.push_back(std::llabs(at(r, r)));
      ++r;
    }
    res.rank = r;
    return res;
  }

 private:
  bool find_pivot(std::size_t r, std::size_t& pi, std::size_t& pj) {
    std::int64_t best = 0;
    for (std::size_t i = r; i < rows_; ++i)
      for (std::size_t j = r; j < cols_; ++j) {
        std::int64_t v = std::llabs(at(i, j));
        if (v != 0 && (best == 0 || v < best)) {
          best = v;
          pi = i;
          pj = j;
          if (v == 1) return true;
        }
      }
    return best != 0;
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
  }
  void add_row(std::size_t dst, std::size_t src, std::int64_t f) {
    for (std::size_t k = 0; k < cols_; ++k)
      at(dst, k) = detail::checked_addi(at(dst, k), detail::checked_muli(f, at(src, k)));
  }
  void add_col(std::size_t dst, std::size_t src, std::int64_t f) {
    for (std::size_t k = 0; k < rows_; ++k)
      at(k, dst) = detail::checked_addi(at(k, dst), detail::checked_muli(f, at(k, src)));
  }

  std::size_t rows_, cols_;
  std::vector<std::int64_t> a_;
};

}  // namespace pnu

#endif  // PNU_SMITH_HPP
