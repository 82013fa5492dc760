#ifndef PNU_CAYLEY_HPP
#define PNU_CAYLEY_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <vector>

#include "pnu/common.hpp"
#include "pnu/coset_table.hpp"
#include "pnu/perm.hpp"
#include "pnu/word.hpp"

namespace pnu {

// Right regular action of a finite group on itself, extracted from a complete
// coset table over the trivial subgroup.  Points are group elements, point 0
// the identity.  A BFS spanning tree of the Cayley graph gives every element
// a canonical word in the defining generators, so arbitrary products and
// inverses cost O(word length) table lookups.  Every permutation-group
// computation inside one enumerated group runs through this structure.
class CayleyContext {
 public:
  explicit CayleyContext(const CosetTable& table) {
    PNU_CHECK(table.status() == CosetTable::Status::Complete,
              "Cayley context needs a complete table");
    n_ = table.live_count();
    ngens_ = table.ngens();
    act_.assign(static_cast<std::size_t>(2 * ngens_) * n_, 0);
    for (std::uint32_t c = 1; c <= n_; ++c)
      for (int col = 0; col < 2 * ngens_; ++col)
        act_[static_cast<std::size_t>(col) * n_ + (c - 1)] = table.apply_col(c, col) - 1;
    build_tree_();
  }

  // From forward generator actions on points 0..n-1 with identity at 0
  // (e.g. the translation action of a group on the cosets of a normal
  // subgroup, which is again regular).
  CayleyContext(std::uint32_t n, const std::vector<std::vector<std::uint32_t>>& fwd)
      : n_(n), ngens_(static_cast<int>(fwd.size())) {
    act_.assign(static_cast<std::size_t>(2 * ngens_) * n_, 0);
    for (int g = 0; g < ngens_; ++g) {
      PNU_CHECK(fwd[static_cast<std::size_t>(g)].size() == n_, "action array size mismatch");
      std::vector<bool> hit(n_, false);
      for (std::uint32_t p = 0; p < n_; ++p) {
        std::uint32_t q = fwd[static_cast<std::size_t>(g)][p];
        PNU_CHECK(q < n_ && !hit[q], "generator action is not a permutation");
        hit[q] = true;
        act_[static_cast<std::size_t>(2 * g) * n_ + p] = q;
        act_[static_cast<std::size_t>(2 * g + 1) * n_ + q] = p;
      }
    }
    build_tree_();
    PNU_CHECK(reached_all_, "action is not transitive from the identity point");
  }

  std::uint32_t size() const { return n_; }
  int ngens() const { return ngens_; }

  // p * (generator column col)
  std::uint32_t act(std::uint32_t p, int col) const {
    return act_[static_cast<std::size_t>(col) * n_ + p];
  }

  static int gen_col(int g) { return 2 * g; }
  static int inv_col(int col) { return col ^ 1; }

  std::uint32_t gen_point(int g) const { return act(0, gen_col(g)); }

  std::uint32_t parent_of(std::uint32_t p) const { return parent_[p]; }
  std::uint16_t via_of(std::uint32_t p) const { return via_[p]; }
  std::uint16_t depth_of(std::uint32_t p) const { return depth_[p]; }

  // BFS word of element q as generator columns, identity-to-q order.
  void word_of(std::uint32_t q, std::vector<std::uint16_t>& out) const {
    out.clear();
    while (q != 0) {
      out.push_back(via_[q]);
      q = parent_[q];
    }
    std::reverse(out.begin(), out.end());
  }

  Word word_of(std::uint32_t q) const {
    std::vector<std::uint16_t> cols;
    word_of(q, cols);
    Word w;
    for (auto col : cols)
      w = w * Word::gen(col / 2, (col & 1) ? -1 : 1);
    return w;
  }

  // Element product p * q, walking q's tree word from p.
  std::uint32_t mult(std::uint32_t p, std::uint32_t q) const {
    thread_local std::vector<std::uint16_t> cols;
    cols.clear();
    while (q != 0) {
      cols.push_back(via_[q]);
      q = parent_[q];
    }
    for (std::size_t i = cols.size(); i-- > 0;) p = act(p, cols[i]);
    return p;
  }

  std::uint32_t inv(std::uint32_t p) const {
    std::uint32_t r = 0;
    while (p != 0) {
      r = act(r, inv_col(via_[p]));
      p = parent_[p];
    }
    return r;
  }

  std::uint32_t pow(std::uint32_t p, std::uint64_t e) const {
    std::uint32_t r = 0, base = p;
    while (e) {
      if (e & 1) r = mult(r, base);
      base = mult(base, base);
      e >>= 1;
    }
    return r;
  }

  std::uint32_t conj(std::uint32_t x, std::uint32_t g) const {
    return mult(mult(inv(g), x), g);
  }

  std::uint32_t comm(std::uint32_t x, std::uint32_t y) const {
    return mult(mult(mult(inv(x), inv(y)), x), y);
  }

  // Order of an element, exact; elements of finite groups only.
  std::uint64_t order_of(std::uint32_t p) const {
    std::uint64_t ord = 1;
    std::uint32_t q = p;
    while (q != 0) {
      q = mult(q, p);
      ++ord;
      PNU_CHECK(ord <= n_, "element order exceeded group size");
    }
    return ord;
  }

  // Order of an element of a p-group: repeated p-th powers.
  std::uint64_t order_of_ppow(std::uint32_t x, std::uint64_t p) const {
    std::uint64_t ord = 1;
    while (x != 0) {
      x = pow(x, p);
      ord = checked_mul(ord, p);
    }
    return ord;
  }

  // Evaluate a word over the generators at the identity.
  std::uint32_t eval_word(const Word& w) const {
    std::uint32_t p = 0;
    for (const auto& l : w.letters()) {
      int col = l.exp > 0 ? gen_col(l.gen) : inv_col(gen_col(l.gen));
      std::int64_t n = l.exp < 0 ? -l.exp : l.exp;
      for (std::int64_t i = 0; i < n; ++i) p = act(p, col);
    }
    return p;
  }

  // Right-multiplication permutation of element q (the group element itself
  // as a permutation of the domain).
  Perm perm_of(std::uint32_t q) const {
    thread_local std::vector<std::uint16_t> cols;
    cols.clear();
    std::uint32_t t = q;
    while (t != 0) {
      cols.push_back(via_[t]);
      t = parent_[t];
    }
    std::vector<std::uint32_t> im(n_);
    for (std::uint32_t p = 0; p < n_; ++p) {
      std::uint32_t r = p;
      for (std::size_t i = cols.size(); i-- > 0;) r = act(r, cols[i]);
      im[p] = r;
    }
    return Perm(std::move(im));
  }

  // The element a permutation represents, if it does: x must equal right
  // multiplication by x(0).
  bool element_of(const Perm& x, std::uint32_t& out) const {
    if (x.degree() != n_) return false;
    std::uint32_t q = x[0];
    thread_local std::vector<std::uint16_t> cols;
    cols.clear();
    std::uint32_t t = q;
    while (t != 0) {
      cols.push_back(via_[t]);
      t = parent_[t];
    }
    for (std::uint32_t p = 0; p < n_; ++p) {
      std::uint32_t r = p;
      for (std::size_t i = cols.size(); i-- > 0;) r = act(r, cols[i]);
      if (r != x[p]) return false;
    }
    out = q;
    return true;
  }

 private:
  void build_tree_() {
    parent_.assign(n_, 0);
    via_.assign(n_, 0);
    depth_.assign(n_, 0);
    std::vector<std::uint32_t> bfs;
    std::vector<bool> seen(n_, false);
    bfs.reserve(n_);
    bfs.push_back(0);
    seen[0] = true;
    for (std::size_t qi = 0; qi < bfs.size(); ++qi) {
      std::uint32_t p = bfs[qi];
      for (int col = 0; col < 2 * ngens_; ++col) {
        std::uint32_t q = act(p, col);
        if (!seen[q]) {
          seen[q] = true;
          parent_[q] = p;
          via_[q] = static_cast<std::uint16_t>(col);
          depth_[q] = static_cast<std::uint16_t>(depth_[p] + 1);
          bfs.push_back(q);
        }
      }
    }
    reached_all_ = bfs.size() == n_;
    PNU_CHECK(reached_all_, "Cayley graph not connected from the identity");
  }

  std::uint32_t n_ = 0;
  int ngens_ = 0;
  bool reached_all_ = false;
  std::vector<std::uint32_t> act_;      // column-major: act_[col*n + p]
  std::vector<std::uint32_t> parent_;   // BFS tree toward identity
  std::vector<std::uint16_t> via_;      // column taken from parent
  std::vector<std::uint16_t> depth_;
};

using CayleyRef = std::shared_ptr<const CayleyContext>;

}  // namespace pnu

#endif  // PNU_CAYLEY_HPP
