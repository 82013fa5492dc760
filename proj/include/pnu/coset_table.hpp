#ifndef PNU_COSET_TABLE_HPP
#define PNU_COSET_TABLE_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>
#include <vector>

#include "pnu/common.hpp"
#include "pnu/presentation.hpp"
#include "pnu/word.hpp"

namespace pnu {

// Todd-Coxeter coset table.  Rows are cosets 1..live_count once complete;
// columns come in (generator, inverse) pairs; entry 0 means undefined.
// Complete tables are closed and compressed, with row 1 the subgroup coset,
// and each generator column describing a permutation of the cosets.
class CosetTable {
 public:
  enum class Status { Complete, Exceeded };

  CosetTable() = default;
  CosetTable(int ngens, std::vector<std::uint32_t> tab, std::uint32_t live,
             Status status)
      : ngens_(ngens), tab_(std::move(tab)), live_(live), status_(status) {}

  int ngens() const { return ngens_; }
  std::uint32_t live_count() const { return live_; }
  Status status() const { return status_; }

  // Image of coset c (1-based) under signed generator s (+g / -g, 1-based).
  std::uint32_t apply(std::uint32_t c, std::int32_t s) const {
    int col = s > 0 ? 2 * (s - 1) : 2 * (-s - 1) + 1;
    return tab_[static_cast<std::size_t>(c) * cols() + static_cast<std::size_t>(col)];
  }

  std::uint32_t apply_col(std::uint32_t c, int col) const {
    return tab_[static_cast<std::size_t>(c) * cols() + static_cast<std::size_t>(col)];
  }

  int cols() const { return 2 * ngens_; }

 private:
  int ngens_ = 0;
  std::vector<std::uint32_t> tab_;  // (live_+1) * cols, row 0 unused
  std::uint32_t live_ = 0;
  Status status_ = Status::Complete;
};

namespace detail {

// HLT-style enumerator with immediate coincidence processing and periodic
// dead-coset compression.  Deterministic: fixed definition and scan order.
class ToddCoxeter {
 public:
  ToddCoxeter(const FinitePresentation& pres,
              const std::vector<Word>& subgroup_gens, std::uint64_t max_cosets)
      : ngens_(pres.ngens()), cols_(2 * pres.ngens()), max_(max_cosets) {
    PNU_CHECK(max_cosets >= 1, "max-cosets must be >= 1");
    std::set<std::vector<std::int32_t>> seen;
    auto add_rel = [&](const Word& w) {
      std::vector<std::int32_t> flat = free_reduce(w).flatten();
      // Cyclic reduction: a relator and its rotations force the same table
      // constraints, so conjugating prefixes can be stripped.
      while (flat.size() >= 2 && flat.front() == -flat.back()) {
        flat.erase(flat.begin());
        flat.pop_back();
      }
      if (flat.empty()) return;
      std::vector<std::int32_t> cls(flat.size());
      for (std::size_t i = 0; i < flat.size(); ++i) cls[i] = col_of(flat[i]);
      if (seen.insert(cls).second) rels_.push_back(std::move(cls));
    };
    for (const auto& r : pres.relators) add_rel(r);
    std::stable_sort(rels_.begin(), rels_.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    for (const auto& w : subgroup_gens) {
      std::vector<std::int32_t> flat = free_reduce(w).flatten();
      std::vector<std::int32_t> cls(flat.size());
      for (std::size_t i = 0; i < flat.size(); ++i) cls[i] = col_of(flat[i]);
      if (!cls.empty()) subs_.push_back(std::move(cls));
    }
  }

  CosetTable run() {
    tab_.assign(2 * static_cast<std::size_t>(cols_), 0);
    uf_ = {0, 1};
    nrows_ = 1;
    live_ = 1;
    exceeded_ = false;

    for (const auto& w : subs_) {
      scan(1, w, true);
      if (exceeded_) return finish();
    }
    std::uint32_t c = 1;
    while (c <= nrows_) {
      if (!alive(c)) {
        ++c;
        continue;
      }
      for (const auto& r : rels_) {
        scan(c, r, true);
        if (exceeded_) return finish();
        if (!alive(c)) break;
      }
      if (alive(c)) {
        for (int col = 0; col < cols_ && alive(c); ++col) {
          if (entry(c, col) == 0) {
            if (!define(c, col)) {
              if (exceeded_) return finish();
              col = -1;  // lookahead reshaped the table: redo the row
            }
          }
        }
      }
      ++c;
      // Reclaim space once the deadwood dominates.
      if (nrows_ - live_ > 65536 && nrows_ - live_ > live_ / 2) c = compress(c);
    }
    return finish();
  }

 private:
  static int col_of(std::int32_t s) {
    return s > 0 ? 2 * (s - 1) : 2 * (-s - 1) + 1;
  }
  static int inv_col(int col) { return col ^ 1; }

  std::uint32_t& entry(std::uint32_t c, int col) {
    return tab_[static_cast<std::size_t>(c) * static_cast<std::size_t>(cols_) +
                static_cast<std::size_t>(col)];
  }
  std::uint32_t entry(std::uint32_t c, int col) const {
    return tab_[static_cast<std::size_t>(c) * static_cast<std::size_t>(cols_) +
                static_cast<std::size_t>(col)];
  }

  bool alive(std::uint32_t c) const { return uf_[c] == c; }

  std::uint32_t find(std::uint32_t c) {
    while (uf_[c] != c) {
      uf_[c] = uf_[uf_[c]];
      c = uf_[c];
    }
    return c;
  }

  // Defines a new coset at (c, col).  Returns false when a lookahead pass ran
  // instead (the table may have changed arbitrarily; callers restart their
  // scan).  Sets exceeded_ when the live bound truly cannot be met.
  bool define(std::uint32_t c, int col) {
    if (live_ >= max_) {
      // Lookahead: a no-fill pass over the live table can harvest pending
      // coincidences and free space before giving up.
      if (!in_lookahead_ && defines_since_lookahead_ > 0) {
        lookahead();
        defines_since_lookahead_ = 0;
        if (live_ < max_) return false;
      }
      exceeded_ = true;
      return false;
    }
    ++defines_since_lookahead_;
    ++nrows_;
    if (static_cast<std::size_t>(nrows_ + 1) * cols_ > tab_.size())
      tab_.resize(tab_.size() * 2, 0);
    if (nrows_ + 1 > uf_.size()) uf_.resize(uf_.size() * 2);
    uf_[nrows_] = nrows_;
    ++live_;
    entry(c, col) = nrows_;
    entry(nrows_, inv_col(col)) = c;
    return true;
  }

  // Scan relator/subgroup word at coset c; with fill, define cosets to close.
  void scan(std::uint32_t c, const std::vector<std::int32_t>& w, bool fill) {
  restart:
    c = find(c);
    std::uint32_t f = c, b = c;
    std::size_t i = 0, r = w.size();
    for (;;) {
      while (i < r) {
        std::uint32_t nf = entry(f, w[i]);
        if (nf == 0) break;
        f = nf;
        ++i;
      }
      if (i == r) {
        if (f != b) coincide(f, b);
        return;
      }
      while (r > i) {
        std::uint32_t nb = entry(b, inv_col(w[r - 1]));
        if (nb == 0) break;
        b = nb;
        --r;
      }
      if (r == i) {
        coincide(f, b);
        return;
      }
      if (r == i + 1) {
        entry(f, w[i]) = b;
        entry(b, inv_col(w[i])) = f;
        return;
      }
      if (!fill) return;
      if (!define(f, w[i])) {
        if (exceeded_) return;
        goto restart;  // lookahead reshaped the table
      }
    }
  }

  void lookahead() {
    in_lookahead_ = true;
    for (std::uint32_t c = 1; c <= nrows_; ++c) {
      if (!alive(c)) continue;
      for (const auto& r : rels_) {
        scan(find(c), r, false);
        if (!alive(c)) break;
      }
    }
    in_lookahead_ = false;
  }

  // Merge queue processing.  Table entries always reference live cosets and
  // stay mutually inverse; a dying row's edges transfer to the survivor,
  // queueing further coincidences on conflicts.
  void coincide(std::uint32_t a, std::uint32_t b) {
    queue_.clear();
    queue_.push_back({a, b});
    while (!queue_.empty()) {
      auto [x, y] = queue_.front();
      queue_.pop_front();
      x = find(x);
      y = find(y);
      if (x == y) continue;
      if (x > y) std::swap(x, y);
      uf_[y] = x;
      --live_;
      for (int col = 0; col < cols_; ++col) {
        std::uint32_t e = entry(y, col);
        if (e == 0) continue;
        entry(y, col) = 0;
        if (e == y) {
          e = x;
        } else if (entry(e, inv_col(col)) == y) {
          entry(e, inv_col(col)) = 0;
        }
        push_edge(x, col, e);
      }
    }
  }

  void push_edge(std::uint32_t a, int col, std::uint32_t e) {
    std::uint32_t fa = entry(a, col);
    if (fa != 0) {
      if (fa != e) queue_.push_back({fa, e});
      return;
    }
    std::uint32_t re = entry(e, inv_col(col));
    if (re != 0 && re != a) {
      queue_.push_back({re, a});
      return;
    }
    entry(a, col) = e;
    entry(e, inv_col(col)) = a;
  }

  // Renumber live cosets 1..live_ preserving order; returns the remapped
  // position of the scan pointer.
  std::uint32_t compress(std::uint32_t next) {
    std::vector<std::uint32_t> remap(nrows_ + 1, 0);
    std::uint32_t k = 0;
    for (std::uint32_t c = 1; c <= nrows_; ++c)
      if (alive(c)) remap[c] = ++k;
    std::uint32_t new_next = 0;
    for (std::uint32_t c = 1; c <= nrows_ && c < next; ++c)
      if (alive(c)) ++new_next;
    for (std::uint32_t c = 1; c <= nrows_; ++c) {
      if (!alive(c)) continue;
      for (int col = 0; col < cols_; ++col) {
        std::uint32_t e = entry(c, col);
        entry(remap[c], col) = e ? remap[e] : 0;
      }
    }
    for (std::uint32_t c = k + 1; c <= nrows_; ++c)
      for (int col = 0; col < cols_; ++col) entry(c, col) = 0;
    nrows_ = k;
    uf_.assign(nrows_ + 1, 0);
    for (std::uint32_t c = 0; c <= nrows_; ++c) uf_[c] = c;
    return new_next + 1;
  }

  CosetTable finish() {
    compress(nrows_ + 1);
    if (exceeded_) {
      std::vector<std::uint32_t> out(tab_.begin(),
                                     tab_.begin() + static_cast<std::ptrdiff_t>(
                                                        (nrows_ + 1) * static_cast<std::size_t>(cols_)));
      return CosetTable(ngens_, std::move(out), live_, CosetTable::Status::Exceeded);
    }
    // Standardize: BFS renumbering from coset 1 in fixed column order makes
    // the table canonical regardless of definition history.
    std::vector<std::uint32_t> order(nrows_ + 1, 0);
    std::vector<std::uint32_t> bfs;
    bfs.reserve(nrows_);
    bfs.push_back(1);
    order[1] = 1;
    std::uint32_t next_id = 1;
    for (std::size_t qi = 0; qi < bfs.size(); ++qi) {
      std::uint32_t c = bfs[qi];
      for (int col = 0; col < cols_; ++col) {
        std::uint32_t e = entry(c, col);
        PNU_CHECK(e != 0, "complete coset table has an undefined entry");
        if (order[e] == 0) {
          order[e] = ++next_id;
          bfs.push_back(e);
        }
      }
    }
    PNU_CHECK(next_id == nrows_, "standardization did not reach every coset");
    std::vector<std::uint32_t> out((nrows_ + 1) * static_cast<std::size_t>(cols_), 0);
    for (std::uint32_t c = 1; c <= nrows_; ++c)
      for (int col = 0; col < cols_; ++col)
        out[static_cast<std::size_t>(order[c]) * cols_ + static_cast<std::size_t>(col)] =
            order[entry(c, col)];
    return CosetTable(ngens_, std::move(out), live_, CosetTable::Status::Complete);
  }

  int ngens_;
  int cols_;
  std::uint64_t max_;
  std::vector<std::vector<std::int32_t>> rels_;  // column sequences
  std::vector<std::vector<std::int32_t>> subs_;
  std::vector<std::uint32_t> tab_;
  std::vector<std::uint32_t> uf_;
  std::uint32_t nrows_ = 0;
  std::uint64_t live_ = 0;
  bool exceeded_ = false;
  bool in_lookahead_ = false;
  std::uint64_t defines_since_lookahead_ = 0;
  std::deque<std::pair<std::uint32_t, std::uint32_t>> queue_;
};

}  // namespace detail

// Enumerate cosets of the subgroup generated by subgroup_gens.  On success the
// table is complete and its live count is the subgroup index.  If the live
// coset count would pass max_cosets, the partial table comes back with status
// Exceeded: raise the bound or shrink the group, never an unsound answer.
inline CosetTable enumerate_cosets(const FinitePresentation& pres,
                                   const std::vector<Word>& subgroup_gens,
                                   std::uint64_t max_cosets = kDefaultMaxCosets) {
  return detail::ToddCoxeter(pres, subgroup_gens, max_cosets).run();
}

}  // namespace pnu

#endif  // PNU_COSET_TABLE_HPP
