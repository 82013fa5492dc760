#ifndef PNU_WORD_HPP
#define PNU_WORD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pnu/common.hpp"

namespace pnu {

// One syllable of a word: generator index with a nonzero exponent.
struct Letter {
  int gen = 0;
  std::int64_t exp = 0;
  bool operator==(const Letter&) const = default;
};

// Freely reduced word over abstract generators g0, g1, ...
// The empty word is the identity.  All constructors and operations keep the
// normal form: adjacent letters always carry distinct generator indices and
// exponents are nonzero.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : ls_(std::move(letters)) {
    reduce_();
  }

  static Word gen(int g, std::int64_t e = 1) {
    Word w;
    if (e != 0) w.ls_.push_back({g, e});
    return w;
  }

  const std::vector<Letter>& letters() const { return ls_; }
  bool empty() const { return ls_.empty(); }

  // Total letter count with multiplicity, |a^2 b^-1| = 3.
  std::uint64_t length() const {
    std::uint64_t n = 0;
    for (const auto& l : ls_) n += static_cast<std::uint64_t>(l.exp < 0 ? -l.exp : l.exp);
    return n;
  }

  bool operator==(const Word&) const = default;

  Word operator*(const Word& o) const {
    Word r;
    r.ls_ = ls_;
    for (const auto& l : o.ls_) r.push_(l);
    return r;
  }

  Word inverse() const {
    Word r;
    r.ls_.reserve(ls_.size());
    for (auto it = ls_.rbegin(); it != ls_.rend(); ++it)
      r.ls_.push_back({it->gen, -it->exp});
    return r;
  }

  Word pow(std::int64_t e) const {
    Word base = e < 0 ? inverse() : *this;
    std::int64_t n = e < 0 ? -e : e;
    Word r;
    for (std::int64_t i = 0; i < n; ++i) r = r * base;
    return r;
  }

  // y^-1 x y
  Word conj(const Word& y) const { return y.inverse() * (*this) * y; }

  static Word comm(const Word& x, const Word& y) {
    return x.inverse() * y.inverse() * x * y;
  }

  int max_gen() const {
    int m = -1;
    for (const auto& l : ls_)
      if (l.gen > m) m = l.gen;
    return m;
  }

  // Generator indices shifted by d (used when presentations are merged).
  Word shifted(int d) const {
    Word r;
    r.ls_ = ls_;
    for (auto& l : r.ls_) l.gen += d;
    return r;
  }

  // Flat signed-generator spelling: g, g, -h for g^2 h^-1.  The form the
  // coset enumerator consumes.
  std::vector<std::int32_t> flatten() const {
    std::vector<std::int32_t> out;
    out.reserve(static_cast<std::size_t>(length()));
    for (const auto& l : ls_) {
      std::int32_t s = l.exp > 0 ? (l.gen + 1) : -(l.gen + 1);
      std::int64_t n = l.exp < 0 ? -l.exp : l.exp;
      for (std::int64_t i = 0; i < n; ++i) out.push_back(s);
    }
    return out;
  }

 private:
  void push_(const Letter& l) {
    if (l.exp == 0) return;
    if (!ls_.empty() && ls_.back().gen == l.gen) {
      ls_.back().exp += l.exp;
      if (ls_.back().exp == 0) ls_.pop_back();
      return;
    }
    ls_.push_back(l);
  }

  void reduce_() {
    std::vector<Letter> in;
    in.swap(ls_);
    for (const auto& l : in) push_(l);
  }

  std::vector<Letter> ls_;
};

// Unique freely reduced form; idempotent by construction of Word.
inline Word free_reduce(const Word& w) { return Word(w.letters()); }

inline std::string word_to_string(const Word& w,
                                  const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string s;
  for (const auto& l : w.letters()) {
    if (!s.empty()) s += ' ';
    s += names.at(static_cast<std::size_t>(l.gen));
    if (l.exp != 1) s += "^" + std::to_string(l.exp);
  }
  return s;
}

}  // namespace pnu

#endif  // PNU_WORD_HPP
