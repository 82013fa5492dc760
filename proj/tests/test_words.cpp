#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "pnu/word.hpp"

using namespace pnu;

TEST_CASE("free reduction identities") {
  // a a^-1 -> empty
  Word w({{0, 1}, {0, -1}});
  CHECK(w.empty());

  // a^2 a^3 -> a^5
  Word v = Word::gen(0, 2) * Word::gen(0, 3);
  REQUIRE(v.letters().size() == 1);
  CHECK(v.letters()[0].exp == 5);

  // a b b^-1 a -> a^2
  Word u = Word::gen(0) * Word::gen(1) * Word::gen(1, -1) * Word::gen(0);
  REQUIRE(u.letters().size() == 1);
  CHECK(u.letters()[0].gen == 0);
  CHECK(u.letters()[0].exp == 2);
}

TEST_CASE("free reduction is idempotent and length-nonincreasing") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Letter> raw;
    std::uint64_t raw_len = 0;
    int n = static_cast<int>(rng() % 20);
    for (int i = 0; i < n; ++i) {
      int g = static_cast<int>(rng() % 3);
      std::int64_t e = static_cast<std::int64_t>(rng() % 7) - 3;
      raw.push_back({g, e});
      raw_len += static_cast<std::uint64_t>(e < 0 ? -e : e);
    }
    Word w(raw);
    CHECK(w.length() <= raw_len);
    CHECK(free_reduce(w) == w);
    // normal form: adjacent letters have distinct generators, exponents nonzero
    for (std::size_t i = 0; i < w.letters().size(); ++i) {
      CHECK(w.letters()[i].exp != 0);
      if (i) CHECK(w.letters()[i].gen != w.letters()[i - 1].gen);
    }
  }
}

TEST_CASE("word algebra") {
  Word a = Word::gen(0), b = Word::gen(1);
  CHECK(Word::comm(a, b) == Word({{0, -1}, {1, -1}, {0, 1}, {1, 1}}));
  CHECK((a * b).inverse() == b.inverse() * a.inverse());
  CHECK(a.pow(3) == Word::gen(0, 3));
  CHECK(a.pow(-2) == Word::gen(0, -2));
  CHECK(a.pow(0).empty());
  CHECK(a.conj(b) == b.inverse() * a * b);
  CHECK(Word::comm(a, a).empty());
}

TEST_CASE("flatten spells out exponents") {
  Word w = Word::gen(0, 2) * Word::gen(1, -1);
  std::vector<std::int32_t> expect{1, 1, -2};
  CHECK(w.flatten() == expect);
}
