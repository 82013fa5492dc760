#include <catch2/catch_amalgamated.hpp>

#include "pnu/coset_table.hpp"
#include "pnu/homomorphism.hpp"

using namespace pnu;

namespace {

// Exhaustive check: every relator acts trivially on every coset.
bool relators_act_trivially(const FinitePresentation& pres, const CosetTable& t) {
  for (std::uint32_t c = 1; c <= t.live_count(); ++c) {
    for (const auto& r : pres.relators) {
      std::uint32_t p = c;
      for (auto s : r.flatten()) p = t.apply(p, s);
      if (p != c) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("regular enumeration of small catalog groups") {
  auto c6 = catalog_group("cyclic:6");
  auto t = enumerate_cosets(c6, {});
  REQUIRE(t.status() == CosetTable::Status::Complete);
  CHECK(t.live_count() == 6);
  CHECK(relators_act_trivially(c6, t));
}

TEST_CASE("subgroup enumeration: index of <b> in dihedral(8)") {
  auto d8 = catalog_group("dihedral:8");
  auto t = enumerate_cosets(d8, {Word::gen(1)});
  REQUIRE(t.status() == CosetTable::Status::Complete);
  CHECK(t.live_count() == 4);
}

TEST_CASE("catalog orders match the family parameter") {
  for (const auto& [spec, n] :
       std::vector<std::pair<std::string, std::uint32_t>>{
           {"cyclic:9", 9},
           {"elemab:2,3", 8},
           {"elemab:3,2", 9},
           {"dihedral:16", 16},
           {"semidihedral:16", 16},
           {"quaternion:16", 16},
           {"extraspecial:3,p", 27},
           {"extraspecial:3,p2", 27},
           {"product:dihedral:8,cyclic:2", 16},
           {"product:cyclic:4,cyclic:2", 8}}) {
    auto pres = catalog_group(spec);
    auto t = enumerate_cosets(pres, {});
    REQUIRE(t.status() == CosetTable::Status::Complete);
    CHECK(t.live_count() == n);
    CHECK(relators_act_trivially(pres, t));
  }
}

TEST_CASE("regular representation of cyclic(3) is a 3-cycle") {
  auto perms = regular_representation(catalog_group("cyclic:3"));
  REQUIRE(perms.size() == 1);
  CHECK(perms[0].degree() == 3);
  CHECK(perms[0].order() == 3);
}

TEST_CASE("regular representation of elemab(2,2): two commuting involutions") {
  auto perms = regular_representation(catalog_group("elemab:2,2"));
  REQUIRE(perms.size() == 2);
  CHECK(perms[0].order() == 2);
  CHECK(perms[1].order() == 2);
  CHECK(perms[0] * perms[1] == perms[1] * perms[0]);
  CHECK(perms[0].degree() == 4);
}

TEST_CASE("regular representation of extraspecial(3,p)") {
  auto pres = catalog_group("extraspecial:3,p");
  auto perms = regular_representation(pres);
  REQUIRE(perms.size() == 3);
  for (const auto& p : perms) CHECK(p.degree() == 27);
  // relators hold as permutation identities
  for (const auto& r : pres.relators) {
    Perm acc = Perm::identity(27);
    for (auto s : r.flatten()) {
      Perm base = s > 0 ? perms[static_cast<std::size_t>(s - 1)]
                        : perms[static_cast<std::size_t>(-s - 1)].inverse();
      acc = acc * base;
    }
    CHECK(acc.is_identity());
  }
  // pairwise commutators are central
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Perm c = perms[i].inverse() * perms[j].inverse() * perms[i] * perms[j];
      for (int k = 0; k < 3; ++k) CHECK(c * perms[k] == perms[k] * c);
    }
}

TEST_CASE("regular action is transitive and fixed-point-free") {
  for (const char* spec : {"dihedral:16", "cyclic:8", "quaternion:8"}) {
    auto rep = build_regular_rep(catalog_group(spec));
    const auto& ctx = *rep.ctx;
    // transitivity is the context's construction invariant; spot fixed-point-freeness
    for (auto gp : rep.gen_points) {
      if (gp == 0) continue;
      Perm p = ctx.perm_of(gp);
      for (std::size_t i = 0; i < p.degree(); ++i) CHECK(p[i] != i);
    }
  }
}

TEST_CASE("enumeration is deterministic") {
  auto pres = catalog_group("dihedral:32");
  auto t1 = enumerate_cosets(pres, {});
  auto t2 = enumerate_cosets(pres, {});
  REQUIRE(t1.live_count() == t2.live_count());
  for (std::uint32_t c = 1; c <= t1.live_count(); ++c)
    for (int col = 0; col < t1.cols(); ++col)
      REQUIRE(t1.apply_col(c, col) == t2.apply_col(c, col));
}

TEST_CASE("max-cosets bound reports exceeded, never a wrong answer") {
  auto pres = catalog_group("cyclic:100");
  auto t = enumerate_cosets(pres, {}, 10);
  CHECK(t.status() == CosetTable::Status::Exceeded);
  CHECK_THROWS_AS(build_regular_rep(pres, 10), resource_exceeded);
}

TEST_CASE("tight bounds complete correctly or report exceeded") {
  for (const auto& [spec, n] : std::vector<std::pair<std::string, std::uint32_t>>{
           {"dihedral:32", 32}, {"quaternion:16", 16}, {"extraspecial:3,p", 27}}) {
    auto pres = catalog_group(spec);
    // generous, exact and starved bounds; a completed run must report the
    // true index no matter how tight the cap was (lookahead may rescue it)
    for (std::uint64_t cap : {std::uint64_t{5000}, std::uint64_t{n}, std::uint64_t{n - 1}}) {
      auto t = enumerate_cosets(pres, {}, cap);
      if (t.status() == CosetTable::Status::Complete)
        CHECK(t.live_count() == n);
      else
        CHECK(cap < 5000);
    }
    CHECK(enumerate_cosets(pres, {}, n - 1).status() == CosetTable::Status::Exceeded);
  }
}
