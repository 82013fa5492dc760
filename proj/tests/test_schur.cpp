#include <catch2/catch_amalgamated.hpp>

#include "pnu/homomorphism.hpp"
#include "pnu/schur.hpp"

using namespace pnu;

namespace {
PermGroup grp(const std::string& spec) { return build_regular_rep(catalog_group(spec)).group; }
using Inv = std::vector<std::uint64_t>;
}  // namespace

TEST_CASE("abelian invariants") {
  CHECK(abelian_invariants(grp("cyclic:4"), 2) == Inv{4});
  CHECK(abelian_invariants(grp("cyclic:9"), 3) == Inv{9});
  CHECK(abelian_invariants(grp("elemab:2,3"), 2) == Inv{2, 2, 2});
  CHECK(abelian_invariants(grp("product:cyclic:4,cyclic:2"), 2) == Inv{2, 4});
  CHECK(abelian_invariants(grp("product:cyclic:9,cyclic:3"), 3) == Inv{3, 9});
  CHECK(abelian_invariants(grp("cyclic:1"), 2).empty());
  CHECK_THROWS_AS(abelian_invariants(grp("dihedral:8"), 2), invariant_violation);
}

TEST_CASE("bar-resolution H2: cyclic groups vanish") {
  CHECK(schur_multiplier_oracle(grp("cyclic:2")).empty());
  CHECK(schur_multiplier_oracle(grp("cyclic:4")).empty());
  CHECK(schur_multiplier_oracle(grp("cyclic:9")).empty());
  CHECK(schur_multiplier_oracle(grp("cyclic:7")).empty());
}

TEST_CASE("bar-resolution H2: elementary abelian and dihedral") {
  CHECK(schur_multiplier_oracle(grp("elemab:2,2")) == Inv{2});
  CHECK(schur_multiplier_oracle(grp("dihedral:8")) == Inv{2});
  CHECK(schur_multiplier_oracle(grp("elemab:3,2")) == Inv{3});
  CHECK(schur_multiplier_oracle(grp("elemab:2,3")) == Inv{2, 2, 2});
  CHECK(schur_multiplier_oracle(grp("quaternion:8")).empty());
  CHECK(schur_multiplier_oracle(grp("dihedral:16")) == Inv{2});
}

TEST_CASE("oracle scale guard") {
  CHECK_THROWS_AS(schur_multiplier_oracle(grp("extraspecial:3,p")), resource_exceeded);
}

TEST_CASE("smith divisors on a known matrix") {
  SmithSolver s(2, 2);
  s.at(0, 0) = 2;
  s.at(1, 1) = 6;
  auto r = s.run();
  CHECK(r.rank == 2);
  CHECK(r.divisors == std::vector<std::int64_t>{2, 6});

  SmithSolver t(2, 3);
  // rows (2 4 4), (-6 6 12): invariant factors 2 and 6
  t.at(0, 0) = 2;
  t.at(0, 1) = 4;
  t.at(0, 2) = 4;
  t.at(1, 0) = -6;
  t.at(1, 1) = 6;
  t.at(1, 2) = 12;
  auto u = t.run();
  CHECK(u.rank == 2);
  CHECK(u.divisors == std::vector<std::int64_t>{2, 6});
}
