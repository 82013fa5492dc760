#include <algorithm>
#include <random>
#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "pnu/homomorphism.hpp"
#include "pnu/perm_group.hpp"

using namespace pnu;

namespace {

// Test-side oracle: plain product closure over raw image vectors, independent
// of the library's element machinery.
std::set<std::vector<std::uint32_t>> brute_elements(std::size_t degree,
                                                    const std::vector<Perm>& gens) {
  std::set<std::vector<std::uint32_t>> elems;
  elems.insert(Perm::identity(degree).images());
  for (;;) {
    std::set<std::vector<std::uint32_t>> next = elems;
    for (const auto& e : elems)
      for (const auto& g : gens) next.insert((Perm(e) * g).images());
    if (next.size() == elems.size()) return elems;
    elems.swap(next);
  }
}

Perm cycle(std::size_t degree, const std::vector<std::uint32_t>& pts) {
  std::vector<std::uint32_t> im(degree);
  for (std::size_t i = 0; i < degree; ++i) im[i] = static_cast<std::uint32_t>(i);
  for (std::size_t i = 0; i < pts.size(); ++i) im[pts[i] - 1] = pts[(i + 1) % pts.size()] - 1;
  return Perm(std::move(im));
}

RegularRep rep(const std::string& spec) { return build_regular_rep(catalog_group(spec)); }

}  // namespace

TEST_CASE("bsgs order and membership on raw permutations") {
  Perm c4 = cycle(4, {1, 2, 3, 4});
  PermGroup g = bsgs({c4});
  CHECK(order(g) == 4);
  CHECK(contains(g, cycle(4, {1, 3}) * cycle(4, {2, 4})));
  CHECK_FALSE(contains(g, cycle(4, {1, 2})));
  CHECK(element_order(c4) == 4);
}

TEST_CASE("bsgs order is independent of generator ordering") {
  // S4 from different generator arrangements
  std::vector<Perm> gens{cycle(4, {1, 2}), cycle(4, {1, 2, 3, 4}), cycle(4, {2, 3})};
  std::mt19937_64 rng(7);
  std::uint64_t expect = order(bsgs(gens));
  CHECK(expect == 24);
  for (int t = 0; t < 5; ++t) {
    std::shuffle(gens.begin(), gens.end(), rng);
    CHECK(order(bsgs(gens)) == expect);
  }
}

TEST_CASE("order of regular representations") {
  CHECK(order(rep("dihedral:16").group) == 16);
  CHECK(order(rep("cyclic:9").group) == 9);
  CHECK(order(rep("quaternion:32").group) == 32);
}

TEST_CASE("group exponent") {
  CHECK(group_exponent(rep("dihedral:8").group, 2) == 4);
  CHECK(group_exponent(rep("extraspecial:3,p").group, 3) == 3);
  CHECK(group_exponent(rep("extraspecial:3,p2").group, 3) == 9);
  CHECK(group_exponent(rep("elemab:2,3").group, 2) == 2);
}

TEST_CASE("closure of disjoint transpositions") {
  PermGroup g = bsgs({cycle(4, {1, 2})});
  PermGroup h = closure(g, std::vector<Perm>{cycle(4, {3, 4})});
  CHECK(order(h) == 4);
}

TEST_CASE("normal closure") {
  auto r = rep("dihedral:8");
  const auto& ctx = *r.ctx;
  // a^2 generates the order-2 center; brute-force oracle over all 8 elements
  std::uint32_t a2 = ctx.pow(r.gen_points[0], 2);
  PermGroup n = normal_closure(r.group, std::vector<std::uint32_t>{a2});
  CHECK(order(n) == 2);
  {
    auto gens = r.group.gens();
    auto all = brute_elements(8, gens);
    Perm a2p = ctx.perm_of(a2);
    std::set<std::vector<std::uint32_t>> cls;
    cls.insert(a2p.images());
    for (const auto& e : all) {
      Perm x(e);
      cls.insert((x.inverse() * a2p * x).images());
    }
    // closure of the conjugates
    std::vector<Perm> seed;
    for (const auto& v : cls) seed.push_back(Perm(v));
    CHECK(brute_elements(8, seed).size() == 2);
  }
  // trivial seeds give the trivial group
  CHECK(order(normal_closure(r.group, std::vector<std::uint32_t>{})) == 1);
}

TEST_CASE("commutator subgroup of dihedral(16)") {
  auto r = rep("dihedral:16");
  PermGroup der = commutator_subgroup(r.group, r.group);
  CHECK(order(der) == 4);
  CHECK(group_exponent(der, 2) == 4);  // cyclic of order 4
  // brute force over all 256 commutator pairs
  auto all = brute_elements(16, r.group.gens());
  std::vector<Perm> comms;
  for (const auto& x : all)
    for (const auto& y : all) {
      Perm px(x), py(y);
      comms.push_back(px.inverse() * py.inverse() * px * py);
    }
  CHECK(brute_elements(16, comms).size() == 4);
}

TEST_CASE("commutator subgroup trivial cases and symmetry") {
  auto r = rep("dihedral:16");
  PermGroup triv = span_points(r.ctx, {});
  CHECK(order(commutator_subgroup(r.group, triv)) == 1);
  // [A,B] = [B,A] for random small subgroups
  std::mt19937_64 rng(3);
  for (int t = 0; t < 10; ++t) {
    PermGroup a = span_points(r.ctx, {r.group.random_point(rng)});
    PermGroup b = span_points(r.ctx, {r.group.random_point(rng)});
    PermGroup ab = commutator_subgroup(a, b);
    PermGroup ba = commutator_subgroup(b, a);
    CHECK(ab.set_equal(ba));
  }
}

TEST_CASE("lower central series") {
  auto orders = [](const std::vector<PermGroup>& s) {
    std::vector<std::uint64_t> o;
    for (const auto& g : s) o.push_back(g.order());
    return o;
  };
  CHECK(orders(lower_central_series(rep("dihedral:16").group)) ==
        std::vector<std::uint64_t>{16, 4, 2, 1});
  CHECK(orders(lower_central_series(rep("elemab:3,2").group)) ==
        std::vector<std::uint64_t>{9, 1});
  CHECK(orders(lower_central_series(rep("extraspecial:3,p").group)) ==
        std::vector<std::uint64_t>{27, 3, 1});
}

TEST_CASE("series terms are normal and exactly [gamma_i, G]") {
  auto r = rep("dihedral:32");
  auto series = lower_central_series(r.group);
  for (std::size_t i = 0; i < series.size(); ++i) {
    CHECK(is_normal_in(series[i], r.group));
    if (i + 1 < series.size())
      CHECK(series[i + 1].set_equal(commutator_subgroup(series[i], r.group)));
  }
}

TEST_CASE("agemo") {
  CHECK(order(agemo(rep("elemab:2,3").group, 2, 1)) == 1);
  CHECK(order(agemo(rep("cyclic:9").group, 3, 1)) == 3);
  auto r = rep("dihedral:16");
  PermGroup sq = agemo(r.group, 2, 1);
  CHECK(order(sq) == 4);
  CHECK(sq.set_equal(lower_central_series(r.group)[1]));
  // brute force: all 16 squares generate it
  {
    auto all = brute_elements(16, r.group.gens());
    std::vector<Perm> sqs;
    for (const auto& x : all) sqs.push_back(Perm(x) * Perm(x));
    CHECK(brute_elements(16, sqs).size() == 4);
  }
  // agemo invariant: G/H has exponent dividing p^k, and not for any smaller subgroup
  auto [q, proj] = quotient(r.group, sq);
  CHECK(group_exponent(q, 2) == 2);
}

TEST_CASE("agemo quotients have exponent dividing p^k, exhaustively") {
  for (const auto& [spec, p] : std::vector<std::pair<std::string, std::uint64_t>>{
           {"dihedral:32", 2}, {"quaternion:16", 2}, {"extraspecial:3,p2", 3},
           {"cyclic:9", 3}}) {
    auto r = rep(spec);
    for (unsigned k = 1; k <= 2; ++k) {
      PermGroup h = agemo(r.group, p, k);
      auto [q, proj] = quotient(r.group, h);
      std::uint64_t bound = checked_pow(p, k);
      for (auto x : q.elements())
        CHECK(bound % q.ctx()->order_of_ppow(x, p) == 0);
    }
  }
}

TEST_CASE("omega") {
  CHECK(order(omega(rep("cyclic:8").group, 2, 1)) == 2);
  CHECK(order(omega(rep("dihedral:8").group, 2, 1)) == 8);  // reflections generate
  CHECK(order(omega(rep("extraspecial:3,p").group, 3, 1)) == 27);
  CHECK(order(omega(rep("extraspecial:3,p2").group, 3, 1)) == 9);
}

TEST_CASE("quotients") {
  auto r = rep("dihedral:16");
  PermGroup der = commutator_subgroup(r.group, r.group);
  auto [q, proj] = quotient(r.group, der);
  CHECK(order(q) == 4);
  CHECK(group_exponent(q, 2) == 2);  // elementary abelian
  CHECK(checked_mul(order(q), order(der)) == order(r.group));

  auto [q1, p1] = quotient(r.group, span_points(r.ctx, {}));
  CHECK(order(q1) == 16);
  auto [q2, p2] = quotient(r.group, r.group);
  CHECK(order(q2) == 1);
}

TEST_CASE("quotient rejects non-normal subgroups with a witness") {
  auto r = rep("dihedral:16");
  PermGroup refl = span_points(r.ctx, {r.gen_points[1]});  // <b>, not normal
  CHECK(order(refl) == 2);
  CHECK_THROWS_AS(quotient(r.group, refl), not_normal);
}

TEST_CASE("hom kernels via the evaluation map") {
  auto r = rep("dihedral:16");
  // identity map
  std::vector<std::uint32_t> ids = r.gen_points;
  Homomorphism id_hom = hom_from_ctx_generators(r.group, r.group, ids);
  CHECK(order(hom_kernel(id_hom)) == 1);

  PermGroup der = commutator_subgroup(r.group, r.group);
  auto [q, proj] = quotient(r.group, der);
  PermGroup ker = hom_kernel(proj);
  CHECK(order(ker) == 4);
  CHECK(ker.set_equal(der));
}

TEST_CASE("hom kernel via the graph trick on raw permutations") {
  // C4 -> C2, a |-> the transposition; kernel has order 2
  Perm a = cycle(4, {1, 2, 3, 4});
  Perm b = cycle(2, {1, 2});
  PermGroup src = bsgs({a});
  PermGroup tgt = bsgs({b});
  FinitePresentation rel;
  rel.generator_names = {"a"};
  rel.add_relator(Word::gen(0, 4));
  Homomorphism f = hom_generic(src, tgt, {a}, {b}, rel);
  PermGroup ker = hom_kernel(f);
  CHECK(order(ker) == 2);
  CHECK(contains(ker, a * a));
}

TEST_CASE("center") {
  CHECK(order(center(rep("dihedral:16").group)) == 2);
  CHECK(order(center(rep("extraspecial:3,p").group)) == 3);
  CHECK(order(center(rep("elemab:2,3").group)) == 8);
  // raw-permutation path
  PermGroup s3 = bsgs({cycle(3, {1, 2}), cycle(3, {1, 2, 3})});
  CHECK(order(center(s3)) == 1);
}

TEST_CASE("element orders in a context") {
  auto r = rep("quaternion:8");
  const auto& ctx = *r.ctx;
  CHECK(ctx.order_of(r.gen_points[0]) == 4);
  CHECK(ctx.order_of_ppow(r.gen_points[0], 2) == 4);
  CHECK(ctx.order_of(0) == 1);
  // -1 element: a^2 = b^2 is the unique involution
  CHECK(ctx.order_of(ctx.pow(r.gen_points[0], 2)) == 2);
}

TEST_CASE("context multiplication agrees with permutation composition") {
  auto r = rep("semidihedral:16");
  const auto& ctx = *r.ctx;
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    std::uint32_t x = r.group.random_point(rng), y = r.group.random_point(rng);
    CHECK(ctx.perm_of(ctx.mult(x, y)) == ctx.perm_of(x) * ctx.perm_of(y));
    CHECK(ctx.perm_of(ctx.inv(x)) == ctx.perm_of(x).inverse());
  }
}
