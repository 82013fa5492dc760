#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "pnu/pgroup.hpp"

using namespace pnu;

namespace {
RegularRep rep(const std::string& spec) { return build_regular_rep(catalog_group(spec)); }
}  // namespace

TEST_CASE("m(p,r) closed formula, exhaustive small range") {
  CHECK(m_of(3, 1).m == 2);
  CHECK(m_of(2, 1).m == 8);
  CHECK(m_of(5, 2).m == 20);
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull})
    for (unsigned r = 1; r <= 4; ++r) {
      std::uint64_t expect = p == 2 ? (1ull << (r + 2)) : (p - 1) * checked_pow(p, r - 1);
      CHECK(m_of(p, r).m == expect);
    }
  CHECK_THROWS_AS(m_of(4, 1), invariant_violation);
  CHECK_THROWS_AS(m_of(3, 0), invariant_violation);
}

TEST_CASE("profiles") {
  auto pr = profile(rep("dihedral:16").group, 2);
  CHECK(pr.n == 4);
  CHECK(pr.cls == 3);
  CHECK(pr.coclass == 1);
  CHECK(pr.exponent == 8);
  CHECK(pr.series_orders == std::vector<std::uint64_t>{16, 4, 2, 1});

  auto pe = profile(rep("elemab:3,2").group, 3);
  CHECK(pe.n == 2);
  CHECK(pe.cls == 1);
  CHECK(pe.coclass == 1);
  CHECK(pe.exponent == 3);

  auto px = profile(rep("extraspecial:3,p").group, 3);
  CHECK(px.n == 3);
  CHECK(px.cls == 2);
  CHECK(px.coclass == 1);
  CHECK(px.exponent == 3);

  // coclass 0 happens exactly for the cyclic group of order p
  auto pc = profile(rep("cyclic:3").group, 3);
  CHECK(pc.coclass == 0);

  CHECK_THROWS_AS(profile(rep("cyclic:6").group, 2), error);
}

TEST_CASE("powerful and potent predicates") {
  CHECK(is_powerful(rep("cyclic:8").group, 2));
  CHECK_FALSE(is_powerful(rep("dihedral:16").group, 2));  // G' = C4, G^4 = C2
  CHECK(is_potent(rep("cyclic:8").group, 2));
  // gamma_2 has order 3 but G^3 = 1
  CHECK_FALSE(is_potent(rep("extraspecial:3,p").group, 3));
  CHECK(is_potent(rep("extraspecial:3,p2").group, 3));
  CHECK(is_potent(rep("cyclic:5").group, 5));
}

TEST_CASE("embedded predicates") {
  auto r = rep("dihedral:16");
  PermGroup z = center(r.group);
  CHECK(is_powerfully_embedded(z, r.group, 2));
  PermGroup g2 = lower_central_series(r.group)[1];
  // [N,G] = C2 but N^4 = 1 for N = gamma_2 = C4, so the p=2 bound fails
  CHECK_FALSE(is_powerfully_embedded(g2, r.group, 2));
  CHECK_FALSE(is_powerfully_embedded(r.group, r.group, 2));
  CHECK_FALSE(is_potently_embedded(r.group, r.group, 2));
  PermGroup refl = span_points(r.ctx, {r.gen_points[1]});
  CHECK_THROWS_AS(is_powerfully_embedded(refl, r.group, 2), not_normal);
}

TEST_CASE("power-commutator condition") {
  CHECK(check_power_commutator(rep("dihedral:32").group, 2, 2, 1));
  CHECK(check_power_commutator(rep("elemab:2,3").group, 2, 1, 1));
  CHECK_FALSE(check_power_commutator(rep("extraspecial:3,p").group, 3, 1, 1));
  CHECK(check_power_commutator(rep("extraspecial:3,p").group, 3, 2, 1));
}

TEST_CASE("maximal-class G1 is the cyclic maximal subgroup for 2-groups") {
  for (const char* spec : {"dihedral:16", "quaternion:16", "semidihedral:16",
                           "dihedral:32", "semidihedral:32", "quaternion:32"}) {
    auto r = rep(spec);
    PermGroup g1 = maximal_class_G1(r.group, 2);
    std::uint64_t n = order(r.group);
    CHECK(order(g1) == n / 2);
    CHECK(group_exponent(g1, 2) == n / 2);  // cyclic
    // brute-force oracle: x with [x, gamma_2] inside gamma_4
    auto series = lower_central_series(r.group);
    const PermGroup& g2 = series_term(series, 2);
    const PermGroup& g4 = series_term(series, 4);
    const auto& ctx = *r.ctx;
    std::vector<std::uint32_t> direct;
    for (auto x : r.group.elements()) {
      bool ok = true;
      for (auto w : g2.elements())
        if (!g4.contains_point(ctx.comm(x, w))) {
          ok = false;
          break;
        }
      if (ok) direct.push_back(x);
    }
    CHECK(direct.size() == n / 2);
    for (auto x : direct) CHECK(g1.contains_point(x));
  }
  CHECK_THROWS_AS(maximal_class_G1(rep("elemab:2,3").group, 2), hypothesis_unmet);
  CHECK_THROWS_AS(maximal_class_G1(rep("dihedral:8").group, 2), hypothesis_unmet);
}

TEST_CASE("Hall collection congruence on sampled pairs") {
  std::mt19937_64 rng(2024);
  for (const char* spec : {"cyclic:9", "dihedral:16", "extraspecial:3,p",
                           "extraspecial:3,p2", "quaternion:16"}) {
    auto r = rep(spec);
    std::uint64_t p = order(r.group) % 2 == 0 ? 2 : 3;
    for (int t = 0; t < 25; ++t) {
      std::uint32_t x = r.group.random_point(rng), y = r.group.random_point(rng);
      unsigned k = 1 + static_cast<unsigned>(rng() % 2);
      CHECK(hall_congruence_check(r.group, p, x, y, k));
    }
  }
  // the documented pair
  auto d16 = rep("dihedral:16");
  CHECK(hall_congruence_check(d16.group, 2, d16.gen_points[0], d16.gen_points[1], 1));
}

TEST_CASE("Hall multi-factor congruence") {
  std::mt19937_64 rng(99);
  auto r = rep("dihedral:32");
  for (int t = 0; t < 15; ++t) {
    std::vector<std::uint32_t> xs{r.group.random_point(rng), r.group.random_point(rng),
                                  r.group.random_point(rng)};
    CHECK(hall_multi_check(r.group, 2, xs, 1 + static_cast<unsigned>(rng() % 2)));
  }
}

TEST_CASE("Hall subgroup congruence") {
  auto ab = rep("elemab:3,2");
  CHECK(hall_subgroup_congruence_check(ab.group, 3, ab.group, ab.group, 1));
  auto d32 = rep("dihedral:32");
  PermGroup g2 = lower_central_series(d32.group)[1];
  CHECK(hall_subgroup_congruence_check(d32.group, 2, g2, d32.group, 1));
  auto es = rep("extraspecial:3,p");
  CHECK(hall_subgroup_congruence_check(es.group, 3, es.group, es.group, 1));
}

TEST_CASE("regularity sampling") {
  CHECK(is_regular_sampled(rep("cyclic:8").group, 2, 50, 1));
  CHECK(is_regular_sampled(rep("elemab:3,2").group, 3, 50, 1));
  // class 2 < p = 3 forces regularity
  CHECK(is_regular_sampled(rep("extraspecial:3,p").group, 3, 50, 1));
  // nonabelian 2-groups are never regular; 100 samples find a witness
  CHECK_FALSE(is_regular_sampled(rep("dihedral:8").group, 2, 100, 1));
}

TEST_CASE("regular p-groups: exponent equals max generator order") {
  for (const char* spec : {"cyclic:8", "elemab:3,2", "extraspecial:3,p"}) {
    auto r = rep(spec);
    std::uint64_t p = order(r.group) % 2 == 0 ? 2 : 3;
    std::uint64_t mx = 1;
    for (auto g : r.gen_points) mx = std::max(mx, r.ctx->order_of(g));
    CHECK(group_exponent(r.group, p) == mx);
  }
}
