#ifndef PNU_PGROUP_HPP
#define PNU_PGROUP_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "pnu/common.hpp"
#include "pnu/homomorphism.hpp"
#include "pnu/perm_group.hpp"

namespace pnu {

// Throughout, bold-p conventions: "p-or-4" means p for odd p and 4 for p = 2.
inline std::uint64_t bold_p(std::uint64_t p) { return p == 2 ? 4 : p; }

// m(p,r) = (p-1)p^(r-1) for odd p, 2^(r+2) for p = 2.
struct MPR {
  std::uint64_t p = 0;
  unsigned r = 0;
  std::uint64_t m = 0;
};

inline MPR m_of(std::uint64_t p, unsigned r) {
  PNU_CHECK(is_prime(p), "m(p,r) needs a prime");
  PNU_CHECK(r >= 1, "m(p,r) needs r >= 1");
  MPR v{p, r, 0};
  v.m = p == 2 ? checked_pow(2, r + 2) : checked_mul(p - 1, checked_pow(p, r - 1));
  return v;
}

struct PGroupProfile {
  std::uint64_t p = 0;
  unsigned n = 0;        // |G| = p^n
  unsigned cls = 0;      // nilpotency class
  unsigned coclass = 0;  // n - cls  (0 for the trivial group and for C_p)
  std::uint64_t exponent = 1;
  unsigned exp_log = 0;  // exponent = p^exp_log
  std::vector<std::uint64_t> series_orders;  // lower central series orders
};

inline PGroupProfile profile(const PermGroup& g, std::uint64_t p) {
  PNU_CHECK(is_prime(p), "profile needs a prime");
  PGroupProfile pr;
  pr.p = p;
  std::uint64_t n = g.order();
  unsigned k = 0;
  if (!prime_power_log(n, p, k))
    throw error("not a p-group: order " + std::to_string(n) + " is not a power of " +
                std::to_string(p));
  pr.n = k;
  auto series = lower_central_series(g);
  for (const auto& t : series) pr.series_orders.push_back(t.order());
  PNU_CHECK(series.back().order() == 1, "p-group with non-nilpotent series");
  pr.cls = static_cast<unsigned>(series.size()) - 1;
  PNU_CHECK(pr.n >= pr.cls, "class exceeds order exponent");
  pr.coclass = pr.n - pr.cls;
  pr.exponent = g.exponent(p);
  PNU_CHECK(prime_power_log(pr.exponent, p, pr.exp_log) || pr.exponent == 1,
            "exponent is not a p-power");
  return pr;
}

// Powerful: p > 2 and G' <= G^p, or p = 2 and G' <= G^4.
inline bool is_powerful(const PermGroup& g, std::uint64_t p) {
  PermGroup der = derived_subgroup(g);
  PermGroup pw = p == 2 ? agemo(g, 2, 2) : agemo(g, p, 1);
  return der.is_subgroup_of(pw);
}

// Potent: p > 2 and gamma_{p-1}(G) <= G^p, or p = 2 and G' <= G^4.
inline bool is_potent(const PermGroup& g, std::uint64_t p) {
  if (p == 2) return is_powerful(g, 2);
  PermGroup gpm1 = iterated_commutator(g, g, static_cast<unsigned>(p - 2));
  return gpm1.is_subgroup_of(agemo(g, p, 1));
}

// Powerfully embedded: [N,G] <= N^p (N^4 for p = 2).
inline bool is_powerfully_embedded(const PermGroup& n, const PermGroup& g, std::uint64_t p) {
  std::string w;
  if (!is_normal_in(n, g, &w)) throw not_normal(w);
  PermGroup lhs = commutator_subgroup(n, g);
  PermGroup rhs = p == 2 ? agemo(n, 2, 2) : agemo(n, p, 1);
  return lhs.is_subgroup_of(rhs);
}

// Potently embedded: [N,_{p-2} G] <= N^p for odd p, [N,G] <= N^4 for p = 2.
inline bool is_potently_embedded(const PermGroup& n, const PermGroup& g, std::uint64_t p) {
  std::string w;
  if (!is_normal_in(n, g, &w)) throw not_normal(w);
  if (p == 2) return commutator_subgroup(n, g).is_subgroup_of(agemo(n, 2, 2));
  PermGroup lhs = iterated_commutator(n, g, static_cast<unsigned>(p - 2));
  return lhs.is_subgroup_of(agemo(n, p, 1));
}

// gamma_{i+s}(G) = gamma_i(G)^p for every i >= m, checked until the series
// dies.  Series indices past nilpotency mean the trivial group.
inline const PermGroup& series_term(const std::vector<PermGroup>& series, std::size_t i) {
  PNU_CHECK(i >= 1, "series indices are 1-based");
  return i <= series.size() ? series[i - 1] : series.back();
}

inline bool check_power_commutator(const PermGroup& g, std::uint64_t p, unsigned m,
                                   unsigned s) {
  PNU_CHECK(m >= s && s >= 1, "need m >= s >= 1");
  auto series = lower_central_series(g);
  for (unsigned i = m; i <= series.size() + 1; ++i) {
    const PermGroup& gi = series_term(series, i);
    const PermGroup& gis = series_term(series, i + s);
    if (!gis.set_equal(agemo(gi, p, 1))) return false;
    if (gi.order() == 1) break;
  }
  return true;
}

// G1 = C_G(gamma_2(G)/gamma_4(G)) for maximal-class G of order >= p^4:
// the kernel of the conjugation action of G on gamma_2/gamma_4.
struct hypothesis_unmet : error {
  explicit hypothesis_unmet(const std::string& what) : error(what) {}
};

inline PermGroup maximal_class_G1(const PermGroup& g, std::uint64_t p) {
  PGroupProfile pr = profile(g, p);
  if (pr.coclass != 1)
    throw hypothesis_unmet("G1 needs coclass 1, got " + std::to_string(pr.coclass));
  if (pr.n < 4) throw hypothesis_unmet("G1 needs |G| >= p^4");
  auto series = lower_central_series(g);
  const PermGroup& g2 = series_term(series, 2);
  const PermGroup& g4 = series_term(series, 4);

  // Conjugation action of G on the cosets of gamma_4 inside gamma_2.
  const auto& ctx = *g.ctx();
  std::vector<std::uint32_t> cosets;                 // coset reps, index = point
  std::vector<std::uint32_t> coset_of(ctx.size(), Homomorphism::kUnset);
  {
    std::vector<std::uint32_t> sorted = g2.elements();
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::uint32_t> ngens;
    for (auto q : g4.gen_points()) {
      ngens.push_back(q);
      ngens.push_back(ctx.inv(q));
    }
    std::vector<std::uint32_t> stack;
    for (auto x : sorted) {
      if (coset_of[x] != Homomorphism::kUnset) continue;
      std::uint32_t id = static_cast<std::uint32_t>(cosets.size());
      cosets.push_back(x);
      coset_of[x] = id;
      stack.assign(1, x);
      while (!stack.empty()) {
        std::uint32_t y = stack.back();
        stack.pop_back();
        for (auto nn : ngens) {
          std::uint32_t z = ctx.mult(nn, y);
          if (coset_of[z] == Homomorphism::kUnset) {
            coset_of[z] = id;
            stack.push_back(z);
          }
        }
      }
    }
  }
  std::size_t m = cosets.size();
  std::vector<Perm> images;
  for (auto gp : g.gen_points()) {
    std::vector<std::uint32_t> im(m);
    for (std::size_t c = 0; c < m; ++c) im[c] = coset_of[ctx.conj(cosets[c], gp)];
    images.push_back(Perm(std::move(im)));
  }
  PermGroup target = PermGroup::from_perms(m, images);
  Homomorphism act = hom_from_ctx_generators(g, target, images);
  PermGroup g1 = hom_kernel(act);
  PNU_CHECK(checked_mul(g1.order(), p) == g.order(), "G1 must have index p");
  return g1;
}

// ---------------------------------------------------------------------------
// Hall collection congruences.
// ---------------------------------------------------------------------------

// gamma_2(L)^{p^k} gamma_p(L)^{p^{k-1}} ... gamma_{p^k}(L): the collection
// modulus for L, as the subgroup generated by the union of the factors.
inline PermGroup hall_modulus(const PermGroup& l, std::uint64_t p, unsigned k) {
  auto series = lower_central_series(l);
  std::vector<PermGroup> parts;
  parts.push_back(agemo(series_term(series, 2), p, k));
  std::uint64_t idx = 1;
  for (unsigned j = 1; j <= k; ++j) {
    idx = checked_mul(idx, p);  // gamma_{p^j} factor, trivial beyond the class
    std::size_t clamped = idx > series.size() ? series.size() : static_cast<std::size_t>(idx);
    parts.push_back(agemo(series_term(series, clamped), p, k - j));
  }
  return subgroup_product(parts);
}

// (xy)^{p^k} == x^{p^k} y^{p^k} mod the modulus over L = <x,y>, and
// [x,y]^{p^k} == [x^{p^k},y] mod the modulus over L = <x,[x,y]>.
// Both congruences are theorems; false is a bug witness, never group data.
inline bool hall_congruence_check(const PermGroup& g, std::uint64_t p, std::uint32_t x,
                                  std::uint32_t y, unsigned k) {
  PNU_CHECK(g.has_ctx(), "Hall checks run inside a Cayley context");
  const auto& ctx = *g.ctx();
  std::uint64_t q = checked_pow(p, k);

  PermGroup l1 = span_points(g.ctx(), {x, y});
  PermGroup m1 = hall_modulus(l1, p, k);
  std::uint32_t lhs1 = ctx.pow(ctx.mult(x, y), q);
  std::uint32_t rhs1 = ctx.mult(ctx.pow(x, q), ctx.pow(y, q));
  if (!m1.contains_point(ctx.mult(lhs1, ctx.inv(rhs1)))) return false;

  std::uint32_t c = ctx.comm(x, y);
  PermGroup l2 = span_points(g.ctx(), {x, c});
  PermGroup m2 = hall_modulus(l2, p, k);
  std::uint32_t lhs2 = ctx.pow(c, q);
  std::uint32_t rhs2 = ctx.comm(ctx.pow(x, q), y);
  return m2.contains_point(ctx.mult(lhs2, ctx.inv(rhs2)));
}

// Multi-factor collection: (x_1...x_r)^{p^k} == x_1^{p^k}...x_r^{p^k} mod the
// modulus over L = <x_1,...,x_r>.
inline bool hall_multi_check(const PermGroup& g, std::uint64_t p,
                             const std::vector<std::uint32_t>& xs, unsigned k) {
  const auto& ctx = *g.ctx();
  std::uint64_t q = checked_pow(p, k);
  PermGroup l = span_points(g.ctx(), xs);
  PermGroup mod = hall_modulus(l, p, k);
  std::uint32_t prod = 0, pows = 0;
  for (auto x : xs) {
    prod = ctx.mult(prod, x);
    pows = ctx.mult(pows, ctx.pow(x, q));
  }
  return mod.contains_point(ctx.mult(ctx.pow(prod, q), ctx.inv(pows)));
}

// [N^{p^k}, M] == [N,M]^{p^k} mod [M,_p N]^{p^{k-1}} [M,_{p^2} N]^{p^{k-2}}
// ... [M,_{p^k} N], as mutual containment of subgroup products.
inline bool hall_subgroup_congruence_check(const PermGroup& g, std::uint64_t p,
                                           const PermGroup& n, const PermGroup& m,
                                           unsigned k) {
  std::string w;
  if (!is_normal_in(n, g, &w)) throw not_normal(w);
  if (!is_normal_in(m, g, &w)) throw not_normal(w);
  std::vector<PermGroup> modulus_parts;
  std::uint64_t idx = 1;
  for (unsigned j = 1; j <= k; ++j) {
    idx = checked_mul(idx, p);
    PNU_CHECK(idx <= 64, "iterated commutator depth is out of desk range");
    modulus_parts.push_back(
        agemo(iterated_commutator(m, n, static_cast<unsigned>(idx)), p, k - j));
  }
  PermGroup lhs = commutator_subgroup(agemo(n, p, k), m);
  PermGroup rhs = agemo(commutator_subgroup(n, m), p, k);
  std::vector<PermGroup> with_rhs = modulus_parts;
  with_rhs.push_back(rhs);
  PermGroup rhs_mod = subgroup_product(with_rhs);
  std::vector<PermGroup> with_lhs = modulus_parts;
  with_lhs.push_back(lhs);
  PermGroup lhs_mod = subgroup_product(with_lhs);
  return lhs.is_subgroup_of(rhs_mod) && rhs.is_subgroup_of(lhs_mod);
}

// Regularity, sampled: x^p y^p == (xy)^p mod H^p with H = <x,y>'.
// Diagnostics only.
inline bool is_regular_sampled(const PermGroup& g, std::uint64_t p, unsigned samples,
                               std::uint64_t seed) {
  PNU_CHECK(g.order() <= 243, "regularity sampling is limited to |G| <= 3^5");
  const auto& ctx = *g.ctx();
  std::mt19937_64 rng(seed);
  for (unsigned i = 0; i < samples; ++i) {
    std::uint32_t x = g.random_point(rng), y = g.random_point(rng);
    PermGroup h = derived_subgroup(span_points(g.ctx(), {x, y}));
    PermGroup hp = agemo(h, p, 1);
    std::uint32_t lhs = ctx.mult(ctx.pow(x, p), ctx.pow(y, p));
    std::uint32_t rhs = ctx.pow(ctx.mult(x, y), p);
    if (!hp.contains_point(ctx.mult(lhs, ctx.inv(rhs)))) return false;
  }
  return true;
}

}  // namespace pnu

#endif  // PNU_PGROUP_HPP
