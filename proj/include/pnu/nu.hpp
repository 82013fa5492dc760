#ifndef PNU_NU_HPP
#define PNU_NU_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pnu/common.hpp"
#include "pnu/homomorphism.hpp"
#include "pnu/pgroup.hpp"
#include "pnu/presentation.hpp"
#include "pnu/schur.hpp"

namespace pnu {

// ---------------------------------------------------------------------------
// The nu-group of G: generated by two copies of G subject to
//   [g1, g2~]^{g3} = [g1^{g3}, (g2^{g3})~] = [g1, g2~]^{g3~}
// over an index set of triples.  Generator-indexed triples are the default
// build; element-indexed triples (a full transversal) are the oracle form.
// ---------------------------------------------------------------------------

enum class NuIndexMode { Generators, Elements };

inline FinitePresentation nu_presentation(const FinitePresentation& pres,
                                          NuIndexMode mode = NuIndexMode::Generators,
                                          std::uint64_t max_cosets = kDefaultMaxCosets) {
  int d = pres.ngens();
  FinitePresentation out;
  for (const auto& n : pres.generator_names) out.generator_names.push_back(n);
  for (const auto& n : pres.generator_names) out.generator_names.push_back(n + "_ph");

  for (const auto& r : pres.relators) out.add_relator(r);
  for (const auto& r : pres.relators) out.add_relator(r.shifted(d));

  std::vector<Word> index_words;
  if (mode == NuIndexMode::Generators) {
    for (int g = 0; g < d; ++g) index_words.push_back(Word::gen(g));
  } else {
    RegularRep rep = build_regular_rep(pres, max_cosets);
    if (rep.group.order() > 16)
      throw resource_exceeded("element-indexed nu presentations run at |G| <= 16");
    for (std::uint32_t q = 0; q < rep.ctx->size(); ++q)
      index_words.push_back(rep.ctx->word_of(q));
  }

  auto phi = [d](const Word& w) { return w.shifted(d); };
  for (const auto& w1 : index_words)
    for (const auto& w2 : index_words) {
      Word t = Word::comm(w1, phi(w2));
      for (const auto& w3 : index_words) {
        Word rhs = Word::comm(w1.conj(w3), phi(w2.conj(w3)));
        out.add_relator(t.conj(w3) * rhs.inverse());
        out.add_relator(t.conj(phi(w3)) * rhs.inverse());
      }
    }
  return out;
}

// ---------------------------------------------------------------------------
// NuGroup: nu(G) with both embeddings of G and the canonical subgroups
// [G,G~], Delta, Theta, mu and M(G) = mu/Delta, plus rho and its derived
// restriction.  Everything is verified at build time; a violated invariant
// is a hard failure, never a silently wrong bundle.
// ---------------------------------------------------------------------------

struct NuBuildOptions {
  std::uint64_t max_cosets = kDefaultMaxCosets;
  // Element-indexed oracle comparison: automatic at |G| <= 16.
  bool oracle_auto = true;
  bool oracle_force = false;
};

struct NuGroup {
  FinitePresentation g_pres;
  FinitePresentation nu_pres;
  std::uint64_t p = 0;  // prime when G is a p-group, else 0

  RegularRep g;
  RegularRep nu;

  std::vector<std::uint32_t> embed_gen;      // nu-points of the G-copy generators
  std::vector<std::uint32_t> embed_phi_gen;  // nu-points of the phi-copy generators
  std::vector<std::uint32_t> embed_map;      // G-point -> nu-point
  std::vector<std::uint32_t> embed_phi_map;

  Homomorphism rho;        // nu(G) -> G, both copies to g
  PermGroup tensor;        // [G, G~]
  PermGroup delta;         // <[g, g~] : g in G>
  PermGroup theta;         // ker rho
  PermGroup mu;            // ker(rho restricted to the tensor)
  PermGroup derived;       // G' inside G
  Homomorphism rho_prime;  // tensor -> G' (restriction of rho)
  PermGroup schur;         // mu / delta
  Homomorphism schur_proj;

  std::vector<PermGroup> g_series;   // lower central series of G
  std::vector<PermGroup> nu_series;  // lower central series of nu(G)

  std::uint32_t embed(std::uint32_t g_point) const { return embed_map[g_point]; }
  std::uint32_t embed_phi(std::uint32_t g_point) const { return embed_phi_map[g_point]; }

  // Image in nu of a subgroup of G under either embedding.
  PermGroup embed_subgroup(const PermGroup& h, bool phi_copy) const {
    const auto& map = phi_copy ? embed_phi_map : embed_map;
    std::vector<std::uint32_t> pts;
    for (auto q : h.gen_points()) pts.push_back(map[q]);
    return span_points(nu.ctx, pts);
  }

  std::uint64_t exp_g() const { return g.group.exponent(p); }
  std::uint64_t exp_nu() const { return nu.group.exponent(p); }
  std::uint64_t exp_tensor() const { return tensor.exponent(p); }
};

namespace detail {

// Pushforward of G's BFS tree through per-generator images inside nu.
inline std::vector<std::uint32_t> push_embedding(const CayleyContext& gctx,
                                                 const CayleyContext& nuctx,
                                                 const std::vector<std::uint32_t>& gen_imgs) {
  std::vector<std::uint32_t> col_img(static_cast<std::size_t>(2 * gctx.ngens()));
  for (int g = 0; g < gctx.ngens(); ++g) {
    col_img[static_cast<std::size_t>(2 * g)] = gen_imgs[static_cast<std::size_t>(g)];
    col_img[static_cast<std::size_t>(2 * g + 1)] = nuctx.inv(gen_imgs[static_cast<std::size_t>(g)]);
  }
  std::vector<std::uint32_t> order(gctx.size());
  for (std::uint32_t q = 0; q < gctx.size(); ++q) order[q] = q;
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return gctx.depth_of(a) < gctx.depth_of(b);
  });
  std::vector<std::uint32_t> map(gctx.size(), 0);
  for (auto q : order) {
    if (q == 0) continue;
    map[q] = nuctx.mult(map[gctx.parent_of(q)], col_img[gctx.via_of(q)]);
  }
  return map;
}

}  // namespace detail

inline NuGroup build_nu(const FinitePresentation& pres,
                        const NuBuildOptions& opts = NuBuildOptions{}) {
  NuGroup b;
  b.g_pres = pres;
  b.g = build_regular_rep(pres, opts.max_cosets);
  {
    std::uint64_t n = b.g.group.order();
    for (std::uint64_t q = 2; q <= n; ++q)
      if (is_prime(q) && n % q == 0) {
        unsigned k = 0;
        b.p = prime_power_log(n, q, k) ? q : 0;
        break;
      }
  }

  b.nu_pres = nu_presentation(pres, NuIndexMode::Generators);
  b.nu = build_regular_rep(b.nu_pres, opts.max_cosets);
  const auto& nuctx = *b.nu.ctx;
  const auto& gctx = *b.g.ctx;
  int d = pres.ngens();

  for (int i = 0; i < d; ++i) {
    b.embed_gen.push_back(b.nu.gen_points[static_cast<std::size_t>(i)]);
    b.embed_phi_gen.push_back(b.nu.gen_points[static_cast<std::size_t>(d + i)]);
  }
  b.embed_map = detail::push_embedding(gctx, nuctx, b.embed_gen);
  b.embed_phi_map = detail::push_embedding(gctx, nuctx, b.embed_phi_gen);

  // rho: both copies map onto the same generators of G.  Construction
  // verifies every nu relator dies in G.
  {
    std::vector<std::uint32_t> imgs;
    for (int i = 0; i < d; ++i) imgs.push_back(b.g.gen_points[static_cast<std::size_t>(i)]);
    for (int i = 0; i < d; ++i) imgs.push_back(b.g.gen_points[static_cast<std::size_t>(i)]);
    b.rho = hom_from_ctx_generators(b.nu.group, b.g.group, imgs);
  }
  // rho o embed = id on both copies (hence both embeddings are injective).
  for (std::uint32_t q = 0; q < gctx.size(); ++q) {
    PNU_CHECK(b.rho.eval_point(b.embed_map[q]) == q, "rho o embed is not the identity");
    PNU_CHECK(b.rho.eval_point(b.embed_phi_map[q]) == q,
              "rho o embed_phi is not the identity");
  }

  // tensor = normal closure of the generator commutators [x, y~]
  {
    std::vector<std::uint32_t> seeds;
    for (auto x : b.embed_gen)
      for (auto y : b.embed_phi_gen) seeds.push_back(nuctx.comm(x, y));
    b.tensor = normal_closure(b.nu.group, seeds);
  }

  // Delta needs the diagonal commutator of every element of G.
  PNU_CHECK(b.g.group.order() <= kElementThreshold, "Delta needs an element sweep of G");
  {
    std::vector<std::uint32_t> pts;
    for (auto q : b.g.group.elements())
      pts.push_back(nuctx.comm(b.embed_map[q], b.embed_phi_map[q]));
    std::sort(pts.begin(), pts.end());
    b.delta = span_points(b.nu.ctx, pts);
  }

  b.theta = hom_kernel(b.rho);
  b.derived = derived_subgroup(b.g.group);
  b.rho_prime = restrict_hom(b.rho, b.tensor);
  PNU_CHECK(hom_image(b.rho_prime).set_equal(b.derived),
            "rho' does not map the tensor onto G'");
  b.mu = hom_kernel(b.rho_prime);

  // Canonical-subgroup invariants.
  PNU_CHECK(b.nu.group.order() ==
                checked_mul(checked_mul(b.g.group.order(), b.g.group.order()),
                            b.tensor.order()),
            "|nu| != |G|^2 * |[G,G~]|");
  PNU_CHECK(checked_mul(b.theta.order(), b.g.group.order()) == b.nu.group.order(),
            "|Theta| * |G| != |nu|");
  for (const PermGroup* s : {&b.tensor, &b.delta, &b.theta, &b.mu}) {
    std::string w;
    PNU_CHECK(is_normal_in(*s, b.nu.group, &w), "canonical subgroup not normal: " + w);
  }
  PNU_CHECK(b.delta.is_subgroup_of(b.mu) && b.mu.is_subgroup_of(b.tensor),
            "Delta <= mu <= tensor fails");
  PNU_CHECK(b.mu.element_set() == b.theta.element_set().intersect(b.tensor.element_set()),
            "mu != Theta intersect [G,G~]");

  auto [schur, sproj] = quotient(b.mu, b.delta);
  b.schur = schur;
  b.schur_proj = sproj;
  PNU_CHECK(b.schur.is_abelian(), "mu/Delta is not abelian");

  // |G^ab| divides |Delta|.
  PNU_CHECK(b.delta.order() % (b.g.group.order() / b.derived.order()) == 0 &&
                b.delta.order() >= b.g.group.order() / b.derived.order(),
            "|G^ab| <= |Delta| fails");

  b.g_series = lower_central_series(b.g.group);
  b.nu_series = lower_central_series(b.nu.group);
  PNU_CHECK(b.nu_series.size() <= b.g_series.size() + 1,
            "class(nu) exceeds class(G) + 1");

  // Exponent relations between nu(G) and its sections.
  {
    std::uint64_t eg = b.exp_g(), enu = b.exp_nu();
    std::uint64_t emu = b.mu.exponent(b.p), edel = b.delta.exponent(b.p);
    std::uint64_t em = b.schur.exponent(b.p);
    PNU_CHECK(checked_mul(eg, emu) % enu == 0, "exp(nu) divides exp(G) exp(mu) fails");
    PNU_CHECK(checked_mul(em, edel) % emu == 0, "exp(mu) divides exp(M) exp(Delta) fails");
    PNU_CHECK(eg % edel == 0, "exp(Delta) divides exp(G) fails");
    PNU_CHECK(checked_mul(checked_mul(eg, eg), em) % enu == 0,
              "exp(nu) divides exp(G)^2 exp(M) fails");
  }

  // Element-indexed oracle: the full presentation must enumerate to the same
  // order.  A mismatch means generator indexing was insufficient for this
  // group, which aborts the build.
  if (opts.oracle_force || (opts.oracle_auto && b.g.group.order() <= 16)) {
    FinitePresentation oracle = nu_presentation(pres, NuIndexMode::Elements, opts.max_cosets);
    CosetTable t = enumerate_cosets(oracle, {}, opts.max_cosets);
    PNU_CHECK(t.status() == CosetTable::Status::Complete,
              "element-indexed oracle enumeration exceeded its bound");
    PNU_CHECK(t.live_count() == b.nu.group.order(),
              "generator-indexed and element-indexed nu presentations disagree: " +
                  std::to_string(b.nu.group.order()) + " vs " +
                  std::to_string(t.live_count()));
  }
  return b;
}

inline NuGroup build_nu(const std::string& spec,
                        const NuBuildOptions& opts = NuBuildOptions{}) {
  return build_nu(catalog_group(spec), opts);
}

// g (x) h realized as [g, h~] inside nu(G).
inline std::uint32_t tensor_of(const NuGroup& nu, std::uint32_t x, std::uint32_t y) {
  std::uint32_t t = nu.nu.ctx->comm(nu.embed(x), nu.embed_phi(y));
  PNU_CHECK(nu.tensor.contains_point(t), "tensor element left [G,G~]");
  return t;
}

// gamma_{k+1}(nu(G)) = gamma_{k+1}(G) gamma_{k+1}(G~) [gamma_k(G), G~],
// both sides computed inside nu(G).
inline bool gamma_nu_check(const NuGroup& nu, unsigned k) {
  PNU_CHECK(k >= 1, "gamma_nu_check needs k >= 1");
  const PermGroup& lhs = series_term(nu.nu_series, k + 1);
  const PermGroup& gk1 = series_term(nu.g_series, k + 1);
  const PermGroup& gk = series_term(nu.g_series, k);
  PermGroup a = nu.embed_subgroup(gk1, false);
  PermGroup bb = nu.embed_subgroup(gk1, true);
  PermGroup c = commutator_subgroup(nu.embed_subgroup(gk, false),
                                    nu.embed_subgroup(nu.g_series[0], true));
  PermGroup rhs = subgroup_product({a, bb, c});
  return lhs.set_equal(rhs);
}

// The defining commutator identities, sampled: for g,h,x,y in G,
//  (i)   [g,h~]^{[x,y~]} = [g,h~]^{[x,y]}
//  (ii)  [g,h~,x~] = [g,h,x~] = [g,h~,x] = [g~,h,x~] = [g~,h~,x] = [g~,h,x]
//  (iii) [[g,h~],[x,y~]] = [[g,h],[x,y]~]
inline bool basic_identity_check(const NuGroup& nu, unsigned samples, std::uint64_t seed) {
  const auto& ctx = *nu.nu.ctx;
  std::mt19937_64 rng(seed);
  const auto& elems = nu.g.group.elements();
  auto pick = [&]() { return elems[rng() % elems.size()]; };
  for (unsigned i = 0; i < samples; ++i) {
    std::uint32_t g = pick(), h = pick(), x = pick(), y = pick();
    std::uint32_t eg = nu.embed(g), ehp = nu.embed_phi(h);
    std::uint32_t ex = nu.embed(x), exp_ = nu.embed_phi(x);
    std::uint32_t eh = nu.embed(h);
    std::uint32_t egp = nu.embed_phi(g);
    std::uint32_t eyp = nu.embed_phi(y), ey = nu.embed(y);

    std::uint32_t t = ctx.comm(eg, ehp);
    // (i)
    std::uint32_t lhs1 = ctx.conj(t, ctx.comm(ex, eyp));
    std::uint32_t rhs1 = ctx.conj(t, ctx.comm(ex, ey));
    if (lhs1 != rhs1) return false;
    // (ii)
    std::uint32_t c1 = ctx.comm(ctx.comm(eg, ehp), exp_);
    std::uint32_t c2 = ctx.comm(ctx.comm(eg, eh), exp_);
    std::uint32_t c3 = ctx.comm(ctx.comm(eg, ehp), ex);
    std::uint32_t c4 = ctx.comm(ctx.comm(egp, eh), exp_);
    std::uint32_t c5 = ctx.comm(ctx.comm(egp, ehp), ex);
    std::uint32_t c6 = ctx.comm(ctx.comm(egp, eh), ex);
    if (!(c1 == c2 && c2 == c3 && c3 == c4 && c4 == c5 && c5 == c6)) return false;
    // (iii)
    std::uint32_t lhs3 = ctx.comm(ctx.comm(eg, ehp), ctx.comm(ex, eyp));
    std::uint32_t rhs3 = ctx.comm(ctx.comm(eg, eh), nu.embed_phi(nu.g.ctx->comm(x, y)));
    if (lhs3 != rhs3) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// K(N) = ker(pi~: nu(G) -> nu(G/N)) for a normal subgroup N of G, together
// with the quotient bundle.  K is also generated by N, N~ and the mixed
// commutators [N,G~], [G,N~]; the build asserts that description.
// ---------------------------------------------------------------------------

struct KernelK {
  PermGroup n_in_g;
  NuGroup quotient_nu;      // nu(G/N)
  Homomorphism projection;  // pi~
  PermGroup k;              // ker(pi~) inside nu(G)
  PermGroup mixed;          // [N,G~][G,N~] inside nu(G)
};

inline KernelK kernel_K(const NuGroup& nu, const PermGroup& n,
                        const NuBuildOptions& opts = NuBuildOptions{}) {
  std::string w;
  if (!n.is_subgroup_of(nu.g.group)) throw not_normal("N is not a subgroup of G");
  if (!is_normal_in(n, nu.g.group, &w)) throw not_normal(w);

  KernelK out;
  out.n_in_g = n;

  FinitePresentation bar = nu.g_pres;
  for (auto q : n.gen_points()) bar.add_relator(nu.g.ctx->word_of(q));
  // Quotient bundles skip the element-indexed oracle: the factorization
  // |nu(G)| = |K| |nu(G/N)| and the verified projection pin them instead.
  NuBuildOptions qopts = opts;
  qopts.oracle_auto = false;
  out.quotient_nu = build_nu(bar, qopts);

  std::vector<std::uint32_t> imgs = out.quotient_nu.nu.gen_points;
  out.projection = hom_from_ctx_generators(nu.nu.group, out.quotient_nu.nu.group, imgs);
  out.k = hom_kernel(out.projection);

  PNU_CHECK(checked_mul(out.k.order(), out.quotient_nu.nu.group.order()) ==
                nu.nu.group.order(),
            "|nu(G)| != |K| * |nu(G/N)|");

  PermGroup en = nu.embed_subgroup(n, false);
  PermGroup enp = nu.embed_subgroup(n, true);
  PermGroup eg = nu.embed_subgroup(nu.g_series[0], false);
  PermGroup egp = nu.embed_subgroup(nu.g_series[0], true);
  PermGroup m1 = commutator_subgroup(en, egp);
  PermGroup m2 = commutator_subgroup(eg, enp);
  out.mixed = join(m1, m2);
  PermGroup described = subgroup_product({en, enp, m1, m2});
  PNU_CHECK(described.set_equal(out.k),
            "K is not generated by N, N~ and the mixed commutators");
  return out;
}

}  // namespace pnu

#endif  // PNU_NU_HPP
