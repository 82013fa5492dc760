#ifndef PNU_HOMOMORPHISM_HPP
#define PNU_HOMOMORPHISM_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <random>
#include <unordered_map>
#include <vector>

#include "pnu/cayley.hpp"
#include "pnu/common.hpp"
#include "pnu/perm_group.hpp"
#include "pnu/presentation.hpp"

namespace pnu {

// Regular representation of a finitely presented finite group: one
// permutation per presentation generator, acting on {1..|G|} by right
// multiplication.  Relators evaluate to the identity permutation.
struct RegularRep {
  CayleyRef ctx;
  PermGroup group;                        // the whole group, on its own context
  std::vector<std::uint32_t> gen_points;  // one per presentation generator
};

inline RegularRep build_regular_rep(const FinitePresentation& pres,
                                    std::uint64_t max_cosets = kDefaultMaxCosets) {
  CosetTable t = enumerate_cosets(pres, {}, max_cosets);
  if (t.status() != CosetTable::Status::Complete)
    throw resource_exceeded("coset enumeration passed " + std::to_string(max_cosets) +
                            " live cosets; raise the bound or shrink the group");
  RegularRep rep;
  rep.ctx = std::make_shared<CayleyContext>(t);
  for (int g = 0; g < pres.ngens(); ++g) rep.gen_points.push_back(rep.ctx->gen_point(g));
  rep.group = PermGroup::from_ctx(rep.ctx, rep.gen_points,
                                  std::make_shared<FinitePresentation>(pres));
  return rep;
}

inline std::vector<Perm> regular_representation(const FinitePresentation& pres,
                                                std::uint64_t max_cosets = kDefaultMaxCosets) {
  RegularRep rep = build_regular_rep(pres, max_cosets);
  std::vector<Perm> out;
  for (auto p : rep.gen_points) out.push_back(rep.ctx->perm_of(p));
  return out;
}

// ---------------------------------------------------------------------------
// Homomorphisms.  Defined by generator images and verified at construction:
// every defining relator of the source maps to the identity, and products map
// to products on a random sample.  For sources living in a Cayley context the
// evaluation map is materialized point-by-point, which is also how kernels
// are read off.
// ---------------------------------------------------------------------------

class Homomorphism {
 public:
  static constexpr std::uint32_t kUnset = 0xFFFFFFFFu;

  PermGroup source;
  PermGroup target;

  // Parallel generator/image data.  Cayley sources carry points, generic
  // sources carry permutations.
  std::vector<std::uint32_t> src_gen_pts;
  std::vector<std::uint32_t> img_ids;
  std::vector<Perm> src_gens;
  std::vector<Perm> img_perms;

  // Evaluation for Cayley sources: source point -> target element id.
  std::shared_ptr<const std::vector<std::uint32_t>> pmap;

  // Target element bookkeeping: Cayley targets use points as ids, generic
  // targets an enumerated element table.
  std::shared_ptr<const std::vector<Perm>> target_tab;

  bool target_is_ctx() const { return target.has_ctx(); }

  std::uint32_t identity_id() const { return 0; }

  std::uint32_t target_mult(std::uint32_t a, std::uint32_t b) const {
    if (target_is_ctx()) return target.ctx()->mult(a, b);
    const Perm p = (*target_tab)[a] * (*target_tab)[b];
    return target_index(p);
  }

  std::uint32_t target_index(const Perm& p) const {
    for (std::uint32_t i = 0; i < target_tab->size(); ++i)
      if ((*target_tab)[i] == p) return i;
    throw invariant_violation("image element missing from target table");
  }

  Perm target_perm(std::uint32_t id) const {
    if (target_is_ctx()) return target.ctx()->perm_of(id);
    return (*target_tab)[id];
  }

  std::uint32_t eval_point(std::uint32_t p) const {
    PNU_CHECK(pmap && (*pmap)[p] != kUnset, "evaluation map undefined at point");
    return (*pmap)[p];
  }

  Perm eval(const Perm& x) const {
    PNU_CHECK(source.has_ctx(), "evaluation of raw permutations needs a Cayley source");
    std::uint32_t p = 0;
    PNU_CHECK(source.ctx()->element_of(x, p), "element outside the source group");
    return target_perm(eval_point(p));
  }
};

namespace detail {

inline void spot_check_products(const Homomorphism& f, unsigned samples = 32) {
  if (!f.pmap) return;
  std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
  const auto& elems = f.source.elements();
  for (unsigned i = 0; i < samples; ++i) {
    std::uint32_t x = elems[rng() % elems.size()];
    std::uint32_t y = elems[rng() % elems.size()];
    std::uint32_t xy = f.source.ctx()->mult(x, y);
    PNU_CHECK(f.eval_point(xy) == f.target_mult(f.eval_point(x), f.eval_point(y)),
              "homomorphism fails a product spot check");
  }
}

// Evaluate a relator over generator image ids inside the target.
inline std::uint32_t eval_word_ids(const Homomorphism& f, const Word& w,
                                   const std::vector<std::uint32_t>& ids,
                                   const std::vector<std::uint32_t>& inv_ids) {
  std::uint32_t acc = 0;
  for (const auto& l : w.letters()) {
    std::uint32_t base = l.exp > 0 ? ids[static_cast<std::size_t>(l.gen)]
                                   : inv_ids[static_cast<std::size_t>(l.gen)];
    std::int64_t n = l.exp < 0 ? -l.exp : l.exp;
    for (std::int64_t i = 0; i < n; ++i) acc = f.target_mult(acc, base);
  }
  return acc;
}

inline void verify_relators(const Homomorphism& f, const FinitePresentation& pres,
                            const std::vector<std::uint32_t>& ids) {
  std::vector<std::uint32_t> inv_ids;
  for (auto id : ids)
    inv_ids.push_back(f.target_is_ctx() ? f.target.ctx()->inv(id)
                                        : f.target_index(f.target_perm(id).inverse()));
  for (const auto& r : pres.relators)
    PNU_CHECK(eval_word_ids(f, r, ids, inv_ids) == f.identity_id(),
              "a defining relator does not map to the identity");
}

}  // namespace detail

// Homomorphism from a full Cayley-context group, images given per context
// generator (as target points for Cayley targets).  The evaluation map is
// pushed through the BFS tree of the source.
inline Homomorphism hom_from_ctx_generators(
    const PermGroup& source, const PermGroup& target,
    const std::vector<std::uint32_t>& image_ids,
    std::shared_ptr<const std::vector<Perm>> target_tab = nullptr) {
  PNU_CHECK(source.has_ctx(), "source must live in a Cayley context");
  const auto& ctx = *source.ctx();
  PNU_CHECK(source.order() == ctx.size(), "source must be the full context group");
  PNU_CHECK(static_cast<int>(image_ids.size()) == ctx.ngens(),
            "one image per context generator required");

  Homomorphism f;
  f.source = source;
  f.target = target;
  f.src_gen_pts.resize(image_ids.size());
  for (int g = 0; g < ctx.ngens(); ++g)
    f.src_gen_pts[static_cast<std::size_t>(g)] = ctx.gen_point(g);
  f.img_ids = image_ids;
  if (!target.has_ctx()) {
    if (!target_tab)
      target_tab = std::make_shared<const std::vector<Perm>>(
          detail::perm_elements(target.degree(), target.gens()));
    f.target_tab = target_tab;
  }

  // Images per action column (generator, then its inverse).
  std::vector<std::uint32_t> col_img(static_cast<std::size_t>(2 * ctx.ngens()));
  for (int g = 0; g < ctx.ngens(); ++g) {
    std::uint32_t id = image_ids[static_cast<std::size_t>(g)];
    col_img[static_cast<std::size_t>(2 * g)] = id;
    col_img[static_cast<std::size_t>(2 * g + 1)] =
        target.has_ctx() ? target.ctx()->inv(id)
                         : f.target_index(f.target_perm(id).inverse());
  }
  auto pm = std::make_shared<std::vector<std::uint32_t>>(ctx.size(), Homomorphism::kUnset);
  (*pm)[0] = 0;
  // BFS order: parents precede children, so a single sweep in tree order works.
  {
    std::vector<std::uint32_t> order(ctx.size());
    for (std::uint32_t p = 0; p < ctx.size(); ++p) order[p] = p;
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
      return ctx.depth_of(a) < ctx.depth_of(b);
    });
    for (auto p : order) {
      if (p == 0) continue;
      (*pm)[p] = f.target_mult((*pm)[ctx.parent_of(p)], col_img[ctx.via_of(p)]);
    }
  }
  f.pmap = pm;

  if (source.presentation())
    detail::verify_relators(f, *source.presentation(), image_ids);
  detail::spot_check_products(f);
  return f;
}

// Same construction with permutation images (raw targets).
inline Homomorphism hom_from_ctx_generators(const PermGroup& source,
                                            const PermGroup& target,
                                            const std::vector<Perm>& images) {
  PNU_CHECK(!target.has_ctx(), "pass target points for Cayley targets");
  auto tab = std::make_shared<const std::vector<Perm>>(
      detail::perm_elements(target.degree(), target.gens()));
  std::vector<std::uint32_t> ids;
  for (const auto& im : images) {
    std::uint32_t id = Homomorphism::kUnset;
    for (std::uint32_t i = 0; i < tab->size(); ++i)
      if ((*tab)[i] == im) {
        id = i;
        break;
      }
    PNU_CHECK(id != Homomorphism::kUnset, "image lies outside the target group");
    ids.push_back(id);
  }
  return hom_from_ctx_generators(source, target, ids, tab);
}

// Restriction of a verified homomorphism to a subgroup of its source; the
// evaluation map is shared.
inline Homomorphism restrict_hom(const Homomorphism& f, const PermGroup& sub) {
  PNU_CHECK(f.source.has_ctx() && sub.has_ctx() && f.source.ctx() == sub.ctx(),
            "restriction requires a subgroup of the same context");
  Homomorphism r;
  r.source = sub;
  r.target = f.target;
  r.pmap = f.pmap;
  r.target_tab = f.target_tab;
  r.src_gen_pts = sub.gen_points();
  for (auto p : r.src_gen_pts) r.img_ids.push_back(r.eval_point(p));
  return r;
}

// Homomorphism between raw permutation groups; relators over the source
// generators are required and verified.
inline Homomorphism hom_generic(const PermGroup& source, const PermGroup& target,
                                const std::vector<Perm>& src_gens,
                                const std::vector<Perm>& images,
                                const FinitePresentation& relators) {
  PNU_CHECK(src_gens.size() == images.size(), "generator/image length mismatch");
  Homomorphism f;
  f.source = source;
  f.target = target;
  f.src_gens = src_gens;
  f.img_perms = images;
  // Verify relators directly on permutations.
  for (const auto& r : relators.relators) {
    Perm acc = Perm::identity(target.degree());
    for (const auto& l : r.letters()) {
      Perm base = l.exp > 0 ? images[static_cast<std::size_t>(l.gen)]
                            : images[static_cast<std::size_t>(l.gen)].inverse();
      std::int64_t n = l.exp < 0 ? -l.exp : l.exp;
      for (std::int64_t i = 0; i < n; ++i) acc = acc * base;
    }
    PNU_CHECK(acc.is_identity(), "a defining relator does not map to the identity");
  }
  return f;
}

// ---------------------------------------------------------------------------
// Kernels.  Cayley sources read the kernel off the evaluation map.  Raw
// sources use the graph trick: the group <(g, f(g))> acts on the disjoint
// union of both domains, and the kernel is its pointwise stabilizer of the
// target domain, extracted from a stabilizer chain whose base runs through
// the target points first.
// ---------------------------------------------------------------------------

inline PermGroup hom_image(const Homomorphism& f) {
  if (f.target.has_ctx()) {
    std::vector<std::uint32_t> pts = f.img_ids;
    return span_points(f.target.ctx(), pts);
  }
  std::vector<Perm> imgs;
  if (!f.img_perms.empty()) {
    imgs = f.img_perms;
  } else {
    for (auto id : f.img_ids) imgs.push_back(f.target_perm(id));
  }
  return PermGroup::from_perms(f.target.degree(), imgs);
}

inline PermGroup hom_kernel(const Homomorphism& f) {
  PermGroup kernel;
  if (f.pmap) {
    std::vector<std::uint32_t> pts;
    for (auto p : f.source.elements())
      if ((*f.pmap)[p] == f.identity_id()) pts.push_back(p);
    std::sort(pts.begin(), pts.end());
    kernel = span_points(f.source.ctx(), pts);
    PNU_CHECK(kernel.order() == pts.size(), "kernel point set is not a subgroup");
    // x in ker(f) iff f(x) = identity, sampled.
    std::mt19937_64 rng(0xc0ffee1234abcdefull);
    const auto& elems = f.source.elements();
    for (int i = 0; i < 200; ++i) {
      std::uint32_t x = elems[rng() % elems.size()];
      PNU_CHECK(((*f.pmap)[x] == f.identity_id()) == kernel.contains_point(x),
                "kernel membership disagrees with evaluation");
    }
  } else {
    std::size_t ds = f.source.degree(), dt = f.target.degree();
    std::vector<Perm> graph_gens;
    for (std::size_t i = 0; i < f.src_gens.size(); ++i) {
      std::vector<std::uint32_t> im(ds + dt);
      for (std::size_t p = 0; p < ds; ++p) im[p] = f.src_gens[i][p];
      for (std::size_t p = 0; p < dt; ++p)
        im[ds + p] = static_cast<std::uint32_t>(ds) + f.img_perms[i][p];
      graph_gens.push_back(Perm(std::move(im)));
    }
    std::vector<std::uint32_t> base;
    for (std::size_t p = 0; p < dt; ++p) base.push_back(static_cast<std::uint32_t>(ds + p));
    detail::Bsgs chain(ds + dt, graph_gens, base);
    std::vector<Perm> kgens;
    for (const auto& g : chain.stabilizer_gens(dt)) {
      std::vector<std::uint32_t> im(ds);
      for (std::size_t p = 0; p < ds; ++p) im[p] = g[p];
      kgens.push_back(Perm(std::move(im)));
    }
    kernel = PermGroup::from_perms(ds, kgens);
    // Sampled membership agreement through the graph group.
    std::mt19937_64 rng(0xc0ffee1234abcdefull);
    Perm idt = Perm::identity(dt);
    for (int i = 0; i < 200; ++i) {
      Perm x = f.source.random_perm(rng);
      std::vector<std::uint32_t> im(ds + dt);
      for (std::size_t p = 0; p < ds; ++p) im[p] = x[p];
      for (std::size_t p = 0; p < dt; ++p) im[ds + p] = static_cast<std::uint32_t>(ds + p);
      bool graph_member = chain.contains(Perm(std::move(im)));
      PNU_CHECK(graph_member == kernel.contains(x),
                "kernel membership disagrees with the graph group");
    }
  }
  PNU_CHECK(checked_mul(kernel.order(), hom_image(f).order()) == f.source.order(),
            "|ker| * |im| != |source|");
  return kernel;
}

// ---------------------------------------------------------------------------
// Quotients: the translation action of G on the cosets of a normal subgroup
// is the regular action of G/N, so quotients get a fresh Cayley context.
// Returns the quotient and the canonical projection.
// ---------------------------------------------------------------------------

inline std::pair<PermGroup, Homomorphism> quotient(const PermGroup& g, const PermGroup& n) {
  std::string witness;
  if (!n.is_subgroup_of(g)) throw not_normal("subgroup is not contained in the group");
  if (!is_normal_in(n, g, &witness)) throw not_normal("not normal: " + witness);

  std::vector<std::uint32_t> labels;       // element index -> coset id
  std::vector<std::uint32_t> reps;         // coset id -> representative point
  std::uint32_t m = 0;

  if (g.has_ctx()) {
    const auto& ctx = *g.ctx();
    labels.assign(ctx.size(), Homomorphism::kUnset);
    std::vector<std::uint32_t> sorted = g.elements();
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::uint32_t> ngens;
    for (auto p : n.gen_points()) {
      ngens.push_back(p);
      ngens.push_back(ctx.inv(p));
    }
    std::vector<std::uint32_t> stack;
    for (auto p : sorted) {
      if (labels[p] != Homomorphism::kUnset) continue;
      std::uint32_t id = m++;
      reps.push_back(p);
      labels[p] = id;
      stack.assign(1, p);
      while (!stack.empty()) {
        std::uint32_t q = stack.back();
        stack.pop_back();
        for (auto nn : ngens) {
          std::uint32_t r = ctx.mult(nn, q);  // left multiply: the coset N q
          if (labels[r] == Homomorphism::kUnset) {
            labels[r] = id;
            stack.push_back(r);
          }
        }
      }
    }
    // Quotient context: one action column per generator of g.
    std::vector<std::vector<std::uint32_t>> fwd(g.gen_points().size(),
                                                std::vector<std::uint32_t>(m));
    for (std::size_t gi = 0; gi < g.gen_points().size(); ++gi)
      for (std::uint32_t c = 0; c < m; ++c)
        fwd[gi][c] = labels[ctx.mult(reps[c], g.gen_points()[gi])];
    auto qctx = std::make_shared<CayleyContext>(m, fwd);
    std::vector<std::uint32_t> qgens;
    for (std::size_t gi = 0; gi < fwd.size(); ++gi) qgens.push_back(qctx->gen_point(static_cast<int>(gi)));
    PermGroup q = PermGroup::from_ctx(qctx, qgens);

    PNU_CHECK(checked_mul(q.order(), n.order()) == g.order(), "|Q| * |N| != |G|");

    Homomorphism proj;
    proj.source = g;
    proj.target = q;
    proj.src_gen_pts = g.gen_points();
    for (auto p : proj.src_gen_pts) proj.img_ids.push_back(labels[p]);
    proj.pmap = std::make_shared<std::vector<std::uint32_t>>(std::move(labels));
    detail::spot_check_products(proj);
    return {q, proj};
  }

  // Raw permutation groups: enumerate elements and label cosets the same way.
  std::vector<Perm> elems = detail::perm_elements(g.degree(), g.gens());
  std::sort(elems.begin(), elems.end(), [](const Perm& a, const Perm& b) {
    return a.images() < b.images();
  });
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i].hash()].push_back(i);
  auto find_idx = [&](const Perm& p) -> std::size_t {
    for (auto i : index[p.hash()])
      if (elems[i] == p) return i;
    throw invariant_violation("product left the enumerated group");
  };
  labels.assign(elems.size(), Homomorphism::kUnset);
  std::vector<Perm> ngens;
  for (const auto& x : n.gens()) {
    ngens.push_back(x);
    ngens.push_back(x.inverse());
  }
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (labels[i] != Homomorphism::kUnset) continue;
    std::uint32_t id = m++;
    reps.push_back(static_cast<std::uint32_t>(i));
    labels[i] = id;
    stack.assign(1, i);
    while (!stack.empty()) {
      std::size_t qi = stack.back();
      stack.pop_back();
      for (const auto& nn : ngens) {
        std::size_t r = find_idx(nn * elems[qi]);
        if (labels[r] == Homomorphism::kUnset) {
          labels[r] = id;
          stack.push_back(r);
        }
      }
    }
  }
  std::vector<std::vector<std::uint32_t>> fwd(g.gens().size(), std::vector<std::uint32_t>(m));
  for (std::size_t gi = 0; gi < g.gens().size(); ++gi)
    for (std::uint32_t c = 0; c < m; ++c)
      fwd[gi][c] = labels[find_idx(elems[reps[c]] * g.gens()[gi])];
  auto qctx = std::make_shared<CayleyContext>(m, fwd);
  std::vector<std::uint32_t> qgens;
  for (std::size_t gi = 0; gi < fwd.size(); ++gi) qgens.push_back(qctx->gen_point(static_cast<int>(gi)));
  PermGroup q = PermGroup::from_ctx(qctx, qgens);
  PNU_CHECK(checked_mul(q.order(), n.order()) == g.order(), "|Q| * |N| != |G|");

  Homomorphism proj;
  proj.source = g;
  proj.target = q;
  proj.src_gens = g.gens();
  for (std::size_t gi = 0; gi < g.gens().size(); ++gi)
    proj.img_perms.push_back(qctx->perm_of(labels[find_idx(elems[reps[0]] * g.gens()[gi])]));
  return {q, proj};
}

}  // namespace pnu

#endif  // PNU_HOMOMORPHISM_HPP
