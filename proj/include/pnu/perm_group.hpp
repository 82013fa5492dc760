#ifndef PNU_PERM_GROUP_HPP
#define PNU_PERM_GROUP_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <unordered_map>
#include <vector>

#include "pnu/cayley.hpp"
#include "pnu/common.hpp"
#include "pnu/perm.hpp"
#include "pnu/presentation.hpp"

namespace pnu {

namespace detail {

// Deterministic Schreier-Sims stabilizer chain for groups given by raw
// permutations.  Small-degree workhorse; groups that live inside a regular
// representation never touch it.  Base points are chosen as the smallest
// moved point, after any prescribed points (the prescribed prefix is what
// pointwise-stabilizer extraction relies on).
class Bsgs {
 public:
  struct Level {
    std::uint32_t beta = 0;
    std::vector<Perm> gens;
    std::vector<Perm> inv_gens;
    std::vector<std::int32_t> where;                       // point -> orbit pos
    std::vector<std::uint32_t> orbit;                      // discovery order
    std::vector<std::pair<std::uint32_t, std::uint32_t>> back;  // orbit pos -> (pred point, gen idx)
  };

  Bsgs(std::size_t degree, const std::vector<Perm>& gens,
       const std::vector<std::uint32_t>& prescribed_base)
      : degree_(degree) {
    for (auto b : prescribed_base) {
      Level lv;
      lv.beta = b;
      levels_.push_back(std::move(lv));
    }
    std::vector<Perm> start;
    for (const auto& g : gens)
      if (!g.is_identity()) start.push_back(g);
    if (!start.empty() && levels_.empty()) {
      std::size_t beta = degree_;
      for (const auto& g : start) beta = std::min(beta, g.first_moved());
      Level lv;
      lv.beta = static_cast<std::uint32_t>(beta);
      levels_.push_back(std::move(lv));
    }
    for (const auto& g : start) add_generator(0, g);
    run();
  }

  std::size_t num_levels() const { return levels_.size(); }
  const Level& level(std::size_t i) const { return levels_[i]; }

  std::uint64_t order() const {
    std::uint64_t n = 1;
    for (const auto& lv : levels_) n = checked_mul(n, std::max<std::size_t>(lv.orbit.size(), 1));
    return n;
  }

  bool contains(const Perm& x) const {
    Perm r = x;
    std::size_t drop = 0;
    return strip(r, 0, drop);
  }

  // Strong generators fixing the first `k` base points pointwise, restricted
  // understanding: they generate the k-point stabilizer of the chain.
  std::vector<Perm> stabilizer_gens(std::size_t k) const {
    if (k >= levels_.size()) return {};
    return levels_[k].gens;
  }

  // Deterministic element enumeration (transversal products), small groups.
  std::vector<Perm> elements() const {
    PNU_CHECK(order() <= kElementThreshold, "element enumeration above threshold");
    std::vector<Perm> out{Perm::identity(degree_)};
    for (std::size_t l = levels_.size(); l-- > 0;) {
      std::vector<Perm> next;
      next.reserve(out.size() * levels_[l].orbit.size());
      for (std::size_t oi = 0; oi < levels_[l].orbit.size(); ++oi) {
        Perm u = transversal(l, levels_[l].orbit[oi]);
        for (const auto& t : out) next.push_back(t * u);
      }
      out = std::move(next);
    }
    PNU_CHECK(out.size() == order(), "transversal products missed elements");
    return out;
  }

  Perm random_element(std::mt19937_64& rng) const {
    Perm r = Perm::identity(degree_);
    for (std::size_t l = 0; l < levels_.size(); ++l) {
      const auto& lv = levels_[l];
      if (lv.orbit.empty()) continue;
      std::uint32_t p = lv.orbit[rng() % lv.orbit.size()];
      r = transversal(l, p) * r;
    }
    return r;
  }

  Perm transversal(std::size_t l, std::uint32_t point) const {
    const Level& lv = levels_[l];
    Perm u = Perm::identity(degree_);
    std::uint32_t p = point;
    while (p != lv.beta) {
      auto [pred, gi] = lv.back[static_cast<std::size_t>(lv.where[p])];
      u = lv.gens[gi] * u;
      p = pred;
    }
    return u;
  }

  // Sifts x through levels [from..); true iff the residue is the identity.
  bool strip(Perm& x, std::size_t from, std::size_t& drop) const {
    for (std::size_t l = from; l < levels_.size(); ++l) {
      std::uint32_t p = x[levels_[l].beta];
      if (p == levels_[l].beta) continue;
      if (levels_[l].where.empty() || levels_[l].where[p] < 0) {
        drop = l;
        return false;
      }
      x = x * transversal(l, p).inverse();
    }
    drop = levels_.size();
    return x.is_identity();
  }

 private:
  void new_level_for(const Perm& g) {
    Level lv;
    lv.beta = static_cast<std::uint32_t>(g.first_moved());
    levels_.push_back(std::move(lv));
  }

  void add_generator(std::size_t l, const Perm& g) {
    levels_[l].gens.push_back(g);
    levels_[l].inv_gens.push_back(g.inverse());
  }

  void compute_orbit(std::size_t l) {
    Level& lv = levels_[l];
    lv.where.assign(degree_, -1);
    lv.orbit.clear();
    lv.back.clear();
    lv.where[lv.beta] = 0;
    lv.orbit.push_back(lv.beta);
    lv.back.push_back({lv.beta, 0});
    for (std::size_t qi = 0; qi < lv.orbit.size(); ++qi) {
      std::uint32_t p = lv.orbit[qi];
      for (std::size_t gi = 0; gi < lv.gens.size(); ++gi) {
        std::uint32_t q = lv.gens[gi][p];
        if (lv.where[q] < 0) {
          lv.where[q] = static_cast<std::int32_t>(lv.orbit.size());
          lv.orbit.push_back(q);
          lv.back.push_back({p, static_cast<std::uint32_t>(gi)});
        }
      }
    }
  }

  // Bottom-up completion: scan Schreier generators at level i; a surviving
  // residue joins levels i+1..drop and processing resumes at the deepest
  // changed level.
  void run() {
    if (levels_.empty()) return;
    for (std::size_t l = 0; l < levels_.size(); ++l) compute_orbit(l);
    std::size_t i = levels_.size() - 1;
    for (;;) {
      bool changed = false;
      for (std::size_t oi = 0; oi < levels_[i].orbit.size() && !changed; ++oi) {
        std::uint32_t p = levels_[i].orbit[oi];
        Perm up = transversal(i, p);
        for (std::size_t gi = 0; gi < levels_[i].gens.size() && !changed; ++gi) {
          std::uint32_t q = levels_[i].gens[gi][p];
          Perm res = up * levels_[i].gens[gi] * transversal(i, q).inverse();
          if (res.is_identity()) continue;
          std::size_t drop = 0;
          if (strip(res, i + 1, drop)) continue;
          if (drop == levels_.size()) {
            new_level_for(res);
            drop = levels_.size() - 1;
            compute_orbit(drop);
          }
          for (std::size_t k = i + 1; k <= drop; ++k) {
            add_generator(k, res);
            compute_orbit(k);
          }
          i = drop;
          changed = true;
        }
      }
      if (changed) continue;
      if (i == 0) break;
      --i;
    }
  }

  std::size_t degree_;
  std::vector<Level> levels_;
};

}  // namespace detail

// Finite permutation group.  Two regimes share one interface: groups living
// inside a regular representation (a CayleyContext) carry generators as
// element points and answer structural queries through element-set BFS, while
// raw permutation groups fall back to a Schreier-Sims chain.  In both cases
// the order is the product of the fundamental orbit lengths of a stabilizer
// chain; in the Cayley regime the chain is {orbit of the identity point,
// trivial stabilizer}, because only the identity fixes a point of a regular
// action.
class PermGroup {
 public:
  PermGroup() = default;

  static PermGroup from_perms(std::size_t degree, std::vector<Perm> gens,
                              std::shared_ptr<const FinitePresentation> pres = nullptr) {
    auto d = std::make_shared<Data>();
    d->degree = degree;
    for (auto& g : gens) {
      PNU_CHECK(g.degree() == degree, "generator degree mismatch");
      if (!g.is_identity()) d->perms.push_back(std::move(g));
    }
    d->perms_ready = true;
    d->pres = std::move(pres);
    PermGroup g;
    g.d_ = std::move(d);
    return g;
  }

  static PermGroup from_ctx(CayleyRef ctx, std::vector<std::uint32_t> gen_pts,
                            std::shared_ptr<const FinitePresentation> pres = nullptr) {
    auto d = std::make_shared<Data>();
    d->degree = ctx->size();
    d->ctx = std::move(ctx);
    std::vector<std::uint32_t> seen;
    for (auto p : gen_pts) {
      if (p == 0) continue;
      if (std::find(seen.begin(), seen.end(), p) == seen.end()) seen.push_back(p);
    }
    d->gen_pts = std::move(seen);
    d->pres = std::move(pres);
    PermGroup g;
    g.d_ = std::move(d);
    return g;
  }

  bool valid() const { return static_cast<bool>(d_); }
  std::size_t degree() const { return d_->degree; }
  const CayleyRef& ctx() const { return d_->ctx; }
  bool has_ctx() const { return static_cast<bool>(d_->ctx); }
  const std::shared_ptr<const FinitePresentation>& presentation() const { return d_->pres; }

  const std::vector<std::uint32_t>& gen_points() const {
    PNU_CHECK(has_ctx(), "gen_points needs a Cayley context");
    return d_->gen_pts;
  }

  const std::vector<Perm>& gens() const {
    std::lock_guard<std::mutex> lk(d_->mu);
    if (!d_->perms_ready) {
      for (auto p : d_->gen_pts) d_->perms.push_back(d_->ctx->perm_of(p));
      d_->perms_ready = true;
    }
    return d_->perms;
  }

  bool same_context(const PermGroup& o) const {
    return has_ctx() && o.has_ctx() && d_->ctx == o.d_->ctx;
  }

  std::uint64_t order() const {
    std::lock_guard<std::mutex> lk(d_->mu);
    return order_locked();
  }

  bool is_trivial() const { return order() == 1; }

  // Element points in BFS discovery order (Cayley regime only).
  const std::vector<std::uint32_t>& elements() const {
    PNU_CHECK(has_ctx(), "element list needs a Cayley context");
    std::lock_guard<std::mutex> lk(d_->mu);
    ensure_elems_locked();
    return d_->elist;
  }

  const DynBitset& element_set() const {
    PNU_CHECK(has_ctx(), "element set needs a Cayley context");
    std::lock_guard<std::mutex> lk(d_->mu);
    ensure_elems_locked();
    return d_->eset;
  }

  bool contains_point(std::uint32_t p) const {
    return element_set().test(p);
  }

  bool contains(const Perm& x) const {
    if (x.degree() != degree()) return false;
    if (has_ctx()) {
      std::uint32_t pt = 0;
      if (!d_->ctx->element_of(x, pt)) return false;
      return contains_point(pt);
    }
    return bsgs().contains(x);
  }

  const detail::Bsgs& bsgs() const {
    PNU_CHECK(!has_ctx(), "generic chain not used in the Cayley regime");
    std::lock_guard<std::mutex> lk(d_->mu);
    if (!d_->bsgs) d_->bsgs = std::make_shared<detail::Bsgs>(d_->degree, d_->perms,
                                                             std::vector<std::uint32_t>{});
    return *d_->bsgs;
  }

  // Exact exponent; for prime p > 0 uses p-power element orders.  Element
  // sweep, guarded by the global threshold.
  std::uint64_t exponent(std::uint64_t p = 0) const {
    std::lock_guard<std::mutex> lk(d_->mu);
    if (d_->exponent) return d_->exponent;
    std::uint64_t e = 1;
    if (has_ctx()) {
      ensure_elems_locked();
      for (auto x : d_->elist) {
        std::uint64_t o = p ? d_->ctx->order_of_ppow(x, p) : d_->ctx->order_of(x);
        e = p ? std::max(e, o) : std::lcm(e, o);
      }
    } else {
      if (!d_->bsgs)
        d_->bsgs = std::make_shared<detail::Bsgs>(d_->degree, d_->perms,
                                                  std::vector<std::uint32_t>{});
      PNU_CHECK(d_->bsgs->order() <= kElementThreshold,
                "exponent needs element enumeration below threshold");
      for (const auto& x : d_->bsgs->elements()) e = std::lcm(e, x.order());
    }
    d_->exponent = e;
    return e;
  }

  std::uint32_t random_point(std::mt19937_64& rng) const {
    const auto& el = elements();
    return el[rng() % el.size()];
  }

  Perm random_perm(std::mt19937_64& rng) const {
    if (has_ctx()) return d_->ctx->perm_of(random_point(rng));
    return bsgs().random_element(rng);
  }

  bool is_abelian() const {
    if (has_ctx()) {
      const auto& g = d_->gen_pts;
      for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
          if (d_->ctx->comm(g[i], g[j]) != 0) return false;
      return true;
    }
    const auto& g = gens();
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = i + 1; j < g.size(); ++j)
        if (!(g[i] * g[j] == g[j] * g[i])) return false;
    return true;
  }

  bool is_subgroup_of(const PermGroup& o) const {
    if (has_ctx() && o.same_context(*this)) {
      for (auto p : d_->gen_pts)
        if (!o.contains_point(p)) return false;
      return true;
    }
    for (const auto& g : gens())
      if (!o.contains(g)) return false;
    return true;
  }

  bool set_equal(const PermGroup& o) const {
    if (order() != o.order()) return false;
    return is_subgroup_of(o);
  }

 private:
  struct Data {
    std::size_t degree = 0;
    CayleyRef ctx;
    std::vector<std::uint32_t> gen_pts;
    mutable std::vector<Perm> perms;
    mutable bool perms_ready = false;
    std::shared_ptr<const FinitePresentation> pres;

    mutable std::mutex mu;
    mutable bool elems_ready = false;
    mutable DynBitset eset;
    mutable std::vector<std::uint32_t> elist;
    mutable std::uint64_t order = 0;
    mutable std::uint64_t exponent = 0;
    mutable std::shared_ptr<detail::Bsgs> bsgs;
  };

  void ensure_elems_locked() const {
    if (d_->elems_ready) return;
    const auto& ctx = *d_->ctx;
    DynBitset set(ctx.size());
    std::vector<std::uint32_t> list;
    set.set(0);
    list.push_back(0);
    std::vector<std::uint32_t> sg;
    for (auto g : d_->gen_pts) {
      sg.push_back(g);
      sg.push_back(ctx.inv(g));
    }
    for (std::size_t qi = 0; qi < list.size(); ++qi) {
      std::uint32_t p = list[qi];
      for (auto g : sg) {
        std::uint32_t q = ctx.mult(p, g);
        if (!set.test(q)) {
          set.set(q);
          list.push_back(q);
        }
      }
    }
    d_->eset = std::move(set);
    d_->elist = std::move(list);
    d_->order = d_->elist.size();
    d_->elems_ready = true;
  }

  std::uint64_t order_locked() const {
    if (d_->order) return d_->order;
    if (has_ctx()) {
      ensure_elems_locked();
    } else {
      if (!d_->bsgs)
        d_->bsgs = std::make_shared<detail::Bsgs>(d_->degree, d_->perms,
                                                  std::vector<std::uint32_t>{});
      d_->order = d_->bsgs->order();
    }
    return d_->order;
  }

  std::shared_ptr<Data> d_;
};

// Group generated by raw permutations, with its stabilizer chain.
inline PermGroup bsgs(const std::vector<Perm>& gens) {
  PNU_CHECK(!gens.empty(), "bsgs needs at least one permutation");
  return PermGroup::from_perms(gens.front().degree(), gens);
}

inline std::uint64_t order(const PermGroup& g) { return g.order(); }
inline bool contains(const PermGroup& g, const Perm& x) { return g.contains(x); }

inline std::uint64_t element_order(const Perm& x) { return x.order(); }

inline std::uint64_t group_exponent(const PermGroup& g, std::uint64_t p = 0) {
  return g.exponent(p);
}

// ---------------------------------------------------------------------------
// Subgroup construction.  In the Cayley regime everything is element-set BFS;
// the generic fall-back enumerates permutations and is meant for small groups.
// ---------------------------------------------------------------------------

namespace detail {

// Closure of a generator list inside a Cayley context.  Appending a generator
// extends the previous closure: old elements only need the new generator
// applied, new elements need every essential generator.
struct CtxClosure {
  const CayleyContext& ctx;
  DynBitset set;
  std::vector<std::uint32_t> list;
  std::vector<std::uint32_t> ess;       // essential generators
  std::vector<std::uint32_t> ess_cols;  // gen then inverse, interleaved

  explicit CtxClosure(const CayleyContext& c) : ctx(c), set(c.size()) {
    set.set(0);
    list.push_back(0);
  }

  bool add(std::uint32_t g) {
    if (g == 0 || set.test(g)) return false;
    std::uint32_t gi = ctx.inv(g);
    ess.push_back(g);
    ess_cols.push_back(g);
    ess_cols.push_back(gi);
    std::size_t old = list.size();
    for (std::size_t i = 0; i < old; ++i) {
      for (std::uint32_t s : {g, gi}) {
        std::uint32_t q = ctx.mult(list[i], s);
        if (!set.test(q)) {
          set.set(q);
          list.push_back(q);
        }
      }
    }
    for (std::size_t i = old; i < list.size(); ++i) {
      for (auto s : ess_cols) {
        std::uint32_t q = ctx.mult(list[i], s);
        if (!set.test(q)) {
          set.set(q);
          list.push_back(q);
        }
      }
    }
    return true;
  }
};

// Breadth-first element enumeration of <gens> as raw permutations.
inline std::vector<Perm> perm_elements(std::size_t degree, const std::vector<Perm>& gens) {
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;
  std::vector<Perm> list{Perm::identity(degree)};
  auto insert = [&](const Perm& p) {
    auto& b = buckets[p.hash()];
    for (auto idx : b)
      if (list[idx] == p) return false;
    b.push_back(list.size());
    list.push_back(p);
    return true;
  };
  buckets[list.front().hash()].push_back(0);
  std::vector<Perm> use;
  for (const auto& g : gens)
    if (!g.is_identity()) {
      use.push_back(g);
      use.push_back(g.inverse());
    }
  for (std::size_t i = 0; i < list.size(); ++i) {
    PNU_CHECK(list.size() <= kElementThreshold, "permutation closure above threshold");
    for (const auto& g : use) {
      Perm q = list[i] * g;
      insert(q);
    }
  }
  return list;
}

}  // namespace detail

inline PermGroup closure(const PermGroup& g, const std::vector<std::uint32_t>& extra_pts) {
  PNU_CHECK(g.has_ctx(), "point closure needs a Cayley context");
  std::vector<std::uint32_t> pts = g.gen_points();
  pts.insert(pts.end(), extra_pts.begin(), extra_pts.end());
  detail::CtxClosure cl(*g.ctx());
  std::vector<std::uint32_t> ess;
  for (auto p : pts)
    if (cl.add(p)) ess.push_back(p);
  return PermGroup::from_ctx(g.ctx(), ess);
}

inline PermGroup closure(const PermGroup& g, const std::vector<Perm>& extra) {
  if (g.has_ctx()) {
    std::vector<std::uint32_t> pts;
    for (const auto& x : extra) {
      std::uint32_t p = 0;
      PNU_CHECK(g.ctx()->element_of(x, p), "closure element outside the ambient group");
      pts.push_back(p);
    }
    return closure(g, pts);
  }
  std::vector<Perm> gens = g.gens();
  for (const auto& x : extra)
    if (!x.is_identity()) gens.push_back(x);
  return PermGroup::from_perms(g.degree(), gens);
}

// Subgroup of the ambient Cayley group generated by the given points.
inline PermGroup span_points(const CayleyRef& ctx, const std::vector<std::uint32_t>& pts) {
  detail::CtxClosure cl(*ctx);
  std::vector<std::uint32_t> ess;
  for (auto p : pts)
    if (cl.add(p)) ess.push_back(p);
  return PermGroup::from_ctx(ctx, ess);
}

// Least subgroup containing the seeds and closed under conjugation by g's
// generators.  `g` supplies the conjugating generators; the result lives in
// the same ambient group.
inline PermGroup normal_closure(const PermGroup& g, const std::vector<std::uint32_t>& seeds) {
  PNU_CHECK(g.has_ctx(), "normal_closure (points) needs a Cayley context");
  const auto& ctx = *g.ctx();
  detail::CtxClosure cl(ctx);
  std::vector<std::uint32_t> pending(seeds.begin(), seeds.end());
  std::vector<std::uint32_t> ess;
  while (!pending.empty()) {
    std::uint32_t s = pending.back();
    pending.pop_back();
    if (!cl.add(s)) continue;
    ess.push_back(s);
    for (auto c : g.gen_points()) {
      std::uint32_t t = ctx.conj(s, c);
      if (!cl.set.test(t)) pending.push_back(t);
      std::uint32_t t2 = ctx.conj(s, ctx.inv(c));
      if (!cl.set.test(t2)) pending.push_back(t2);
    }
  }
  return PermGroup::from_ctx(g.ctx(), ess);
}

inline PermGroup normal_closure(const PermGroup& g, const std::vector<Perm>& seeds) {
  if (g.has_ctx()) {
    std::vector<std::uint32_t> pts;
    for (const auto& x : seeds) {
      std::uint32_t p = 0;
      PNU_CHECK(g.ctx()->element_of(x, p), "seed outside the ambient group");
      pts.push_back(p);
    }
    return normal_closure(g, pts);
  }
  // Generic: iterate conjugation closure on permutations.
  std::vector<Perm> gset;
  std::vector<Perm> work(seeds.begin(), seeds.end());
  std::vector<Perm> conjers = g.gens();
  std::vector<Perm> have;
  auto member = [&](const Perm& x) {
    if (x.is_identity()) return true;
    return PermGroup::from_perms(g.degree(), have).contains(x);
  };
  while (!work.empty()) {
    Perm s = work.back();
    work.pop_back();
    if (member(s)) continue;
    have.push_back(s);
    for (const auto& c : conjers) {
      work.push_back(c.inverse() * s * c);
      work.push_back(c * s * c.inverse());
    }
  }
  return PermGroup::from_perms(g.degree(), have);
}

// [A,B]: normal closure, in <A,B>, of the commutators of the generators.
inline PermGroup commutator_subgroup(const PermGroup& a, const PermGroup& b) {
  if (a.has_ctx() && a.same_context(b)) {
    const auto& ctx = *a.ctx();
    std::vector<std::uint32_t> joint = a.gen_points();
    for (auto p : b.gen_points()) joint.push_back(p);
    PermGroup ab = span_points(a.ctx(), joint);
    std::vector<std::uint32_t> seeds;
    for (auto x : a.gen_points())
      for (auto y : b.gen_points()) seeds.push_back(ctx.comm(x, y));
    return normal_closure(ab, seeds);
  }
  PNU_CHECK(a.degree() == b.degree(), "commutator subgroup needs one parent domain");
  std::vector<Perm> joint = a.gens();
  for (const auto& g : b.gens()) joint.push_back(g);
  PermGroup ab = PermGroup::from_perms(a.degree(), joint);
  std::vector<Perm> seeds;
  for (const auto& x : a.gens())
    for (const auto& y : b.gens())
      seeds.push_back(x.inverse() * y.inverse() * x * y);
  return normal_closure(ab, seeds);
}

// gamma_1 = G, gamma_{i+1} = [gamma_i, G]; stops at the first repetition.
inline std::vector<PermGroup> lower_central_series(const PermGroup& g) {
  std::vector<PermGroup> series{g};
  for (;;) {
    PermGroup next = commutator_subgroup(series.back(), g);
    if (next.order() == series.back().order()) break;
    series.push_back(next);
  }
  return series;
}

inline PermGroup derived_subgroup(const PermGroup& g) {
  return commutator_subgroup(g, g);
}

// G^{p^k}, the subgroup generated by all p^k-th powers.  Generator powers and
// their normal closure come first; an element sweep then repairs until every
// power is inside.
inline PermGroup agemo(const PermGroup& g, std::uint64_t p, unsigned k) {
  std::uint64_t q = checked_pow(p, k);
  if (g.has_ctx()) {
    const auto& ctx = *g.ctx();
    std::vector<std::uint32_t> seeds;
    for (auto x : g.gen_points()) seeds.push_back(ctx.pow(x, q));
    PermGroup h = normal_closure(g, seeds);
    PNU_CHECK(g.order() <= kElementThreshold, "agemo needs element sweep below threshold");
    for (;;) {
      std::vector<std::uint32_t> missing;
      for (auto x : g.elements()) {
        std::uint32_t y = ctx.pow(x, q);
        if (!h.contains_point(y)) missing.push_back(y);
      }
      if (missing.empty()) break;
      std::vector<std::uint32_t> gens = h.gen_points();
      gens.insert(gens.end(), missing.begin(), missing.end());
      h = normal_closure(g, gens);
    }
    return h;
  }
  PNU_CHECK(g.order() <= kElementThreshold, "agemo needs element sweep below threshold");
  std::vector<Perm> seeds;
  for (const auto& x : g.bsgs().elements()) {
    Perm y = Perm::identity(g.degree());
    for (std::uint64_t i = 0; i < q; ++i) y = y * x;
    seeds.push_back(y);
  }
  return normal_closure(g, seeds);
}

// Omega_i(G) = <x : x^{p^i} = 1>.
inline PermGroup omega(const PermGroup& g, std::uint64_t p, unsigned i) {
  std::uint64_t q = checked_pow(p, i);
  PNU_CHECK(g.order() <= kElementThreshold, "omega needs element enumeration below threshold");
  if (g.has_ctx()) {
    const auto& ctx = *g.ctx();
    std::vector<std::uint32_t> pts;
    for (auto x : g.elements())
      if (ctx.pow(x, q) == 0) pts.push_back(x);
    std::sort(pts.begin(), pts.end());
    return span_points(g.ctx(), pts);
  }
  std::vector<Perm> seeds;
  for (const auto& x : g.bsgs().elements())
    if (x.order() != 0 && q % x.order() == 0) seeds.push_back(x);
  return PermGroup::from_perms(g.degree(), seeds);
}

inline PermGroup center(const PermGroup& g) {
  if (g.has_ctx()) {
    const auto& ctx = *g.ctx();
    PNU_CHECK(g.order() <= kElementThreshold, "center needs element enumeration below threshold");
    std::vector<std::uint32_t> pts;
    for (auto x : g.elements()) {
      bool central = true;
      for (auto c : g.gen_points())
        if (ctx.comm(x, c) != 0) {
          central = false;
          break;
        }
      if (central && x != 0) pts.push_back(x);
    }
    std::sort(pts.begin(), pts.end());
    return span_points(g.ctx(), pts);
  }
  std::vector<Perm> elems = detail::perm_elements(g.degree(), g.gens());
  std::vector<Perm> pts;
  for (const auto& x : elems) {
    bool central = true;
    for (const auto& c : g.gens())
      if (!(x * c == c * x)) {
        central = false;
        break;
      }
    if (central) pts.push_back(x);
  }
  return PermGroup::from_perms(g.degree(), pts);
}

// Normality of n in g; on failure writes a conjugation witness description.
inline bool is_normal_in(const PermGroup& n, const PermGroup& g, std::string* witness = nullptr) {
  if (n.has_ctx() && n.same_context(g)) {
    const auto& ctx = *n.ctx();
    for (auto x : n.gen_points())
      for (auto c : g.gen_points()) {
        std::uint32_t t = ctx.conj(x, c);
        if (!n.contains_point(t)) {
          if (witness)
            *witness = "conjugate of element " + std::to_string(x) + " by " +
                       std::to_string(c) + " leaves the subgroup";
          return false;
        }
      }
    return true;
  }
  for (const auto& x : n.gens())
    for (const auto& c : g.gens()) {
      Perm t = c.inverse() * x * c;
      if (!n.contains(t)) {
        if (witness) *witness = "conjugate " + t.to_cycles() + " leaves the subgroup";
        return false;
      }
    }
  return true;
}

// <A,B> for subgroups of one ambient group.
inline PermGroup join(const PermGroup& a, const PermGroup& b) {
  if (a.has_ctx() && a.same_context(b)) {
    std::vector<std::uint32_t> pts = a.gen_points();
    for (auto p : b.gen_points()) pts.push_back(p);
    return span_points(a.ctx(), pts);
  }
  std::vector<Perm> gens = a.gens();
  for (const auto& g : b.gens()) gens.push_back(g);
  return PermGroup::from_perms(a.degree(), gens);
}

// Product subgroup <N1, ..., Nk> of normal subgroups, as the subgroup
// generated by the union.
inline PermGroup subgroup_product(const std::vector<PermGroup>& parts) {
  PNU_CHECK(!parts.empty(), "empty subgroup product");
  PermGroup acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = join(acc, parts[i]);
  return acc;
}

// Iterated left-normed commutator [M, N, N, ..., N] with j copies of N.
inline PermGroup iterated_commutator(const PermGroup& m, const PermGroup& n, unsigned j) {
  PermGroup acc = m;
  for (unsigned i = 0; i < j; ++i) acc = commutator_subgroup(acc, n);
  return acc;
}

}  // namespace pnu

#endif  // PNU_PERM_GROUP_HPP
