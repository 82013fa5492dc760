#ifndef PNU_SCHUR_HPP
#define PNU_SCHUR_HPP

#include <cstdint>
#include <vector>

#include "pnu/common.hpp"
#include "pnu/perm_group.hpp"
#include "pnu/smith.hpp"

namespace pnu {

// Abelian invariant factors of an abelian p-group, ascending (e.g. [2,4]).
// Counting through the agemo chain: the number of invariant factors of order
// >= p^j is log_p |H^{p^{j-1}}| - log_p |H^{p^j}|.
inline std::vector<std::uint64_t> abelian_invariants(const PermGroup& h, std::uint64_t p) {
  PNU_CHECK(h.is_abelian(), "abelian invariants of a non-abelian group");
  std::vector<unsigned> logs;  // log_p |agemo(H,p,j)|
  PermGroup cur = h;
  for (;;) {
    unsigned k = 0;
    PNU_CHECK(prime_power_log(cur.order(), p, k) || cur.order() == 1,
              "abelian invariants need a p-group");
    logs.push_back(k);
    if (cur.order() == 1) break;
    cur = agemo(cur, p, 1);
  }
  // t_j = #factors of order >= p^j; factors of order exactly p^j: t_j - t_{j+1}
  std::size_t L = logs.size() - 1;
  std::vector<unsigned> t(L + 2, 0);
  for (std::size_t j = 1; j <= L; ++j) t[j] = logs[j - 1] - logs[j];
  std::vector<std::uint64_t> inv;
  for (std::size_t j = 1; j <= L; ++j) {
    PNU_CHECK(t[j] >= t[j + 1], "agemo chain is not log-concave");
    for (unsigned i = 0; i < t[j] - t[j + 1]; ++i)
      inv.push_back(checked_pow(p, static_cast<std::uint64_t>(j)));
  }
  std::uint64_t prod = 1;
  for (auto d : inv) prod = checked_mul(prod, d);
  PNU_CHECK(prod == h.order(), "invariant factors do not multiply to the order");
  return inv;
}

// H_2(G;Z) from the truncated normalized bar resolution, via Smith normal
// form of the boundary matrices.  With C_3 -> C_2 -> C_1 free on tuples of
// non-identity elements, the torsion of ker d2 / im d3 is exactly the set of
// nontrivial elementary divisors of d3, and the free rank is
// (dim C_2 - rank d2) - rank d3, which must vanish for a finite group.
inline std::vector<std::uint64_t> schur_multiplier_oracle(const PermGroup& g) {
  if (g.order() > 16)
    throw resource_exceeded("bar-resolution oracle runs at |G| <= 16");

  // Element table with multiplication by index.
  std::vector<std::vector<std::uint32_t>> mul;
  std::size_t n;
  if (g.has_ctx()) {
    std::vector<std::uint32_t> elems = g.elements();
    std::sort(elems.begin(), elems.end());
    n = elems.size();
    std::vector<std::uint32_t> pos_of(g.ctx()->size(), 0);
    for (std::size_t i = 0; i < n; ++i) pos_of[elems[i]] = static_cast<std::uint32_t>(i);
    mul.assign(n, std::vector<std::uint32_t>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        mul[i][j] = pos_of[g.ctx()->mult(elems[i], elems[j])];
    PNU_CHECK(elems[0] == 0, "identity must index 0");
  } else {
    std::vector<Perm> elems = detail::perm_elements(g.degree(), g.gens());
    std::sort(elems.begin(), elems.end(),
              [](const Perm& a, const Perm& b) { return a.images() < b.images(); });
    n = elems.size();
    auto idx_of = [&](const Perm& p) -> std::uint32_t {
      for (std::size_t i = 0; i < n; ++i)
        if (elems[i] == p) return static_cast<std::uint32_t>(i);
      throw invariant_violation("product escaped the element table");
    };
    mul.assign(n, std::vector<std::uint32_t>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) mul[i][j] = idx_of(elems[i] * elems[j]);
    PNU_CHECK(elems[0].is_identity(), "identity must index 0");
  }

  std::size_t q = n - 1;  // non-identity elements, 1-based in the table
  auto el = [&](std::size_t i) { return i + 1; };  // basis slot -> table index

  // rank of d2: rows C_1 (q), cols C_2 (q^2); d2(g,h) = [h] - [gh] + [g]
  SmithSolver d2(q, q * q);
  for (std::size_t gi = 0; gi < q; ++gi)
    for (std::size_t hi = 0; hi < q; ++hi) {
      std::size_t col = gi * q + hi;
      d2.at(hi, col) += 1;
      std::uint32_t gh = mul[el(gi)][el(hi)];
      if (gh != 0) d2.at(gh - 1, col) -= 1;
      d2.at(gi, col) += 1;
    }
  std::size_t rank_d2 = d2.run().rank;

  // d3: rows C_2 (q^2), cols C_3 (q^3);
  // d3(g,h,k) = (h,k) - (gh,k) + (g,hk) - (g,h)
  SmithSolver d3(q * q, q * q * q);
  for (std::size_t gi = 0; gi < q; ++gi)
    for (std::size_t hi = 0; hi < q; ++hi)
      for (std::size_t ki = 0; ki < q; ++ki) {
        std::size_t col = (gi * q + hi) * q + ki;
        d3.at(hi * q + ki, col) += 1;
        std::uint32_t gh = mul[el(gi)][el(hi)];
        if (gh != 0) d3.at((gh - 1) * q + ki, col) -= 1;
        std::uint32_t hk = mul[el(hi)][el(ki)];
        if (hk != 0) d3.at(gi * q + (hk - 1), col) += 1;
        d3.at(gi * q + hi, col) -= 1;
      }
  SmithResult r3 = d3.run();

  std::size_t free_rank = (q * q - rank_d2) - r3.rank;
  PNU_CHECK(free_rank == 0, "H_2 of a finite group must be finite");
  std::vector<std::uint64_t> out;
  for (auto d : r3.divisors)
    if (d > 1) out.push_back(static_cast<std::uint64_t>(d));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pnu

#endif  // PNU_SCHUR_HPP
