#ifndef PNU_VERDICT_HPP
#define PNU_VERDICT_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pnu/common.hpp"

namespace pnu {

enum class Status { Pass, Fail, HypothesisUnmet, ResourceExceeded };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::HypothesisUnmet: return "hypothesis-unmet";
    case Status::ResourceExceeded: return "resource-exceeded";
  }
  return "?";
}

// One verified claim on one group (and optional normal-subgroup selector).
// Checked inequalities and witnesses hold exact integers, serialized as
// decimal strings.
struct Verdict {
  std::string claim_id;
  std::string statement;
  std::string group;
  std::string selector;  // empty when the claim is not N-parameterized
  Status status = Status::Pass;
  std::vector<std::pair<std::string, std::string>> checked;
  std::vector<std::pair<std::string, std::string>> witness;
  std::uint64_t wall_ms = 0;

  void check_int(const std::string& name, std::uint64_t v) {
    checked.emplace_back(name, std::to_string(v));
  }
  void note(const std::string& name, const std::string& v) {
    witness.emplace_back(name, v);
  }
  void note_int(const std::string& name, std::uint64_t v) {
    witness.emplace_back(name, std::to_string(v));
  }
};

// Claim registry: every verified statement has exactly one id.
struct ClaimInfo {
  const char* id;
  const char* suite;
  const char* statement;
};

inline const std::vector<ClaimInfo>& claim_registry() {
  static const std::vector<ClaimInfo> table = {
      {"pc.lift.a", "theorem-A",
       "if gamma_{i+s}(G) = gamma_i(G)^p for all i >= m >= s, then "
       "gamma_{i+s+1}(nu(G)) = gamma_{i+1}(nu(G))^p for i > m"},
      {"pc.lift.b", "theorem-A",
       "p odd, same hypothesis: exp(gamma_{m+1}(nu(G))) divides exp(gamma_m(G))"},
      {"pc.lift.c", "theorem-A",
       "p = 2, same hypothesis with gamma_m(G) powerful: exp(gamma_{m+1}(nu(G))) "
       "divides exp(gamma_m(G))"},
      {"pc.lift.le", "theorem-A",
       "same hypothesis, p odd or i > m: gamma_{i+s+1}(nu(G)) <= gamma_{i+1}(nu(G))^p"},
      {"pc.lift.ge", "theorem-A",
       "same hypothesis, i >= m: gamma_{i+1}(nu(G))^p <= gamma_{i+s+1}(nu(G))"},
      {"nu.kernel.factor", "kernel-K",
       "K = ker(nu(G) -> nu(G/N)) is generated by N, N~, [N,G~], [G,N~], and "
       "|nu(G)| = |K| |nu(G/N)|"},
      {"tensor.kernel.exact", "kernel-K",
       "1 -> [N,G~][G,N~] -> [G,G~] -> [G/N,(G/N)~] -> 1 is exact"},
      {"kerK.lcs", "kernel-K",
       "gamma_s(K) = gamma_s(N) gamma_s(N~) [gamma_{s-1}(N),N~] [N,gamma_{s-1}(N~)] "
       "for all s >= 2"},
      {"kerK.lcs.odd", "kernel-K",
       "p >= 3, 1 < n < p, gamma_n(N) <= N^p: gamma_{n+1}(K) <= gamma_2(N)^p "
       "gamma_2(N~)^p [N,N~]^p"},
      {"kerK.lcs.two", "kernel-K",
       "p = 2, N powerful: gamma_3(K) <= gamma_2(N)^4 gamma_2(N~)^4 [N,N~]^4"},
      {"kerK.potent-embed", "kernel-K",
       "N potent: gamma_s(K) is potently embedded in K for s >= 2"},
      {"kerK.exp", "kernel-K",
       "N potent or gamma_p(N) = 1: exp(K) divides p* exp(N)   (p* = p, 4 for p = 2)"},
      {"nu.exp.quotient.a", "potent",
       "N potent or gamma_p(N) = 1: exp(nu(G)) divides p* exp(nu(G/N)) exp(N)"},
      {"nu.exp.quotient.b", "potent",
       "gamma_{p-2}(N) <= N^p (p >= 5): exp(nu(G)) divides exp(nu(G/N)) exp(N)"},
      {"tensor.exp.quotient.a", "potent",
       "N potent or gamma_p(N) = 1: exp([G,G~]) divides p* exp([G/N,(G/N)~]) exp(N)"},
      {"tensor.exp.quotient.b", "potent",
       "gamma_{p-2}(N) <= N^p (p >= 5): exp([G,G~]) divides exp([G/N,(G/N)~]) exp(N)"},
      {"nu.exp.maximal-class", "maximal-class",
       "G of maximal class: exp(nu(G)) divides (p*)^2 exp(G)"},
      {"sections.exp.maximal-class", "maximal-class",
       "G of maximal class: exp(mu(G)) and exp([G,G~]) divide (p*)^2 exp(G)"},
      {"maximal-class.g1-power", "maximal-class",
       "G of maximal class, |G| >= p^{p+2}: gamma_p(G) = G1^p"},
      {"tensor.exp.log", "log-bound",
       "exp([G,G~]) divides exp(G)^n with n = ceil(log_p(class + 1))"},
      {"tensor.exp.two-maximal", "log-bound",
       "2-group of maximal class: exp([G,G~]) divides exp(G)"},
      {"tensor.exp.coclass.a", "coclass",
       "p odd, coclass r >= 1: exp([G,G~]) divides exp(G)^r exp(gamma_m(G)), "
       "m = (p-1)p^{r-1}"},
      {"tensor.exp.coclass.b", "coclass",
       "p = 2, coclass r >= 1: exp([G,G~]) divides exp(G)^{r+3} exp(gamma_m(G)), "
       "m = 2^{r+2}"},
      {"schur.exp.coclass.a", "coclass",
       "p odd, coclass r: exp(M(G)) and exp(mu(G)) divide exp(G)^{r+1}"},
      {"schur.exp.coclass.b", "coclass",
       "p = 2, coclass r: exp(M(G)) and exp(mu(G)) divide exp(G)^{r+3}"},
      {"coclass.pc.two", "coclass",
       "2-group of coclass r and class >= 2^{r+3}: gamma_i(G)^2 = gamma_{i+s}(G) for "
       "i >= m(2,r) with s = d(gamma_m(G)) = 2^d, d <= r+1"},
      {"coclass.pc.odd", "coclass",
       "odd p, coclass r, class >= 2p^r: gamma_i(G)^p = gamma_{i+s}(G) for i >= m(p,r) "
       "with s = d(gamma_m(G)) = (p-1)p^d, d <= r-1"},
      {"nu.identities", "nu-basic",
       "sampled defining identities: [g,h~]^{[x,y~]} = [g,h~]^{[x,y]}, the six equal "
       "weight-3 commutators, and [[g,h~],[x,y~]] = [[g,h],[x,y]~]"},
      {"nu.lcs", "nu-basic",
       "gamma_{k+1}(nu(G)) = gamma_{k+1}(G) gamma_{k+1}(G~) [gamma_k(G),G~] at every "
       "class step"},
      {"nu.exp.sections", "nu-basic",
       "exp(nu) | exp(G) exp(mu); exp(mu) | exp(M) exp(Delta); exp(Delta) | exp(G); "
       "exp(nu) | exp(G)^2 exp(M); odd |G^ab|: exp(nu) | exp(G) max(exp(G), exp(M))"},
      {"nu.coclass.lower", "nu-basic",
       "coclass(nu(G)) >= coclass(G) + 2n - 1 for |G| = p^n; also |G^ab| <= |Delta(G)|"},
      {"hall.collection", "hall",
       "(xy)^{p^k} = x^{p^k} y^{p^k} and [x,y]^{p^k} = [x^{p^k},y] modulo the "
       "collection modulus, sampled"},
      {"hall.multi", "hall",
       "(x_1 x_2 x_3)^{p^k} = x_1^{p^k} x_2^{p^k} x_3^{p^k} modulo the collection "
       "modulus, sampled"},
      {"hall.subgroup", "hall",
       "[N^{p^k},M] = [N,M]^{p^k} modulo iterated-commutator corrections, on canonical "
       "normal pairs"},
      {"normal.inclusion", "pgroup-lemmas",
       "normal N, M with N <= M [N,G] N^p force N <= M"},
      {"potent.lcs", "pgroup-lemmas",
       "potent G: gamma_{k+1} <= gamma_k^4 (p = 2), gamma_{p-1+k} <= gamma_{k+1}^p "
       "(p odd)"},
      {"omega.exp", "pgroup-lemmas",
       "gamma_{k(p-1)} <= gamma_r^{p^s} with k(p-1) < r + s(p-1): exp(Omega_i(G)) <= "
       "p^{i+k-1} for all i"},
      {"powerful.agemo", "pgroup-lemmas",
       "powerful G: iterated p-th power subgroups Pi_i(G) equal G^{p^i}"},
  };
  return table;
}

inline const ClaimInfo& claim_info(const std::string& id) {
  for (const auto& c : claim_registry())
    if (id == c.id) return c;
  throw error("unknown claim id " + id);
}

inline std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& c : claim_registry()) {
    std::string s = c.suite;
    bool seen = false;
    for (const auto& t : out) seen = seen || t == s;
    if (!seen) out.push_back(s);
  }
  return out;
}

// Canonical report order.
inline void sort_verdicts(std::vector<Verdict>& v) {
  std::sort(v.begin(), v.end(), [](const Verdict& a, const Verdict& b) {
    if (a.group != b.group) return a.group < b.group;
    if (a.claim_id != b.claim_id) return a.claim_id < b.claim_id;
    return a.selector < b.selector;
  });
}

inline nlohmann::ordered_json verdict_to_json(const Verdict& v, bool timings) {
  nlohmann::ordered_json j;
  j["claim_id"] = v.claim_id;
  j["ref"] = v.statement;
  j["group"] = v.group;
  if (!v.selector.empty()) j["selector"] = v.selector;
  j["status"] = status_name(v.status);
  nlohmann::ordered_json checked = nlohmann::ordered_json::object();
  for (const auto& [k, val] : v.checked) checked[k] = val;
  j["checked"] = checked;
  nlohmann::ordered_json wit = nlohmann::ordered_json::object();
  for (const auto& [k, val] : v.witness) wit[k] = val;
  j["witness"] = wit;
  j["wall_time_ms"] = timings ? v.wall_ms : 0;
  return j;
}

inline std::string report_to_json(const std::vector<Verdict>& verdicts, bool timings) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& v : verdicts) arr.push_back(verdict_to_json(v, timings));
  return arr.dump(2) + "\n";
}

}  // namespace pnu

#endif  // PNU_VERDICT_HPP
