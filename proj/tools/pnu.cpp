// pnu: a workbench for nu(G) and the non-abelian tensor square of finite
// p-groups.  Subcommands:
//   analyze <group-spec>   structural profile and predicates
//   nu <group-spec>        build nu(G) and print its canonical sections
//   verify ...             run verification suites over a corpus
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "pnu/corpus.hpp"
#include "pnu/nu.hpp"
#include "pnu/pgroup.hpp"
#include "pnu/runner.hpp"
#include "pnu/schur.hpp"

namespace {

std::uint64_t infer_prime(std::uint64_t order) {
  for (std::uint64_t q = 2; q <= order; ++q)
    if (pnu::is_prime(q) && order % q == 0) {
      unsigned k = 0;
      if (!pnu::prime_power_log(order, q, k))
        throw pnu::error("group order " + std::to_string(order) +
                         " is not a prime power; pass a p-group");
      return q;
    }
  throw pnu::error("trivial group has no prime");
}

std::string invariants_string(const std::vector<std::uint64_t>& inv) {
  if (inv.empty()) return "trivial";
  std::string s = "[";
  for (std::size_t i = 0; i < inv.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(inv[i]);
  }
  return s + "]";
}

int cmd_analyze(const std::string& spec, std::uint64_t max_cosets) {
  auto rep = pnu::build_regular_rep(pnu::catalog_group(spec), max_cosets);
  std::uint64_t n = pnu::order(rep.group);
  std::cout << "group:        " << spec << "\n";
  std::cout << "order:        " << n << "\n";
  if (n == 1) return 0;
  std::uint64_t p = infer_prime(n);
  auto prof = pnu::profile(rep.group, p);
  std::cout << "p:            " << p << "\n";
  std::cout << "order = p^n:  n = " << prof.n << "\n";
  std::cout << "class:        " << prof.cls << "\n";
  std::cout << "coclass:      " << prof.coclass << "\n";
  std::cout << "exponent:     " << prof.exponent << "\n";
  std::cout << "lcs orders:   ";
  for (std::size_t i = 0; i < prof.series_orders.size(); ++i)
    std::cout << (i ? " " : "") << prof.series_orders[i];
  std::cout << "\n";
  std::cout << "powerful:     " << (pnu::is_powerful(rep.group, p) ? "yes" : "no") << "\n";
  std::cout << "potent:       " << (pnu::is_potent(rep.group, p) ? "yes" : "no") << "\n";
  std::cout << "abelian:      " << (rep.group.is_abelian() ? "yes" : "no") << "\n";
  if (n <= 243)
    std::cout << "regular (sampled): "
              << (pnu::is_regular_sampled(rep.group, p, 100, 1) ? "yes" : "no") << "\n";
  return 0;
}

int cmd_nu(const std::string& spec, std::uint64_t max_cosets) {
  pnu::NuBuildOptions opts;
  opts.max_cosets = max_cosets;
  pnu::NuGroup nu = pnu::build_nu(spec, opts);
  std::uint64_t p = nu.p;
  std::cout << "group:      " << spec << "   |G| = " << pnu::order(nu.g.group)
            << "  exp = " << nu.exp_g() << "\n";
  std::cout << "nu(G):      order " << pnu::order(nu.nu.group) << "  exp " << nu.exp_nu()
            << "  class " << nu.nu_series.size() - 1 << "\n";
  std::cout << "[G,G~]:     order " << pnu::order(nu.tensor) << "  exp " << nu.exp_tensor()
            << "\n";
  std::cout << "Delta(G):   order " << pnu::order(nu.delta) << "  exp "
            << nu.delta.exponent(p) << "\n";
  std::cout << "Theta(G):   order " << pnu::order(nu.theta) << "  exp "
            << nu.theta.exponent(p) << "\n";
  std::cout << "mu(G):      order " << pnu::order(nu.mu) << "  exp " << nu.mu.exponent(p)
            << "\n";
  std::cout << "M(G):       order " << pnu::order(nu.schur) << "  invariants "
            << invariants_string(pnu::abelian_invariants(nu.schur, p ? p : 2)) << "\n";
  if (pnu::order(nu.g.group) <= 16) {
    auto oracle = pnu::schur_multiplier_oracle(nu.g.group);
    std::cout << "M(G) oracle (bar resolution): " << invariants_string(oracle) << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& corpus_path, const pnu::RunOptions& opts,
               const std::string& out_path, bool timings) {
  std::vector<pnu::CorpusEntry> entries =
      corpus_path.empty() ? pnu::parse_corpus(pnu::default_corpus_text())
                          : pnu::parse_corpus_file(corpus_path);
  pnu::RunReport report = pnu::run_corpus(entries, opts);
  for (const auto& v : report.verdicts) {
    std::cout << pnu::status_name(v.status) << "\t" << v.group << "\t" << v.claim_id;
    if (!v.selector.empty()) std::cout << " [" << v.selector << "]";
    if (v.status == pnu::Status::Fail)
      for (const auto& [k, w] : v.witness) std::cout << "  " << k << "=" << w;
    std::cout << "\n";
  }
  std::cout << "----\n";
  std::cout << "pass " << report.passed << ", fail " << report.failed
            << ", hypothesis-unmet " << report.unmet << ", resource-exceeded "
            << report.exceeded << "\n";
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw pnu::error("cannot write report to " + out_path);
    out << pnu::report_to_json(report.verdicts, timings);
    std::cout << "report: " << out_path << "\n";
  }
  return report.failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for nu(G) and non-abelian tensor squares of finite p-groups"};
  app.require_subcommand(1);

  std::string spec;
  std::uint64_t max_cosets = pnu::kDefaultMaxCosets;

  auto* analyze = app.add_subcommand("analyze", "profile a group");
  analyze->add_option("group", spec, "group spec, e.g. dihedral:16")->required();
  analyze->add_option("--max-cosets", max_cosets, "coset enumeration bound");

  auto* nu = app.add_subcommand("nu", "build nu(G) and print its sections");
  nu->add_option("group", spec, "group spec, e.g. extraspecial:3,p")->required();
  nu->add_option("--max-cosets", max_cosets, "coset enumeration bound");

  std::string corpus_path, out_path;
  bool timings = false;
  pnu::RunOptions ropts;
  auto* verify = app.add_subcommand("verify", "run verification suites over a corpus");
  verify->add_option("--corpus", corpus_path, "corpus file (default: built-in corpus)");
  verify->add_option("--suite", ropts.suite, "suite name or 'all'");
  verify->add_option("--seed", ropts.seed, "seed for sampled checks");
  verify->add_option("--jobs", ropts.jobs, "concurrent corpus entries");
  verify->add_option("--max-cosets", ropts.max_cosets, "default coset enumeration bound");
  verify->add_option("--out", out_path, "write the JSON report here");
  verify->add_flag("--timings", timings,
                   "record wall times in the report (off keeps reports byte-stable)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return cmd_analyze(spec, max_cosets);
    if (nu->parsed()) return cmd_nu(spec, max_cosets);
    if (verify->parsed()) return cmd_verify(corpus_path, ropts, out_path, timings);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
