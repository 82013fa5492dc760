// Acceptance suite: runs each criterion at its stated tolerance and prints
// one pass/fail line per criterion.  Exit code 0 iff every criterion passes.
//
//   1. nu(C2) has order 8 and exponent 4; nu(C3) has exponent 3.        < 1 s
//   2. generator- vs element-indexed nu presentations agree, and
//      |nu| = |G|^2 |[G,G~]|, for every corpus group with |G| <= 16.    < 60 s
//   3. mu/Delta abelian invariants equal bar-resolution H2 invariants
//      for every corpus group with |G| <= 16.                           < 5 min
//   4. the shipped corpus runs every suite with zero fail verdicts.     < 30 min
//   5. exp([G,G~]) divides exp(G) for dihedral/semidihedral/quaternion
//      groups of orders 8..32.                                          < 2 min
//   6. two sequential runs of criterion 4 produce byte-identical JSON.
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "pnu/nu.hpp"
#include "pnu/runner.hpp"
#include "pnu/schur.hpp"

using namespace pnu;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
  int id;
  double limit_s;
  bool pass = true;
  std::vector<std::string> problems;
  double elapsed_s = 0;

  void fail(const std::string& what) {
    pass = false;
    problems.push_back(what);
  }
};

int g_exit = 0;

void report(Criterion& c, const std::string& summary) {
  bool in_time = c.elapsed_s < c.limit_s;
  bool ok = c.pass && in_time;
  std::printf("%s criterion %d: %s (%.1fs, limit %.0fs)\n", ok ? "PASS" : "FAIL", c.id,
              summary.c_str(), c.elapsed_s, c.limit_s);
  if (!in_time) std::printf("     over time budget\n");
  for (const auto& p : c.problems) std::printf("     %s\n", p.c_str());
  if (!ok) g_exit = 1;
  std::fflush(stdout);
}

template <typename F>
void timed(Criterion& c, F&& body) {
  auto t0 = Clock::now();
  try {
    body();
  } catch (const std::exception& e) {
    c.fail(std::string("exception: ") + e.what());
  }
  c.elapsed_s = std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_inv(const std::vector<std::uint64_t>& inv) {
  std::string s = "[";
  for (std::size_t i = 0; i < inv.size(); ++i) s += (i ? "," : "") + std::to_string(inv[i]);
  return s + "]";
}

}  // namespace

int main(int argc, char** argv) {
  std::string corpus_path;
  std::string workdir = "acceptance-out";
  for (int i = 1; i + 1 < argc; i += 2) {
    std::string a = argv[i];
    if (a == "--corpus") corpus_path = argv[i + 1];
    else if (a == "--workdir") workdir = argv[i + 1];
  }
  std::filesystem::create_directories(workdir);

  std::vector<CorpusEntry> corpus = corpus_path.empty()
                                        ? parse_corpus(default_corpus_text())
                                        : parse_corpus_file(corpus_path);

  // --- criterion 1 -------------------------------------------------------
  {
    Criterion c{1, 1.0};
    timed(c, [&] {
      NuGroup c2 = build_nu("cyclic:2");
      if (order(c2.nu.group) != 8) c.fail("|nu(C2)| != 8");
      if (c2.exp_nu() != 4) c.fail("exp(nu(C2)) != 4");
      NuGroup c3 = build_nu("cyclic:3");
      if (c3.exp_nu() != 3) c.fail("exp(nu(C3)) != 3");
    });
    report(c, "nu(C2) order 8 exponent 4; nu(C3) exponent 3");
  }

  // --- criterion 2 -------------------------------------------------------
  {
    Criterion c{2, 60.0};
    int checked = 0;
    timed(c, [&] {
      for (const auto& e : corpus) {
        FinitePresentation pres = catalog_group(e.group);
        CosetTable tg = enumerate_cosets(pres, {});
        if (tg.status() != CosetTable::Status::Complete || tg.live_count() > 16) continue;
        NuBuildOptions opts;
        opts.oracle_auto = false;  // the comparison below is the explicit oracle
        NuGroup nu = build_nu(pres, opts);
        auto oracle_pres = nu_presentation(pres, NuIndexMode::Elements);
        CosetTable to = enumerate_cosets(oracle_pres, {});
        if (to.status() != CosetTable::Status::Complete) {
          c.fail(e.group + ": oracle enumeration exceeded its bound");
          continue;
        }
        if (to.live_count() != order(nu.nu.group))
          c.fail(e.group + ": element-indexed order " + std::to_string(to.live_count()) +
                 " != generator-indexed order " + std::to_string(order(nu.nu.group)));
        std::uint64_t expect =
            checked_mul(checked_mul(order(nu.g.group), order(nu.g.group)), order(nu.tensor));
        if (order(nu.nu.group) != expect)
          c.fail(e.group + ": |nu| != |G|^2 |[G,G~]|");
        ++checked;
      }
      if (checked == 0) c.fail("no corpus group with |G| <= 16");
    });
    report(c, "oracle agreement on " + std::to_string(checked) + " groups with |G| <= 16");
  }

  // --- criterion 3 -------------------------------------------------------
  {
    Criterion c{3, 300.0};
    int checked = 0;
    bool saw_c2c2 = false, saw_d8 = false;
    timed(c, [&] {
      for (const auto& e : corpus) {
        FinitePresentation pres = catalog_group(e.group);
        CosetTable tg = enumerate_cosets(pres, {});
        if (tg.status() != CosetTable::Status::Complete || tg.live_count() > 16) continue;
        NuBuildOptions opts;
        opts.oracle_auto = false;
        NuGroup nu = build_nu(pres, opts);
        auto from_nu = abelian_invariants(nu.schur, e.p);
        auto from_bar = schur_multiplier_oracle(nu.g.group);
        if (from_nu != from_bar)
          c.fail(e.group + ": mu/Delta gives " + fmt_inv(from_nu) +
                 " but the bar resolution gives " + fmt_inv(from_bar));
        if (e.group == "elemab:2,2") {
          saw_c2c2 = true;
          if (from_nu != std::vector<std::uint64_t>{2}) c.fail("M(C2xC2) != [2]");
        }
        if (e.group == "dihedral:8") {
          saw_d8 = true;
          if (from_nu != std::vector<std::uint64_t>{2}) c.fail("M(dihedral:8) != [2]");
        }
        ++checked;
      }
      if (!saw_c2c2 || !saw_d8) c.fail("corpus is missing elemab:2,2 or dihedral:8");
    });
    report(c, "Schur oracle agreement on " + std::to_string(checked) + " groups");
  }

  // --- criterion 4 -------------------------------------------------------
  std::string report1;
  {
    Criterion c{4, 1800.0};
    RunReport rep;
    timed(c, [&] {
      RunOptions opts;
      opts.seed = 20250810;
      rep = run_corpus(corpus, opts);
      report1 = report_to_json(rep.verdicts, false);
      std::ofstream out(workdir + "/report1.json", std::ios::binary);
      out << report1;
      for (const auto& v : rep.verdicts)
        if (v.status == Status::Fail) {
          std::string w;
          for (const auto& [k, val] : v.witness) w += " " + k + "=" + val;
          c.fail(v.group + " " + v.claim_id +
                 (v.selector.empty() ? "" : " [" + v.selector + "]") + ":" + w);
        }
    });
    report(c, "zero-fail corpus run: " + std::to_string(rep.passed) + " pass, " +
                  std::to_string(rep.failed) + " fail, " + std::to_string(rep.unmet) +
                  " hypothesis-unmet, " + std::to_string(rep.exceeded) +
                  " resource-exceeded");
  }

  // --- criterion 5 -------------------------------------------------------
  {
    Criterion c{5, 120.0};
    int checked = 0;
    timed(c, [&] {
      for (const char* spec :
           {"dihedral:8", "dihedral:16", "dihedral:32", "semidihedral:16",
            "semidihedral:32", "quaternion:8", "quaternion:16", "quaternion:32"}) {
        NuBuildOptions opts;
        opts.oracle_auto = false;
        NuGroup nu = build_nu(spec, opts);
        std::uint64_t eg = nu.exp_g(), et = nu.exp_tensor();
        if (eg % et != 0)
          c.fail(std::string(spec) + ": exp([G,G~]) = " + std::to_string(et) +
                 " does not divide exp(G) = " + std::to_string(eg));
        ++checked;
      }
    });
    report(c, "exp([G,G~]) divides exp(G) on " + std::to_string(checked) +
                  " maximal-class 2-groups");
  }

  // --- criterion 6 -------------------------------------------------------
  {
    Criterion c{6, 1800.0};
    timed(c, [&] {
      RunOptions opts;
      opts.seed = 20250810;
      RunReport rep = run_corpus(corpus, opts);
      std::string report2 = report_to_json(rep.verdicts, false);
      std::ofstream out(workdir + "/report2.json", std::ios::binary);
      out << report2;
      if (report1.empty())
        c.fail("criterion 4 produced no report to compare against");
      else if (report2 != report1)
        c.fail("reports differ between runs");
    });
    report(c, "byte-identical JSON reports across two sequential runs");
  }

  return g_exit;
}
