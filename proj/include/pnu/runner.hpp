#ifndef PNU_RUNNER_HPP
#define PNU_RUNNER_HPP

#include <atomic>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "pnu/corpus.hpp"
#include "pnu/suites.hpp"
#include "pnu/verdict.hpp"

namespace pnu {

struct RunOptions {
  std::string suite = "all";
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  std::uint64_t max_cosets = kDefaultMaxCosets;
};

struct RunReport {
  std::vector<Verdict> verdicts;
  std::size_t passed = 0, failed = 0, unmet = 0, exceeded = 0;

  void tally() {
    passed = failed = unmet = exceeded = 0;
    for (const auto& v : verdicts) switch (v.status) {
        case Status::Pass: ++passed; break;
        case Status::Fail: ++failed; break;
        case Status::HypothesisUnmet: ++unmet; break;
        case Status::ResourceExceeded: ++exceeded; break;
      }
  }
};

// Runs the selected suites over every corpus entry.  Entries are independent
// share-nothing jobs; the report is canonically sorted, so the output is
// identical for any job count.
inline RunReport run_corpus(const std::vector<CorpusEntry>& entries, const RunOptions& opts) {
  if (opts.suite != "all") {
    bool known = false;
    for (const auto& s : suite_names()) known = known || s == opts.suite;
    if (!known) throw error("unknown suite '" + opts.suite + "'");
  }
  std::vector<std::vector<Verdict>> slots(entries.size());
  std::atomic<std::size_t> next{0};
  unsigned jobs = std::max(1u, opts.jobs);
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= entries.size()) return;
      try {
        slots[i] = run_entry(entries[i], opts.seed, opts.max_cosets, opts.suite);
      } catch (const std::exception& e) {
        Verdict v;
        v.claim_id = "entry";
        v.statement = "corpus entry execution";
        v.group = entries[i].group;
        v.status = Status::Fail;
        v.note("error", e.what());
        slots[i] = {v};
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  RunReport report;
  for (auto& s : slots)
    for (auto& v : s) report.verdicts.push_back(std::move(v));
  sort_verdicts(report.verdicts);
  report.tally();
  return report;
}

}  // namespace pnu

#endif  // PNU_RUNNER_HPP
