#ifndef PNU_CORPUS_HPP
#define PNU_CORPUS_HPP

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "pnu/common.hpp"
#include "pnu/nu.hpp"
#include "pnu/pgroup.hpp"
#include "pnu/presentation.hpp"
#include "pnu/verdict.hpp"

namespace pnu {

// One corpus entry: a group, its prime, which suites to run, and the
// normal-subgroup selectors used by the N-parameterized theorems.
struct CorpusEntry {
  std::string group;                   // group-spec string
  std::uint64_t p = 0;                 // prime
  std::vector<std::string> suites;     // empty or {"all"} = every suite
  std::vector<std::string> selectors;  // gamma:i, center, agemo:k, omega:i, g1, trivial, full
  std::uint64_t max_cosets = 0;        // 0 = inherit the run default
  std::uint64_t seed = 0;              // 0 = derive from the run seed
  bool has_seed = false;

  bool wants_suite(const std::string& s) const {
    if (suites.empty()) return true;
    for (const auto& t : suites)
      if (t == "all" || t == s) return true;
    return false;
  }
};

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',' || c == ' ' || c == '\t') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace detail

// Corpus text: one [group <spec>] section per entry followed by key = value
// lines (p, suites, selectors, max-cosets, seed).  '#' starts a comment.
inline std::vector<CorpusEntry> parse_corpus(const std::string& text) {
  std::vector<CorpusEntry> entries;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  auto known_suites = suite_names();
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw parse_error("unterminated section header", lineno, 1);
      std::string head = detail::trim(line.substr(1, line.size() - 2));
      if (head.rfind("group ", 0) != 0)
        throw parse_error("expected [group <spec>]", lineno, 1);
      CorpusEntry e;
      e.group = detail::trim(head.substr(6));
      parse_group_spec(e.group);  // validate early
      entries.push_back(std::move(e));
      continue;
    }
    if (entries.empty()) throw parse_error("key outside of a [group] section", lineno, 1);
    auto eq = line.find('=');
    if (eq == std::string::npos) throw parse_error("expected key = value", lineno, 1);
    std::string key = detail::trim(line.substr(0, eq));
    std::string val = detail::trim(line.substr(eq + 1));
    CorpusEntry& e = entries.back();
    if (key == "p") {
      e.p = std::stoull(val);
      if (!is_prime(e.p)) throw parse_error("p must be prime", lineno, 1);
    } else if (key == "suites") {
      e.suites = detail::split_list(val);
      for (const auto& s : e.suites) {
        if (s == "all") continue;
        bool ok = false;
        for (const auto& k : known_suites) ok = ok || k == s;
        if (!ok) throw parse_error("unknown suite '" + s + "'", lineno, 1);
      }
    } else if (key == "selectors") {
      e.selectors = detail::split_list(val);
    } else if (key == "max-cosets") {
      e.max_cosets = std::stoull(val);
    } else if (key == "seed") {
      e.seed = std::stoull(val);
      e.has_seed = true;
    } else {
      throw parse_error("unknown key '" + key + "'", lineno, 1);
    }
  }
  for (const auto& e : entries)
    if (e.p == 0) throw error("corpus entry " + e.group + " is missing p");
  return entries;
}

inline std::vector<CorpusEntry> parse_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open corpus file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_corpus(ss.str());
}

// The shipped corpus: cyclic prime-power orders 2..9, elementary abelian
// ranks <= 3, dihedral/semidihedral/quaternion up to 32, both extraspecial
// groups of order 27, and selected direct products.  elemab:3,3 is included
// with a small coset bound: |nu| = 3^15 passes every desk-scale bound, so its
// nu-level suites report resource-exceeded while the G-level suites still run.
inline const char* default_corpus_text() {
  return R"(# pnu default corpus
[group cyclic:2]
p = 2
selectors = trivial, full

[group cyclic:3]
p = 3
selectors = trivial, full

[group cyclic:4]
p = 2
selectors = agemo:1, omega:1

[group cyclic:5]
p = 5
selectors = full

[group cyclic:7]
p = 7
selectors = full

[group cyclic:8]
p = 2
selectors = agemo:1, omega:1, trivial

[group cyclic:9]
p = 3
selectors = agemo:1, omega:1

[group elemab:2,2]
p = 2
selectors = trivial, full

[group elemab:2,3]
p = 2
selectors = trivial, full

[group elemab:3,2]
p = 3
selectors = trivial, full

[group elemab:3,3]
p = 3
max-cosets = 200000
selectors = trivial

[group dihedral:8]
p = 2
selectors = gamma:2, center, agemo:1

[group dihedral:16]
p = 2
selectors = gamma:2, center, agemo:1, g1

[group dihedral:32]
p = 2
selectors = gamma:2, center, agemo:1, g1

[group semidihedral:16]
p = 2
selectors = gamma:2, center, agemo:1, g1

[group semidihedral:32]
p = 2
selectors = gamma:2, center, agemo:1, g1

[group quaternion:8]
p = 2
selectors = gamma:2, center, agemo:1

[group quaternion:16]
p = 2
selectors = gamma:2, center, agemo:1, g1

[group quaternion:32]
p = 2
selectors = gamma:2, center, agemo:1, g1

[group extraspecial:3,p]
p = 3
selectors = gamma:2, center, omega:1

[group extraspecial:3,p2]
p = 3
selectors = gamma:2, center, agemo:1

[group product:dihedral:8,cyclic:4]
p = 2
selectors = gamma:2, center

[group product:cyclic:4,cyclic:2]
p = 2
selectors = agemo:1, trivial

[group product:cyclic:9,cyclic:3]
p = 3
selectors = agemo:1
)";
}

// Resolve an N-selector to a normal subgroup of G.
inline PermGroup resolve_selector(const PermGroup& g, std::uint64_t p,
                                  const std::vector<PermGroup>& series,
                                  const std::string& sel) {
  auto colon = sel.find(':');
  std::string kind = colon == std::string::npos ? sel : sel.substr(0, colon);
  std::uint64_t arg = 0;
  if (colon != std::string::npos) arg = std::stoull(sel.substr(colon + 1));
  if (kind == "gamma") {
    PNU_CHECK(arg >= 1, "gamma selector needs an index >= 1");
    return series_term(series, static_cast<std::size_t>(arg));
  }
  if (kind == "center") return center(g);
  if (kind == "agemo") return agemo(g, p, static_cast<unsigned>(arg ? arg : 1));
  if (kind == "omega") return omega(g, p, static_cast<unsigned>(arg ? arg : 1));
  if (kind == "g1") return maximal_class_G1(g, p);
  if (kind == "trivial") return span_points(g.ctx(), {});
  if (kind == "full") return g;
  throw error("unknown selector '" + sel + "'");
}

}  // namespace pnu

#endif  // PNU_CORPUS_HPP
