#ifndef PNU_PRESENTATION_HPP
#define PNU_PRESENTATION_HPP

#include <cctype>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "pnu/common.hpp"
#include "pnu/word.hpp"

namespace pnu {

struct FinitePresentation {
  std::vector<std::string> generator_names;
  std::vector<Word> relators;  // stored freely reduced

  int ngens() const { return static_cast<int>(generator_names.size()); }

  void add_relator(const Word& w) {
    PNU_CHECK(w.max_gen() < ngens(), "relator uses undeclared generator");
    Word r = free_reduce(w);
    if (!r.empty()) relators.push_back(r);
  }
};

// ---------------------------------------------------------------------------
// Text format.  Line oriented; statements split on ';' or newline.
//   gens a b
//   rel a^4
//   rel [a,b]        # commutators expand to a^-1 b^-1 a b
// ---------------------------------------------------------------------------

namespace detail {

struct PresTokenizer {
  const std::string& text;
  std::size_t pos = 0;
  int line = 1, col = 1;

  explicit PresTokenizer(const std::string& t) : text(t) {}

  struct Tok {
    enum Kind { Ident, Int, Caret, LBracket, RBracket, Comma, Sep, End } kind;
    std::string s;
    std::int64_t val = 0;
    int line = 1, col = 1;
  };

  void advance(char c) {
    ++pos;
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }

  Tok next() {
    while (pos < text.size()) {
      char c = text[pos];
      if (c == '#') {  // comment to end of line
        while (pos < text.size() && text[pos] != '\n') advance(text[pos]);
        continue;
      }
      if (c == ' ' || c == '\t' || c == '\r') {
        advance(c);
        continue;
      }
      break;
    }
    if (pos >= text.size()) return {Tok::End, "", 0, line, col};
    int tl = line, tc = col;
    char c = text[pos];
    if (c == '\n' || c == ';') {
      advance(c);
      return {Tok::Sep, std::string(1, c), 0, tl, tc};
    }
    if (c == '^') {
      advance(c);
      return {Tok::Caret, "^", 0, tl, tc};
    }
    if (c == '[') {
      advance(c);
      return {Tok::LBracket, "[", 0, tl, tc};
    }
    if (c == ']') {
      advance(c);
      return {Tok::RBracket, "]", 0, tl, tc};
    }
    if (c == ',') {
      advance(c);
      return {Tok::Comma, ",", 0, tl, tc};
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      std::string num;
      if (c == '-') {
        num += c;
        advance(c);
      }
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        throw parse_error("expected digits after '-'", tl, tc);
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        num += text[pos];
        advance(text[pos]);
      }
      return {Tok::Int, num, std::stoll(num), tl, tc};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string id;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
        id += text[pos];
        advance(text[pos]);
      }
      return {Tok::Ident, id, 0, tl, tc};
    }
    throw parse_error(std::string("unexpected character '") + c + "'", tl, tc);
  }
};

class PresParser {
 public:
  explicit PresParser(const std::string& text) : tz_(text) { shift_(); }

  FinitePresentation run() {
    FinitePresentation pres;
    bool have_gens = false;
    for (;;) {
      while (cur_.kind == Tok::Sep) shift_();
      if (cur_.kind == Tok::End) break;
      if (cur_.kind != Tok::Ident)
        throw parse_error("expected 'gens' or 'rel'", cur_.line, cur_.col);
      if (cur_.s == "gens") {
        if (have_gens)
          throw parse_error("duplicate 'gens' statement", cur_.line, cur_.col);
        shift_();
        while (cur_.kind == Tok::Ident) {
          for (const auto& n : pres.generator_names)
            if (n == cur_.s)
              throw parse_error("duplicate generator name '" + cur_.s + "'",
                                cur_.line, cur_.col);
          pres.generator_names.push_back(cur_.s);
          shift_();
        }
        if (pres.generator_names.empty())
          throw parse_error("'gens' lists no generators", cur_.line, cur_.col);
        have_gens = true;
      } else if (cur_.s == "rel") {
        if (!have_gens)
          throw parse_error("'rel' before 'gens'", cur_.line, cur_.col);
        shift_();
        pres.add_relator(parse_word_(pres));
      } else {
        throw parse_error("unknown statement '" + cur_.s + "'", cur_.line,
                          cur_.col);
      }
      if (cur_.kind != Tok::Sep && cur_.kind != Tok::End)
        throw parse_error("expected end of statement", cur_.line, cur_.col);
    }
    if (!have_gens)
      throw parse_error("presentation has no 'gens' statement", 1, 1);
    return pres;
  }

 private:
  using Tok = PresTokenizer::Tok;

  void shift_() { cur_ = tz_.next(); }

  Word parse_word_(const FinitePresentation& pres) {
    Word w = parse_factor_(pres);
    while (cur_.kind == Tok::Ident || cur_.kind == Tok::LBracket)
      w = w * parse_factor_(pres);
    return w;
  }

  Word parse_factor_(const FinitePresentation& pres) {
    Word base;
    if (cur_.kind == Tok::Ident) {
      int g = -1;
      for (int i = 0; i < pres.ngens(); ++i)
        if (pres.generator_names[static_cast<std::size_t>(i)] == cur_.s) {
          g = i;
          break;
        }
      if (g < 0)
        throw parse_error("unknown generator name '" + cur_.s + "'", cur_.line,
                          cur_.col);
      base = Word::gen(g);
      shift_();
    } else if (cur_.kind == Tok::LBracket) {
      shift_();
      Word a = parse_word_(pres);
      if (cur_.kind != Tok::Comma)
        throw parse_error("expected ',' in commutator", cur_.line, cur_.col);
      shift_();
      Word b = parse_word_(pres);
      if (cur_.kind != Tok::RBracket)
        throw parse_error("expected ']' in commutator", cur_.line, cur_.col);
      shift_();
      base = Word::comm(a, b);
    } else {
      throw parse_error("expected generator or commutator", cur_.line, cur_.col);
    }
    if (cur_.kind == Tok::Caret) {
      shift_();
      if (cur_.kind != Tok::Int)
        throw parse_error("expected integer exponent after '^'", cur_.line,
                          cur_.col);
      if (cur_.val == 0)
        throw parse_error("zero exponent", cur_.line, cur_.col);
      base = base.pow(cur_.val);
      shift_();
    }
    return base;
  }

  PresTokenizer tz_;
  Tok cur_{};
};

}  // namespace detail

inline FinitePresentation parse_presentation(const std::string& text) {
  return detail::PresParser(text).run();
}

inline std::string serialize_presentation(const FinitePresentation& pres) {
  std::string out = "gens";
  for (const auto& n : pres.generator_names) out += " " + n;
  out += "\n";
  for (const auto& r : pres.relators)
    out += "rel " + word_to_string(r, pres.generator_names) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Group catalog.
// ---------------------------------------------------------------------------

enum class Family {
  Cyclic,
  ElemAbelian,
  Dihedral,
  Semidihedral,
  Quaternion,
  Extraspecial,
  DirectProduct,
  File,
};

struct GroupSpec {
  Family family = Family::Cyclic;
  std::vector<std::uint64_t> params;   // family-specific integers
  std::string text_param;              // extraspecial kind ("p"/"p2") or file path
  std::vector<GroupSpec> factors;      // direct products

  std::string to_string() const {
    switch (family) {
      case Family::Cyclic:
        return "cyclic:" + std::to_string(params.at(0));
      case Family::ElemAbelian:
        return "elemab:" + std::to_string(params.at(0)) + "," +
               std::to_string(params.at(1));
      case Family::Dihedral:
        return "dihedral:" + std::to_string(params.at(0));
      case Family::Semidihedral:
        return "semidihedral:" + std::to_string(params.at(0));
      case Family::Quaternion:
        return "quaternion:" + std::to_string(params.at(0));
      case Family::Extraspecial:
        return "extraspecial:" + std::to_string(params.at(0)) + "," + text_param;
      case Family::File:
        return "file:" + text_param;
      case Family::DirectProduct: {
        std::string s = "product:";
        for (std::size_t i = 0; i < factors.size(); ++i) {
          if (i) s += ",";
          s += factors[i].to_string();
        }
        return s;
      }
    }
    return "?";
  }
};

namespace detail {

inline std::uint64_t spec_uint(const std::string& s, const std::string& what) {
  if (s.empty()) throw error("group spec: missing " + what);
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw error("group spec: bad " + what + " '" + s + "'");
  return std::stoull(s);
}

}  // namespace detail

// Grammar: family:params, e.g. dihedral:16, elemab:2,3, extraspecial:3,p,
// product:dihedral:8,cyclic:2, file:path.  In a product, each comma-separated
// token containing ':' starts a new factor spec.
inline GroupSpec parse_group_spec(const std::string& s) {
  auto colon = s.find(':');
  std::string fam = colon == std::string::npos ? s : s.substr(0, colon);
  std::string rest = colon == std::string::npos ? "" : s.substr(colon + 1);

  GroupSpec g;
  if (fam == "file") {
    g.family = Family::File;
    if (rest.empty()) throw error("group spec: file path missing");
    g.text_param = rest;
    return g;
  }

  std::vector<std::string> parts;
  std::string cur;
  for (char c : rest) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty() || !rest.empty()) parts.push_back(cur);

  if (fam == "product") {
    g.family = Family::DirectProduct;
    std::vector<std::string> specs;
    for (const auto& p : parts) {
      if (p.find(':') != std::string::npos || specs.empty())
        specs.push_back(p);
      else
        specs.back() += "," + p;
    }
    if (specs.size() < 2) throw error("group spec: product needs two factors");
    for (const auto& sp : specs) g.factors.push_back(parse_group_spec(sp));
    return g;
  }

  if (fam == "cyclic") {
    g.family = Family::Cyclic;
    if (parts.size() != 1) throw error("group spec: cyclic:n");
    g.params = {detail::spec_uint(parts[0], "order")};
    if (g.params[0] < 1) throw error("cyclic order must be >= 1");
  } else if (fam == "elemab") {
    g.family = Family::ElemAbelian;
    if (parts.size() != 2) throw error("group spec: elemab:p,rank");
    g.params = {detail::spec_uint(parts[0], "prime"),
                detail::spec_uint(parts[1], "rank")};
    if (!is_prime(g.params[0])) throw error("elemab: p must be prime");
    if (g.params[1] < 1 || g.params[1] > 26) throw error("elemab: bad rank");
  } else if (fam == "dihedral" || fam == "semidihedral" || fam == "quaternion") {
    g.family = fam == "dihedral"     ? Family::Dihedral
               : fam == "semidihedral" ? Family::Semidihedral
                                       : Family::Quaternion;
    if (parts.size() != 1) throw error("group spec: " + fam + ":order");
    std::uint64_t n = detail::spec_uint(parts[0], "order");
    unsigned k = 0;
    if (!prime_power_log(n, 2, k))
      throw error(fam + ": order must be a power of 2, got " + parts[0]);
    std::uint64_t min = fam == "semidihedral" ? 16 : 8;
    if (n < min)
      throw error(fam + ": order must be >= " + std::to_string(min));
    g.params = {n};
  } else if (fam == "extraspecial") {
    g.family = Family::Extraspecial;
    if (parts.size() != 2) throw error("group spec: extraspecial:p,p|p2");
    g.params = {detail::spec_uint(parts[0], "prime")};
    if (!is_prime(g.params[0]) || g.params[0] == 2)
      throw error("extraspecial: p must be an odd prime");
    if (parts[1] != "p" && parts[1] != "p2")
      throw error("extraspecial: exponent kind must be 'p' or 'p2'");
    g.text_param = parts[1];
  } else {
    throw error("unknown group family '" + fam + "'");
  }
  return g;
}

// Fixed, documented presentation per family; byte-identical across runs.
inline FinitePresentation catalog_group(const GroupSpec& spec) {
  FinitePresentation p;
  auto G = [](int i) { return Word::gen(i); };
  switch (spec.family) {
    case Family::Cyclic: {
      p.generator_names = {"a"};
      p.add_relator(G(0).pow(static_cast<std::int64_t>(spec.params[0])));
      return p;
    }
    case Family::ElemAbelian: {
      auto prime = static_cast<std::int64_t>(spec.params[0]);
      int rank = static_cast<int>(spec.params[1]);
      for (int i = 0; i < rank; ++i)
        p.generator_names.push_back(std::string(1, static_cast<char>('a' + i)));
      for (int i = 0; i < rank; ++i) p.add_relator(G(i).pow(prime));
      for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j)
          p.add_relator(Word::comm(G(i), G(j)));
      return p;
    }
    case Family::Dihedral: {
      auto m = static_cast<std::int64_t>(spec.params[0] / 2);
      p.generator_names = {"a", "b"};
      p.add_relator(G(0).pow(m));
      p.add_relator(G(1).pow(2));
      p.add_relator(G(0) * G(1) * G(0) * G(1));  // (ab)^2
      return p;
    }
    case Family::Semidihedral: {
      auto m = static_cast<std::int64_t>(spec.params[0] / 2);
      auto t = m / 2 - 1;  // a^b = a^(2^(n-2)-1)
      p.generator_names = {"a", "b"};
      p.add_relator(G(0).pow(m));
      p.add_relator(G(1).pow(2));
      p.add_relator(G(1).inverse() * G(0) * G(1) * G(0).pow(-t));
      return p;
    }
    case Family::Quaternion: {
      auto m = static_cast<std::int64_t>(spec.params[0] / 2);
      p.generator_names = {"a", "b"};
      p.add_relator(G(0).pow(m));
      p.add_relator(G(1).pow(2) * G(0).pow(-m / 2));  // b^2 = a^(m/2)
      p.add_relator(G(1).inverse() * G(0) * G(1) * G(0));  // a^b = a^-1
      return p;
    }
    case Family::Extraspecial: {
      auto prime = static_cast<std::int64_t>(spec.params[0]);
      if (spec.text_param == "p") {
        p.generator_names = {"a", "b", "c"};
        p.add_relator(G(0).pow(prime));
        p.add_relator(G(1).pow(prime));
        p.add_relator(G(2).pow(prime));
        p.add_relator(Word::comm(G(0), G(1)) * G(2).inverse());
        p.add_relator(Word::comm(G(0), G(2)));
        p.add_relator(Word::comm(G(1), G(2)));
      } else {
        p.generator_names = {"a", "b"};
        p.add_relator(G(0).pow(prime * prime));
        p.add_relator(G(1).pow(prime));
        p.add_relator(G(1).inverse() * G(0) * G(1) * G(0).pow(-1 - prime));
      }
      return p;
    }
    case Family::DirectProduct: {
      // Disjoint union of the factor presentations plus all cross commutators.
      std::vector<FinitePresentation> facs;
      for (const auto& f : spec.factors) facs.push_back(catalog_group(f));
      std::vector<int> offsets;
      int off = 0;
      for (std::size_t i = 0; i < facs.size(); ++i) {
        offsets.push_back(off);
        for (const auto& n : facs[i].generator_names)
          p.generator_names.push_back(n + std::to_string(i + 1));
        off += facs[i].ngens();
      }
      for (std::size_t i = 0; i < facs.size(); ++i)
        for (const auto& r : facs[i].relators)
          p.add_relator(r.shifted(offsets[i]));
      for (std::size_t i = 0; i < facs.size(); ++i)
        for (std::size_t j = i + 1; j < facs.size(); ++j)
          for (int gi = 0; gi < facs[i].ngens(); ++gi)
            for (int gj = 0; gj < facs[j].ngens(); ++gj)
              p.add_relator(Word::comm(G(offsets[i] + gi), G(offsets[j] + gj)));
      return p;
    }
    case Family::File: {
      std::ifstream in(spec.text_param);
      if (!in) throw error("cannot open presentation file " + spec.text_param);
      std::ostringstream ss;
      ss << in.rdbuf();
      return parse_presentation(ss.str());
    }
  }
  throw error("unhandled group family");
}

inline FinitePresentation catalog_group(const std::string& spec_string) {
  return catalog_group(parse_group_spec(spec_string));
}

}  // namespace pnu

#endif  // PNU_PRESENTATION_HPP
