#include <filesystem>
#include <fstream>

#include <catch2/catch_amalgamated.hpp>

#include "pnu/presentation.hpp"

using namespace pnu;

TEST_CASE("parser reads the line grammar") {
  auto p = parse_presentation("gens a; rel a^2");
  REQUIRE(p.ngens() == 1);
  REQUIRE(p.relators.size() == 1);
  CHECK(p.relators[0] == Word::gen(0, 2));

  auto q = parse_presentation("gens a b\nrel [a,b]\n");
  REQUIRE(q.ngens() == 2);
  REQUIRE(q.relators.size() == 1);
  CHECK(q.relators[0] == Word::comm(Word::gen(0), Word::gen(1)));
}

TEST_CASE("parser rejects bad input with positions") {
  CHECK_THROWS_AS(parse_presentation("gens a; rel a^0"), parse_error);
  CHECK_THROWS_AS(parse_presentation("gens a; rel b"), parse_error);
  CHECK_THROWS_AS(parse_presentation("rel a"), parse_error);
  CHECK_THROWS_AS(parse_presentation("gens a; rel a^"), parse_error);
  CHECK_THROWS_AS(parse_presentation("gens a a; rel a"), parse_error);
  try {
    parse_presentation("gens a\nrel a^0");
  } catch (const parse_error& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("comments and separators") {
  auto p = parse_presentation("# cyclic of order 4\ngens a  # one generator\nrel a^4");
  CHECK(p.ngens() == 1);
  CHECK(p.relators.size() == 1);
}

TEST_CASE("parse-serialize-parse is a fixed point") {
  std::vector<std::string> inputs = {
      "gens a; rel a^2",
      "gens a b; rel a^8; rel b^2; rel [a,b] a^-2",
      "gens x y z; rel x^3; rel [x,[y,z]]; rel z^-5 y",
  };
  for (const auto& text : inputs) {
    auto p1 = parse_presentation(text);
    std::string s1 = serialize_presentation(p1);
    auto p2 = parse_presentation(s1);
    CHECK(p1.generator_names == p2.generator_names);
    CHECK(p1.relators == p2.relators);
    CHECK(serialize_presentation(p2) == s1);
  }
}

TEST_CASE("catalog presentations are the documented ones") {
  auto c2 = catalog_group("cyclic:2");
  CHECK(c2.ngens() == 1);
  REQUIRE(c2.relators.size() == 1);
  CHECK(c2.relators[0] == Word::gen(0, 2));

  auto d16 = catalog_group("dihedral:16");
  REQUIRE(d16.ngens() == 2);
  REQUIRE(d16.relators.size() == 3);
  CHECK(d16.relators[0] == Word::gen(0, 8));
  CHECK(d16.relators[1] == Word::gen(1, 2));
  CHECK(d16.relators[2] ==
        Word::gen(0) * Word::gen(1) * Word::gen(0) * Word::gen(1));

  auto es = catalog_group("extraspecial:3,p");
  CHECK(es.ngens() == 3);
  CHECK(es.relators.size() == 6);
  CHECK(es.relators[3] ==
        Word::comm(Word::gen(0), Word::gen(1)) * Word::gen(2, -1));
}

TEST_CASE("catalog validates parameters") {
  CHECK_THROWS_AS(parse_group_spec("dihedral:12"), error);
  CHECK_THROWS_AS(parse_group_spec("dihedral:4"), error);
  CHECK_THROWS_AS(parse_group_spec("semidihedral:8"), error);
  CHECK_THROWS_AS(parse_group_spec("extraspecial:2,p"), error);
  CHECK_THROWS_AS(parse_group_spec("extraspecial:3,q"), error);
  CHECK_THROWS_AS(parse_group_spec("elemab:4,2"), error);
  CHECK_THROWS_AS(parse_group_spec("nosuch:3"), error);
}

TEST_CASE("group spec strings round-trip") {
  for (const char* s : {"cyclic:9", "elemab:2,3", "dihedral:16", "semidihedral:32",
                        "quaternion:8", "extraspecial:3,p2",
                        "product:dihedral:8,cyclic:2", "product:elemab:2,2,cyclic:3"}) {
    CHECK(parse_group_spec(s).to_string() == s);
  }
}

TEST_CASE("direct products take disjoint unions plus cross commutators") {
  auto p = catalog_group("product:dihedral:8,cyclic:2");
  CHECK(p.ngens() == 3);
  CHECK(p.generator_names == std::vector<std::string>{"a1", "b1", "a2"});
  // 3 dihedral relators + 1 cyclic relator + 2 cross commutators
  CHECK(p.relators.size() == 6);
}

TEST_CASE("file-backed group specs") {
  std::string path =
      (std::filesystem::temp_directory_path() / "pnu_test_q8.pres").string();
  {
    std::ofstream out(path);
    out << "# quaternion of order 8\ngens a b\nrel a^4\nrel b^2 a^-2\nrel b^-1 a b a\n";
  }
  auto pres = catalog_group("file:" + path);
  CHECK(pres.ngens() == 2);
  CHECK(pres.relators.size() == 3);
  CHECK(parse_group_spec("file:" + path).to_string() == "file:" + path);
  CHECK_THROWS_AS(catalog_group("file:/no/such/file.pres"), error);
}
