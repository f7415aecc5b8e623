#include <doctest.h>

#include "oppo/io.hpp"

#include <set>

using namespace oppo;

namespace {
const std::string kData = OPPO_DATA_DIR;
}

TEST_CASE("the bundled structure files load and admit") {
  ClassCStructure t3 = admit(load_structure_file(kData + "/t3.json"));
  CHECK(t3.name() == "T3");
  std::set<std::string> zs;
  for (const auto& z : zeros(t3)) zs.insert(z.label);
  CHECK(zs == std::set<std::string>{"1/2", "1"});

  ClassCStructure b2 = admit(load_structure_file(kData + "/b2.json"));
  CHECK(zeros(b2).size() == 1);

  ClassCStructure d4 = admit(load_structure_file(kData + "/diamond.json"));
  CHECK(d4.size() == 4);
  CHECK(!d4.leq(*d4.index_of("a"), *d4.index_of("b")));

  RawStructure anti = load_structure_file(kData + "/antichain2.json");
  CHECK_THROWS_AS(admit(anti), AdmissionError);
}

TEST_CASE("structure loading is strict about element names") {
  CHECK_THROWS_WITH_AS(
      structure_from_json_text(R"({"elements": ["a"], "neg": {"a": "b"},
                                   "order": {"pairs": []}})"),
      doctest::Contains("unknown element"), LoadError);
  CHECK_THROWS_WITH_AS(
      structure_from_json_text(R"({"elements": ["a", "b"], "neg": {"a": "b"},
                                   "order": {"pairs": []}})"),
      doctest::Contains("not total"), LoadError);
  CHECK_THROWS_AS(
      structure_from_json_text(R"({"elements": ["a"], "neg": {"a": "a"},
                                   "order": {"kind": "weird", "pairs": []}})"),
      LoadError);
  CHECK_THROWS_AS(structure_from_json_text("not json"), LoadError);
  CHECK_THROWS_AS(structure_from_json_text(R"({"neg": {}, "order": {}})"), LoadError);
  CHECK_THROWS_AS(load_structure_file(kData + "/does-not-exist.json"), LoadError);
}

TEST_CASE("order kind defaults to cover and full stays verbatim") {
  RawStructure covered = structure_from_json_text(
      R"({"elements": ["a", "b", "c"], "neg": {"a": "c", "b": "b", "c": "a"},
          "order": {"pairs": [["a", "b"], ["b", "c"]]}})");
  CHECK(covered.leq.at(0, 2));  // closure added a <= c

  RawStructure full = structure_from_json_text(
      R"({"elements": ["a", "b", "c"], "neg": {"a": "c", "b": "b", "c": "a"},
          "order": {"kind": "full", "pairs": [["a", "b"], ["b", "c"]]}})");
  CHECK(full.leq.at(0, 1));
  CHECK(!full.leq.at(0, 2));  // taken verbatim
  CHECK(full.leq.at(1, 1));   // reflexive pairs still added
}

TEST_CASE("multiset files hold integer entries") {
  SignedMultiset m = multiset_from_json_text(R"({"entries": {"x": 2, "y": -1}})");
  CHECK(m.entries.at("x") == 2);
  CHECK(m.entries.at("y") == -1);
  CHECK_THROWS_AS(multiset_from_json_text(R"({"entries": {"x": 0.5}})"), LoadError);
  CHECK_THROWS_AS(multiset_from_json_text(R"({"items": {}})"), LoadError);
}

TEST_CASE("matrix files are row-major re/im pairs") {
  ComplexMatrix m = matrix_from_json_text(
      R"({"n": 2, "entries": [[1, 0], [0, 1], [0, -1], [2, 0]]})");
  CHECK(m.n == 2);
  CHECK(m.at(0, 1) == std::complex<double>(0, 1));
  CHECK(m.at(1, 0) == std::complex<double>(0, -1));
  CHECK_THROWS_AS(matrix_from_json_text(R"({"n": 2, "entries": [[1, 0]]})"), LoadError);
  CHECK_THROWS_AS(matrix_from_json_text(R"({"n": 0, "entries": []})"), LoadError);
}

TEST_CASE("phi files select the generator family") {
  NegationGenerator id = phi_from_json_text(R"({"kind": "identity"})");
  CHECK(id.negate(0.25) == 0.75);
  NegationGenerator pw = phi_from_json_text(R"({"kind": "power", "p": 2.0})");
  CHECK(pw.negate(0.6) == doctest::Approx(0.8));
  NegationGenerator tab = phi_from_json_text(
      R"({"kind": "table", "xs": [0.0, 0.5, 1.0], "ys": [0.0, 0.5, 1.0]})");
  CHECK(tab.negate(0.25) == doctest::Approx(0.75));
  CHECK_THROWS_AS(phi_from_json_text(R"({"kind": "power", "p": -1.0})"), LoadError);
  CHECK_THROWS_AS(phi_from_json_text(R"({"kind": "cubic"})"), LoadError);
}
