#include "catch_amalgamated.hpp"
#include "leibniz/error.hpp"
#include "leibniz/io.hpp"
#include "leibniz/sweep.hpp"
#include "support.hpp"

using namespace leibniz;
using namespace test_support;

TEST_CASE("catalog algebras round-trip byte for byte", "[io]") {
  for (const auto& [name, g] : catalog_algebras(5)) {
    INFO(name);
    std::string once = io::emit(io::algebra_to_json(g));
    LeibnizAlgebra back = io::algebra_from_json(io::parse(once));
    CHECK(back == g);
    CHECK(io::emit(io::algebra_to_json(back)) == once);
  }
  LeibnizAlgebra gf = catalog::h1(Field::prime(7));
  CHECK(io::algebra_from_json(io::algebra_to_json(gf)) == gf);
}

TEST_CASE("algebra file format", "[io]") {
  io::Json j = io::parse(R"({"field": "Q", "basis": ["x", "y"],
    "brackets": [{"left": 0, "right": 0, "terms": [{"basis": 1, "coeff": "1"}]}]})");
  CHECK(io::algebra_from_json(j) == catalog::j1());
  io::Json half = io::parse(R"({"basis": ["x", "y"],
    "brackets": [{"left": 0, "right": 0, "terms": [{"basis": 1, "coeff": "3/7"}]}]})");
  LeibnizAlgebra a = io::algebra_from_json(half);
  CHECK(io::emit(io::algebra_to_json(a)).find("\"3/7\"") != std::string::npos);

  CHECK_THROWS_AS(io::parse("{\"basis\": [\"x\",}"), Error);
  CHECK_THROWS_AS(io::algebra_from_json(io::parse(R"({"basis": ["x"], "brackets": [{"left": 1, "right": 0, "terms": []}]})")),
                  Error);
  CHECK_THROWS_AS(io::algebra_from_json(io::parse(R"({"field": {"GF": 4}, "basis": []})")), Error);
  CHECK_THROWS_AS(io::algebra_from_json(io::parse(R"({"basis": ["x"], "brackets": [{"left": 0, "right": 0,
    "terms": [{"basis": 0, "coeff": "1/0"}]}]})")), Error);
  try {
    io::parse("{\n  \"basis\": [\n  x]}");
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("pairs round-trip", "[io]") {
  for (const auto& [name, p] : catalog_pairs(3)) {
    INFO(name);
    Pair back = io::pair_from_json(io::parse(io::emit(io::pair_to_json(p))));
    CHECK(back.g == p.g);
    CHECK(back.n == p.n);
  }
  io::Json bad = io::pair_to_json(Pair::full(catalog::j1()));
  bad["ideal"] = io::subspace_to_json(span_units(2, {0}));
  CHECK_THROWS_AS(io::pair_from_json(bad), Error);
}

TEST_CASE("crossed modules round-trip", "[io]") {
  CrossedModule cm = cocycle_cover(catalog::h1()).cm;
  io::Json j = io::crossed_module_to_json(cm);
  CrossedModule back = io::crossed_module_from_json(io::parse(io::emit(j)));
  CHECK(back.m == cm.m);
  CHECK(back.g == cm.g);
  CHECK(back.delta == cm.delta);
  CHECK(back.left == cm.left);
  CHECK(back.right == cm.right);
  CHECK(io::emit(io::crossed_module_to_json(back)) == io::emit(j));
}
