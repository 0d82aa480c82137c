#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "afschur/json_io.hpp"
#include "test_util.hpp"

using namespace afschur;
using namespace afschur::testutil;
using nlohmann::json;

TEST_CASE("matrix interchange form") {
  const AffineMatrix a = unit(1, 2, 2) + diag({1, 0});
  const json j = matrix_to_json(a);
  CHECK(j.at("n") == 2);
  CHECK(j.at("entries") == json::parse("[[1,1,1],[1,2,1]]"));  // sorted by (i, j)
  CHECK(matrix_from_json(j) == a);

  // rows outside [1..n] are canonicalized on input
  CHECK(matrix_from_json(json::parse(R"({"n":2,"entries":[[3,4,1]]})")) ==
        unit(1, 2, 2));
}

TEST_CASE("matrix parse rejections") {
  CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"n":1,"entries":[]})")), ParseError);
  CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"n":2,"entries":[[1,2,0]]})")),
                  ParseError);
  CHECK_THROWS_AS(
      matrix_from_json(json::parse(R"({"n":2,"entries":[[1,2,1],[3,4,1]]})")),
      ParseError);  // duplicate periodicity class
  CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"n":2})")), ParseError);
  CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"n":2,"entries":[[1,2]]})")),
                  ParseError);
}

TEST_CASE("matrix round trip on random banded matrices") {
  std::mt19937 rng(5);
  const auto pool = enumerate_theta(3, Int(3), 2);
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  for (int s = 0; s < 50; ++s) {
    const AffineMatrix& A = pool[pick(rng)];
    CHECK(matrix_from_json(matrix_to_json(A)) == A);
  }
}

TEST_CASE("element interchange form") {
  AlgebraElement x(2, Int(2));
  x.add_term(unit(1, 2, 2) + diag({1, 0}), Rational(Int(-3), Int(2)));
  x.add_term(diag({1, 1}), Rational(1));
  const json j = element_to_json(x);
  CHECK(j.at("n") == 2);
  CHECK(j.at("r") == 2);
  REQUIRE(j.at("terms").size() == 2);
  // entry (1,2) sorts before (2,2), so the E(1,2) term comes first
  CHECK(j.at("terms").at(0).at("coeff") == "-3/2");
  CHECK(j.at("terms").at(1).at("coeff") == "1");
  CHECK(element_from_json(j) == x);

  // zero element keeps its (n, r)
  const AlgebraElement zero = element_from_json(json::parse(R"({"n":2,"r":5,"terms":[]})"));
  CHECK(zero.is_zero());
  CHECK(zero.degree() == 5);
}

TEST_CASE("element parse rejections") {
  CHECK_THROWS_AS(element_from_json(json::parse(R"({"n":2,"terms":[]})")), ParseError);
  // zero coefficient
  CHECK_THROWS_AS(element_from_json(json::parse(
                      R"({"n":2,"r":1,"terms":[{"coeff":"0","matrix":{"n":2,"entries":[[1,1,1]]}}]})")),
                  ParseError);
  // weight differs from the declared degree
  CHECK_THROWS_AS(element_from_json(json::parse(
                      R"({"n":2,"r":2,"terms":[{"coeff":"1","matrix":{"n":2,"entries":[[1,1,1]]}}]})")),
                  ParseError);
  // duplicate matrices
  CHECK_THROWS_AS(element_from_json(json::parse(
                      R"({"n":2,"r":1,"terms":[{"coeff":"1","matrix":{"n":2,"entries":[[1,1,1]]}},
                                               {"coeff":"2","matrix":{"n":2,"entries":[[1,1,1]]}}]})")),
                  ParseError);
}

TEST_CASE("composition form") {
  CHECK(composition_to_json(comp({1, 0, 2})) == json::parse("[1,0,2]"));
  CHECK(composition_from_json(json::parse("[1,0,2]"), 3) == comp({1, 0, 2}));
  CHECK_THROWS_AS(composition_from_json(json::parse("[1,0]"), 3), ParseError);
  CHECK_THROWS_AS(composition_from_json(json::parse("[1,-1]"), 2), ParseError);
}

TEST_CASE("generator token vocabulary") {
  CHECK(parse_generator_token("e1", 2).kind == GeneratorSymbol::Kind::Unit);
  CHECK(parse_generator_token("f2", 2).row == 1);  // E_{3,2} canonicalized
  CHECK(parse_generator_token("h2", 2).kind == GeneratorSymbol::Kind::Weight);
  CHECK(parse_generator_token("k1,0", 2).lambda.value() == comp({1, 0}));
  const GeneratorSymbol loop = parse_generator_token("E1,-3", 2);
  CHECK(loop.row == 1);
  CHECK(loop.col == -3);

  CHECK_THROWS_AS(parse_generator_token("e0", 2), ParseError);
  CHECK_THROWS_AS(parse_generator_token("e3", 2), ParseError);
  CHECK_THROWS_AS(parse_generator_token("k1", 2), ParseError);
  CHECK_THROWS_AS(parse_generator_token("E1,1", 2), ParseError);
  CHECK_THROWS_AS(parse_generator_token("x1", 2), ParseError);
  CHECK_THROWS_AS(parse_generator_token("", 2), ParseError);
}

TEST_CASE("json parse errors carry byte positions") {
  try {
    parse_json_text("{bad");
    CHECK(false);
  } catch (const ParseError& err) {
    CHECK(std::string(err.what()).find("parse error") != std::string::npos);
  }
}

TEST_CASE("coordinate form lists split parts") {
  PBWCoordinates coords;
  coords.emplace(PBWMonomial{unit(1, 2, 2) + unit(2, 1, 2), comp({0, 2})},
                 Rational(Int(1), Int(2)));
  const json j = coordinates_to_json(coords, 2, Int(2));
  REQUIRE(j.at("coordinates").size() == 1);
  const json& c = j.at("coordinates").at(0);
  CHECK(c.at("Aplus").at("entries") == json::parse("[[1,2,1]]"));
  CHECK(c.at("Aminus").at("entries") == json::parse("[[2,1,1]]"));
  CHECK(c.at("lambda") == json::parse("[0,2]"));
  CHECK(c.at("coeff") == "1/2");
}
