#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <string>

#include "afschur.h"

namespace {

using nlohmann::json;

struct Engine {
  afs_engine* ptr = nullptr;
  Engine(int n, long long r) { REQUIRE(afs_engine_create(n, r, &ptr) == AFS_OK); }
  ~Engine() { afs_engine_destroy(ptr); }
};

std::string take(char* raw) {
  REQUIRE(raw != nullptr);
  std::string out(raw);
  afs_string_free(raw);
  return out;
}

}  // namespace

TEST_CASE("engine lifecycle and argument validation") {
  afs_engine* engine = nullptr;
  CHECK(afs_engine_create(1, 0, &engine) == AFS_ERR_BAD_ARGUMENT);
  CHECK(afs_engine_create(2, -1, &engine) == AFS_ERR_BAD_ARGUMENT);
  CHECK(afs_engine_create(2, 1, nullptr) == AFS_ERR_BAD_ARGUMENT);
  REQUIRE(afs_engine_create(2, 1, &engine) == AFS_OK);
  char* out = nullptr;
  CHECK(afs_multiply_word(engine, nullptr, &out) == AFS_ERR_BAD_ARGUMENT);
  afs_engine_destroy(engine);
  afs_engine_destroy(nullptr);
}

TEST_CASE("word evaluation through the C surface") {
  Engine engine(2, 1);
  char* raw = nullptr;
  REQUIRE(afs_multiply_word(engine.ptr, R"(["e1","f1"])", &raw) == AFS_OK);
  const json doc = json::parse(take(raw));
  CHECK(doc.at("n") == 2);
  CHECK(doc.at("r") == 1);
  REQUIRE(doc.at("terms").size() == 1);
  CHECK(doc.at("terms").at(0).at("coeff") == "1");
  CHECK(doc.at("terms").at(0).at("matrix").at("entries") ==
        json::parse("[[1,1,1]]"));

  // the {"word": [...]} wrapper is accepted too
  raw = nullptr;
  REQUIRE(afs_multiply_word(engine.ptr, R"({"word":["e1","f1"]})", &raw) == AFS_OK);
  CHECK(json::parse(take(raw)).at("terms").size() == 1);
}

TEST_CASE("parse errors carry messages") {
  Engine engine(2, 1);
  char* raw = nullptr;
  CHECK(afs_multiply_word(engine.ptr, "[notjson", &raw) == AFS_ERR_PARSE);
  CHECK(std::string(afs_engine_last_error(engine.ptr)).size() > 0);
  CHECK(afs_multiply_word(engine.ptr, R"(["e9"])", &raw) == AFS_ERR_PARSE);
  CHECK(afs_multiply_word(engine.ptr, R"(["E1,1"])", &raw) == AFS_ERR_PARSE);
}

TEST_CASE("mismatched inputs get their own status") {
  Engine engine(2, 1);
  char* raw = nullptr;
  const char* wrong_r = R"({"n":2,"r":2,"terms":[]})";
  const char* ok = R"({"n":2,"r":1,"terms":[]})";
  CHECK(afs_multiply_elements(engine.ptr, wrong_r, ok, &raw) == AFS_ERR_MISMATCH);
  CHECK(std::string(afs_engine_last_error(engine.ptr)).find("(n, r)") !=
        std::string::npos);
}

TEST_CASE("element product and text rendering") {
  Engine engine(2, 2);
  const char* k11 =
      R"({"n":2,"r":2,"terms":[{"coeff":"1","matrix":{"n":2,"entries":[[1,1,1],[2,2,1]]}}]})";
  char* raw = nullptr;
  REQUIRE(afs_multiply_elements(engine.ptr, k11, k11, &raw) == AFS_OK);
  const std::string product = take(raw);
  CHECK(json::parse(product).at("terms").size() == 1);

  raw = nullptr;
  REQUIRE(afs_element_to_text(engine.ptr, product.c_str(), &raw) == AFS_OK);
  CHECK(take(raw) == "[D(1,1)]");

  // orthogonal idempotents multiply to zero
  const char* k20 =
      R"({"n":2,"r":2,"terms":[{"coeff":"1","matrix":{"n":2,"entries":[[1,1,2]]}}]})";
  raw = nullptr;
  REQUIRE(afs_multiply_elements(engine.ptr, k20, k11, &raw) == AFS_OK);
  CHECK(json::parse(take(raw)).at("terms").empty());
}

TEST_CASE("normal form with round trip flag") {
  Engine engine(2, 2);
  const char* elem =
      R"({"n":2,"r":2,"terms":[{"coeff":"1","matrix":{"n":2,"entries":[[1,1,1],[1,2,1]]}}]})";
  char* raw = nullptr;
  int round_trip = 0;
  REQUIRE(afs_normal_form(engine.ptr, elem, &raw, &round_trip) == AFS_OK);
  CHECK(round_trip == 1);
  const json doc = json::parse(take(raw));
  REQUIRE(doc.at("coordinates").size() == 1);
  CHECK(doc.at("coordinates").at(0).at("coeff") == "1");
  CHECK(doc.at("coordinates").at(0).at("lambda") == json::parse("[1,1]"));
}

TEST_CASE("verification and closed form through the C surface") {
  Engine engine(2, 1);
  char* raw = nullptr;
  int ok = 0;
  REQUIRE(afs_verify_presentation(engine.ptr, 2, 3, -1, 0, &raw, &ok) == AFS_OK);
  CHECK(ok == 1);
  CHECK(json::parse(take(raw)).at("all_passed").get<bool>());

  raw = nullptr;
  ok = 1;
  REQUIRE(afs_verify_presentation(engine.ptr, 2, 3, -1, 1, &raw, &ok) == AFS_OK);
  CHECK(ok == 0);
  CHECK(!json::parse(take(raw)).at("all_passed").get<bool>());

  raw = nullptr;
  ok = 0;
  REQUIRE(afs_closed_form_check(engine.ptr, 2, 2, &raw, &ok) == AFS_OK);
  CHECK(ok == 1);
  CHECK(json::parse(take(raw)).at("all_equal").get<bool>());
}
