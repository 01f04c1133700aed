#include "doctest.h"
#include "gridcodes/ball.hpp"
#include "gridcodes/errors.hpp"
#include "gridcodes/io.hpp"

using namespace gridcodes;
using nlohmann::json;

TEST_SUITE("io") {

TEST_CASE("counts fit JSON numbers until they do not") {
  CHECK(count_to_json(Count(42)) == json(42));
  const Count big = pow(Count(10), 30);
  CHECK(count_to_json(big) == json("1000000000000000000000000000000"));
}

TEST_CASE("code files round trip") {
  const GridCode code(Grid{5, 2}, {{0, 0}, {4, 1}});
  const json j = to_json(code);
  CHECK(j.dump() == R"({"codewords":[[0,0],[4,1]],"dims":[5,2]})");
  const GridCode back = code_from_json(j);
  CHECK(back.grid() == code.grid());
  CHECK(std::equal(back.codewords().begin(), back.codewords().end(), code.codewords().begin(),
                   code.codewords().end()));
}

TEST_CASE("code file errors") {
  CHECK_THROWS_AS(code_from_json(json::parse(R"({"dims":[5,2]})")), DomainError);
  CHECK_THROWS_AS(code_from_json(json::parse(R"({"dims":[5,2],"codewords":[[0,0],[0,0]]})")),
                  DomainError);
  CHECK_THROWS_AS(code_from_json(json::parse(R"({"dims":[5,2],"codewords":[[0,2]]})")),
                  DomainError);
  CHECK_THROWS_AS(code_from_json(json::parse(R"({"dims":[5,"2"],"codewords":[[0,0]]})")),
                  DomainError);
  CHECK_THROWS_AS(code_from_json(json::parse("[1,2]")), DomainError);
}

TEST_CASE("malformed JSON reports line and column") {
  try {
    parse_json_text("{\n  \"dims\": [5,2],\n  \"codewords\": [[0,0]\n}", "code.json");
    FAIL("no exception");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).rfind("code.json:4:1:", 0) == 0);
  }
}

TEST_CASE("cyclic spec files") {
  const auto spec = cyclic_spec_from_json(
      json::parse(R"({"orders":[8,8,8,8],"generator_exponents":[2,2,4,4]})"));
  CHECK(spec.orders == std::vector<Coord>{8, 8, 8, 8});
  CHECK_THROWS_AS(cyclic_spec_from_json(json::parse(R"({"orders":[8],"generator_exponents":[0]})")),
                  DomainError);
}

TEST_CASE("report serialisation") {
  const json j = to_json(eta(Grid{2, 2, 10}, 5));
  CHECK(j["value"] == 20);
  CHECK(j["kind"] == "eta");
  CHECK(j["path"] == "formula-inclusion-exclusion");
  CHECK_FALSE(j.contains("center"));
  CHECK(to_json(ball_size_at(Grid{5, 2}, Point{2, 0}, 2))["center"] == json::parse("[2,0]"));
}

}  // TEST_SUITE
