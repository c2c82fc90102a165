#include <doctest.h>

#include <sstream>

#include "ua/corpus.hpp"
#include "ua/io.hpp"

using namespace ua;

#ifndef UAW_TEST_DATA
#define UAW_TEST_DATA "tests/data"
#endif

namespace {
std::string data(const char* name) { return std::string(UAW_TEST_DATA) + "/" + name; }
}  // namespace

TEST_CASE("algebra files") {
  SUBCASE("round trip") {
    auto q8 = builtin("Q8");
    auto back = algebra_from_json(algebra_to_json(*q8));
    CHECK(back->same_structure(*q8));
    CHECK(back->name() == "Q8");
  }
  SUBCASE("loading a file") {
    auto a = load_algebra_file(data("z4.alg.json"));
    CHECK(a->name() == "Zfour");
    CHECK(a->same_structure(*builtin("Z4")));
  }
  SUBCASE("out-of-range entries are rejected with a field path") {
    try {
      load_algebra_file(data("bad_entry.alg.json"));
      FAIL("expected InputError");
    } catch (const InputError& e) {
      const std::string msg = e.what();
      CHECK(msg.find("operations[0].table[1][1]") != std::string::npos);
      CHECK(msg.find("out of range") != std::string::npos);
    }
  }
  SUBCASE("shape errors carry positions") {
    CHECK_THROWS_AS(algebra_from_json(nlohmann::json{{"name", "x"}, {"size", 0}}),
                    InputError);
    CHECK_THROWS_AS(algebra_from_json(nlohmann::json::array()), InputError);
  }
}

TEST_CASE("builtin name resolution") {
  CHECK(builtin("Z6")->size() == 6);
  CHECK(builtin("S3xZ2")->size() == 12);
  CHECK(builtin("Z2xZ2xZ2")->size() == 8);
  CHECK(isomorphic(builtin("V4"), builtin("Z2xZ2")));
  CHECK_FALSE(try_builtin("nonsense").has_value());
  CHECK_FALSE(try_builtin("Zx2").has_value());
  CHECK_THROWS_AS(builtin("W13"), InputError);
}

TEST_CASE("hom files") {
  std::ostringstream warn;
  const Homomorphism f = load_hom_file(data("sign_s3.hom.json"), &warn);
  CHECK(f.source()->name() == "S3");
  CHECK(f.target()->name() == "Z2");
  CHECK(f.surjective());
  SUBCASE("invalid maps are rejected") {
    nlohmann::json j{{"source", "S3"}, {"target", "Z2"}, {"map", {0, 0, 0, 0, 0, 1}}};
    CHECK_THROWS_AS(hom_from_json(j), InputError);
  }
}

TEST_CASE("check files with congruence literals") {
  const CheckFile cf = load_check_file(data("bare4_perm.check.json"));
  CHECK(cf.algebra->name() == "bare4");
  REQUIRE(cf.congruences.size() == 2);
  CHECK(cf.congruences[0].first == "R");
  CHECK(cf.congruences[0].second.part == Partition::from_blocks(4, {{0, 1}, {2, 3}}));
}

TEST_CASE("diagram files") {
  SUBCASE("identity rectangle") {
    const DiagramDoc doc = load_diagram_file(data("identity_rect.json"));
    REQUIRE(std::holds_alternative<Rectangle>(doc));
    const CheckReport rep = rect_split_check(std::get<Rectangle>(doc));
    CHECK(rep.hypotheses_ok());
    CHECK(rep.verdict == "pass");
  }
  SUBCASE("product-over-a-point square is a pullback") {
    const DiagramDoc doc = load_diagram_file(data("pullback_square.json"));
    REQUIRE(std::holds_alternative<Square>(doc));
    CHECK(is_pullback(std::get<Square>(doc)));
    CHECK(is_pushout(std::get<Square>(doc)));
  }
  SUBCASE("unknown shapes and arrows are input errors") {
    CHECK_THROWS_AS(load_diagram_file(data("z4.alg.json")), InputError);
  }
}

TEST_CASE("reports carry the invariant between hypotheses and verdict") {
  CheckReport rep;
  rep.check = "demo";
  rep.add_hypothesis("h", false, "why");
  rep.verdict = "pass";
  const nlohmann::json j = rep.to_json();
  CHECK(j["verdict"].is_null());  // hypotheses failed: no verdict in the output
  CHECK(j["hypotheses"][0]["pass"] == false);

  CheckReport ok;
  ok.check = "demo";
  ok.verdict = "holds";
  CHECK(ok.to_json()["verdict"] == "holds");
  CHECK(ok.to_json().contains("witness") == false);
}
