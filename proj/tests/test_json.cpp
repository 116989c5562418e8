#include <doctest.h>

#include <random>

#include "support.hpp"
#include "toricbundle/errors.hpp"
#include "toricbundle/json_io.hpp"

using namespace toricbundle;

TEST_SUITE("json") {
  TEST_CASE("rationals") {
    CHECK(rational_to_json(Rational(-3, 4)) == Json::parse("[-3,4]"));
    CHECK(rational_from_json(Json::parse("[6,-4]")) == Rational(-3, 2));
    CHECK(rational_from_json(Json::parse("5")) == 5);
    CHECK(rational_from_json(Json::parse("\"-1/3\"")) == Rational(-1, 3));
    const Rational huge = Rational(BigInt("123456789012345678901234567891"), 7);
    CHECK(rational_to_json(huge) == Json::parse("[\"123456789012345678901234567891\", 7]"));
    CHECK(rational_from_json(rational_to_json(huge)) == huge);
    CHECK_THROWS_AS(rational_from_json(Json::parse("[1,0]")), InputError);
    CHECK_THROWS_AS(rational_from_json(Json::parse("1.5")), InputError);
  }

  TEST_CASE("fan round trip is bit exact") {
    for (const auto& name : support::fan_fixtures()) {
      const Json j = read_json_file(support::fixture_path(name + ".json"));
      const Fan f = fan_from_json(j);
      CHECK(to_json(f) == j);
      CHECK(fan_from_json(parse_json_text(dump_json(to_json(f)))) == f);
    }
  }

  TEST_CASE("data round trip") {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 200; ++i) {
      const KaneyamaData d = support::random_valid_data(rng);
      const std::string text = dump_json(to_json(d));
      const KaneyamaData back = data_from_json(parse_json_text(text));
      CHECK(back == d);
      CHECK(dump_json(to_json(back)) == text);
    }
  }

  TEST_CASE("reports re-parse to equal values") {
    const KaneyamaData d = support::fixture_data("tangent_kl_s1_a0");
    const Json aut = to_json(aut_lie_algebra(d, 0));
    CHECK(parse_json_text(dump_json(aut)) == aut);
    CHECK(aut["dim"] == 2);
    CHECK(aut["per_ray_dims"].size() == 4);
    const SplitVerdict v = split_check(d, 0);
    const SplitVerdict back = split_verdict_from_json(parse_json_text(dump_json(to_json(v))));
    CHECK(back.kind == v.kind);
    CHECK(back.certificate == v.certificate);
    CHECK(back.reason == v.reason);
    const Json rep = to_json(validate(d));
    CHECK(parse_json_text(dump_json(rep)) == rep);
    CHECK(rep["valid"] == true);
  }

  TEST_CASE("spanning transition tables are completed") {
    const KaneyamaData d = support::fixture_data("tangent_p3");
    Json j = to_json(d);
    Json sparse = Json::object();
    sparse["0,1"] = j["P"]["0,1"];
    sparse["2,1"] = j["P"]["2,1"];
    sparse["3,0"] = j["P"]["3,0"];
    j["P"] = sparse;
    CHECK(data_from_json(j) == d);
    sparse["0,2"] = matrix_to_json(QMatrix::identity(3));
    j["P"] = sparse;
    CHECK_THROWS_AS(data_from_json(j), ValidationError);
  }

  TEST_CASE("syntax errors carry line and column") {
    try {
      parse_json_text("{\n  \"dim\": 2,\n  \"rays\": [1 2]\n}", "fan.json");
      FAIL("accepted malformed JSON");
    } catch (const InputError& e) {
      const std::string msg = e.what();
      CHECK(msg.rfind("fan.json:3:", 0) == 0);
    }
    CHECK_THROWS_AS(read_json_file(support::fixture_path("missing.json")), InputError);
  }

  TEST_CASE("schema errors name the offending value") {
    auto message = [](const std::string& text) {
      try {
        data_from_json(Json::parse(text));
      } catch (const InputError& e) {
        return std::string(e.what());
      }
      return std::string();
    };
    const std::string fan = R"("fan": {"dim": 1, "rays": [[1], [-1]], "max_cones": [[0], [1]]})";
    CHECK(message(R"({"group": {"kind": "GL", "rank": 1}, )" + fan + R"(, "xi": {"0": [[0]]}, "P": {}})")
              .find("/xi: missing entry for cone 1") != std::string::npos);
    CHECK(message(R"({"group": {"kind": "XL", "rank": 1}, )" + fan + R"(, "xi": {}, "P": {}})").find("/group/kind") !=
          std::string::npos);
    CHECK(message(R"({"group": {"kind": "GL", "rank": 1}, )" + fan +
                  R"(, "xi": {"0": [[0]], "1": [["a"]]}, "P": {"0,1": [[1]]}})")
              .find("/xi/1/0/0") != std::string::npos);
    CHECK(message(R"({"group": {"kind": "GL", "rank": 1}, )" + fan +
                  R"(, "xi": {"0": [[0]], "1": [[0]]}, "P": {"0;1": [[1]]}})")
              .find("tau,sigma") != std::string::npos);
  }

  TEST_CASE("witness documents") {
    const KaneyamaData d = support::fixture_data("tangent_p2");
    const auto eq = equivalence_witness_from_json(read_json_file(support::fixture_path("witness_scaling_equivalence.json")), 3);
    CHECK(verify_equivalence_witness(d, d, eq));
    CHECK(equivalence_witness_from_json(to_json(eq), 3).beta == eq.beta);
    const auto mor = morphism_witness_from_json(read_json_file(support::fixture_path("witness_identity_morphism.json")), 3);
    CHECK(to_json(mor, 0)["g0"] == matrix_to_json(QMatrix::identity(2)));
    const auto red = reduction_witness_from_json(read_json_file(support::fixture_path("witness_split_reduction.json")), 3);
    CHECK(red.partition == Partition{{0}, {1}});
    CHECK(reduction_witness_from_json(to_json(red), 3).alpha == red.alpha);
  }
}
