#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "quatcalc/function_spec.hpp"
#include "quatcalc/json_io.hpp"
#include "quatcalc/random.hpp"

using namespace quatcalc;

TEST_CASE("named specs parse") {
    CHECK(parse_spec("exp").kind() == FuncKind::Exp);
    CHECK(parse_spec("sin").kind() == FuncKind::Sin);
    CHECK(parse_spec("cos").kind() == FuncKind::Cos);
    CHECK(parse_spec("log").kind() == FuncKind::Log);
    CHECK(parse_spec("recip").kind() == FuncKind::Recip);

    CHECK(parse_spec("pow:3").exponent() == 3);
    CHECK(parse_spec("pow:-2").exponent() == -2);
    CHECK(parse_spec("pow:0").exponent() == 0);
}

TEST_CASE("poly specs parse") {
    const AnalyticFunction f = parse_spec("poly:[1, 2.5, -3]");
    REQUIRE(f.kind() == FuncKind::Series);
    REQUIRE(f.coefficients().size() == 3);
    CHECK(f.coefficients()[0] == Quaternion{1.0});
    CHECK(f.coefficients()[1] == Quaternion{2.5});
    CHECK(f.coefficients()[2] == Quaternion{-3.0});
    CHECK(f.center() == 0.0);

    const AnalyticFunction g = parse_spec("poly:[[0,0,1,0], 2]");
    REQUIRE(g.coefficients().size() == 2);
    CHECK(g.coefficients()[0] == unit_j);
    CHECK(g.coefficients()[1] == Quaternion{2.0});

    CHECK(parse_spec("poly:[]").coefficients().empty());
}

TEST_CASE("malformed specs are rejected") {
    const std::vector<std::string> bad{
        "",          "tan",        "POW:3",      "pow:",      "pow:3x",
        "pow:3.5",   "pow: 3",     "poly:",      "poly:{}",   "poly:[[1,2]]",
        "poly:[[1,2,3,4,5]]",      "poly:[true]", "poly:[\"1\"]", "exp ",
    };
    for (const std::string& s : bad) {
        INFO("spec: '" << s << "'");
        CHECK_THROWS_AS(parse_spec(s), parse_error);
    }
}

TEST_CASE("canonical strings are fixed points") {
    const std::vector<std::string> canonical{
        "exp", "sin", "cos", "log", "recip", "pow:5", "pow:-1", "pow:0",
        "poly:[]", "poly:[1.0,2.5,-3.0]", "poly:[[0.0,0.0,1.0,0.0],2.0]",
    };
    for (const std::string& s : canonical) {
        INFO("spec: '" << s << "'");
        CHECK(to_spec(parse_spec(s)) == s);
    }

    // non-canonical spellings converge after one round
    CHECK(to_spec(parse_spec("poly:[1, 2.50]")) == "poly:[1.0,2.5]");
    CHECK(to_spec(parse_spec("poly:[[0, 0, 0.5, 0]]")) == "poly:[[0.0,0.0,0.5,0.0]]");
}

TEST_CASE("round-trip preserves every coefficient bit") {
    Rng rng(31);
    for (int i = 0; i < 100; ++i) {
        std::vector<Quaternion> coeffs;
        const int terms = 1 + static_cast<int>(rng.uniform(0.0, 5.0));
        for (int t = 0; t < terms; ++t) {
            // mix pure-real and full coefficients, with awkward decimals
            if (rng.u01() < 0.5)
                coeffs.push_back(Quaternion{rng.uniform(-10.0, 10.0) / 3.0});
            else
                coeffs.push_back(rng.quat_box(5.0) * (1.0 / 7.0));
        }
        const AnalyticFunction f = AnalyticFunction::power_series(coeffs);
        const AnalyticFunction g = parse_spec(to_spec(f));
        REQUIRE(g.coefficients().size() == coeffs.size());
        for (std::size_t t = 0; t < coeffs.size(); ++t)
            CHECK(g.coefficients()[t] == coeffs[t]); // exact, not approximate
    }
}

TEST_CASE("functions without a spec form are rejected") {
    CHECK_THROWS_AS(to_spec(AnalyticFunction::exp().scaled(unit_j)), parse_error);
    CHECK_THROWS_AS(to_spec(AnalyticFunction::pow(2).scaled(Quaternion{2.0})), parse_error);
    CHECK_THROWS_AS(to_spec(AnalyticFunction::power_series({Quaternion{1.0}}, 0.5)), parse_error);
    // a scaled series folds the factor into its coefficients and stays printable
    CHECK(to_spec(AnalyticFunction::power_series({Quaternion{1.0}}).scaled(unit_j))
          == "poly:[[0.0,0.0,1.0,0.0]]");
}

TEST_CASE("quaternion json form") {
    const Quaternion q{1.5, -2.0, 0.25, 3.0};
    const nlohmann::json j = quaternion_to_json(q);
    CHECK(j.dump() == "[1.5,-2.0,0.25,3.0]");
    CHECK(quaternion_from_json(j) == q);

    CHECK_THROWS_AS(quaternion_from_json(nlohmann::json::parse("[1,2,3]")), parse_error);
    CHECK_THROWS_AS(quaternion_from_json(nlohmann::json::parse("[1,2,3,\"4\"]")), parse_error);
    CHECK_THROWS_AS(quaternion_from_json(nlohmann::json::parse("{}")), parse_error);
}

TEST_CASE("path json form") {
    const std::string text = R"({"waypoints": [[0,0,0,0], [1,0,1,0], [1,1,1,1]],
                                 "segments_per_leg": 32})";
    const Path path = parse_path(text);
    REQUIRE(path.waypoints.size() == 3);
    CHECK(path.waypoints[1] == Quaternion{1.0, 0.0, 1.0, 0.0});
    CHECK(path.segments_per_leg == 32);
    CHECK_FALSE(path.closed());

    // round-trip through the object form
    const Path again = path_from_json(path_to_json(path));
    CHECK(again.waypoints == path.waypoints);
    CHECK(again.segments_per_leg == path.segments_per_leg);
}

TEST_CASE("malformed paths are rejected") {
    const std::vector<std::string> bad{
        "not json",
        "[]",
        R"({"waypoints": [[0,0,0,0],[1,0,0,0]]})",
        R"({"segments_per_leg": 4})",
        R"({"waypoints": [[0,0,0,0]], "segments_per_leg": 4})",
        R"({"waypoints": [[0,0,0,0],[1,0,0]], "segments_per_leg": 4})",
        R"({"waypoints": [[0,0,0,0],[1,0,0,0]], "segments_per_leg": 0})",
        R"({"waypoints": [[0,0,0,0],[1,0,0,0]], "segments_per_leg": 2.5})",
        R"({"waypoints": [[0,0,0,0],[0,0,0,0]], "segments_per_leg": 4})",
    };
    for (const std::string& s : bad) {
        INFO("path: '" << s << "'");
        CHECK_THROWS_AS(parse_path(s), parse_error);
    }
}
