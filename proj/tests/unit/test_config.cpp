#include <doctest.h>

#include "solv3/config.hpp"
#include "solv3/errors.hpp"

using namespace solv3;
using nlohmann::json;

namespace {

json base_config() {
    return json::parse(R"({
        "group": {"class": "r3_lambda", "lambda": 0.5},
        "derivation": {"dstar": [[1, 0], [0, 0.5]], "xi": [1, 1]},
        "controls": [[1, 0, 0]]
    })");
}

}  // namespace

TEST_CASE("round trip") {
    const auto sys = parse_system(base_config());
    CHECK(sys.cls().kind == GroupKind::R3Lambda);
    CHECK(sys.cls().lambda == doctest::Approx(0.5));
    CHECK(sys.drift.dstar(1, 1) == doctest::Approx(0.5));
    CHECK((sys.drift.xi - Vec2(1, 1)).norm() <= 1e-15);
    REQUIRE(sys.controls.size() == 1);
    CHECK(sys.controls[0].a == doctest::Approx(1.0));

    const json back = serialize_system(sys);
    const auto again = parse_system(back);
    CHECK(again.cls() == sys.cls());
    CHECK((again.drift.dstar - sys.drift.dstar).norm() <= 1e-15);
    CHECK((again.drift.xi - sys.drift.xi).norm() <= 1e-15);
}

TEST_CASE("all class spellings parse") {
    const std::vector<std::pair<json, GroupKind>> cases = {
        {{{"class", "r2_tilde"}}, GroupKind::R2Tilde},
        {{{"class", "r2"}}, GroupKind::R2},
        {{{"class", "r3"}}, GroupKind::R3},
        {{{"class", "r3_lambda"}, {"lambda", -0.5}}, GroupKind::R3Lambda},
        {{{"class", "r3_prime"}, {"lambda", 2.0}}, GroupKind::R3PrimeLambda},
        {{{"class", "e_tilde"}}, GroupKind::ETilde},
        {{{"class", "e_n"}, {"n", 2}}, GroupKind::En},
    };
    for (const auto& [group, kind] : cases) {
        json j = base_config();
        j["group"] = group;
        if (kind == GroupKind::R2) {
            j["derivation"]["dstar"] = {{0, 0}, {0, 1}};
        } else if (kind == GroupKind::R2Tilde) {
            j["derivation"]["dstar"] = {{1, 0}, {0, 2}};
        } else if (kind == GroupKind::R3) {
            j["derivation"]["dstar"] = {{1, 1}, {0, 1}};
        } else if (kind == GroupKind::ETilde || kind == GroupKind::En ||
                   kind == GroupKind::R3PrimeLambda) {
            j["derivation"]["dstar"] = {{0.5, -1}, {1, 0.5}};
        }
        CAPTURE(group.dump());
        CHECK(parse_system(j).cls().kind == kind);
    }
}

TEST_CASE("unknown keys are rejected") {
    json j = base_config();
    j["extra"] = 1;
    CHECK_THROWS_AS(parse_system(j), ParseError);

    j = base_config();
    j["group"]["typo"] = true;
    CHECK_THROWS_AS(parse_system(j), ParseError);

    j = base_config();
    j["derivation"]["dStar"] = j["derivation"]["dstar"];
    CHECK_THROWS_AS(parse_system(j), ParseError);
}

TEST_CASE("missing and malformed fields are parse errors") {
    json j = base_config();
    j.erase("controls");
    CHECK_THROWS_AS(parse_system(j), ParseError);

    j = base_config();
    j["derivation"]["xi"] = {1, 2, 3};
    CHECK_THROWS_AS(parse_system(j), ParseError);

    j = base_config();
    j["derivation"]["dstar"] = {{1, 0}, {0}};
    CHECK_THROWS_AS(parse_system(j), ParseError);

    j = base_config();
    j["controls"] = json::array();
    CHECK_THROWS_AS(parse_system(j), ParseError);

    j = base_config();
    j["controls"][0] = {1, 0};
    CHECK_THROWS_AS(parse_system(j), ParseError);

    j = base_config();
    j["group"]["class"] = "heisenberg";
    CHECK_THROWS_AS(parse_system(j), ParseError);

    CHECK_THROWS_AS(parse_system_text("not json at all"), ParseError);
}

TEST_CASE("class parameters are gated by the class") {
    json j = base_config();
    j["group"] = {{"class", "r3"}, {"lambda", 0.5}};
    CHECK_THROWS_AS(parse_system(j), ParseError);

    j = base_config();
    j["group"] = {{"class", "r3_lambda"}};  // missing lambda
    CHECK_THROWS_AS(parse_system(j), ParseError);

    j = base_config();
    j["group"] = {{"class", "e_n"}};  // missing n
    CHECK_THROWS_AS(parse_system(j), ParseError);

    j = base_config();
    j["group"] = {{"class", "e_n"}, {"n", 1.5}};
    CHECK_THROWS_AS(parse_system(j), ParseError);
}

TEST_CASE("structurally valid but inconsistent input is a semantic error") {
    // dstar does not commute with the structure matrix
    json j = base_config();
    j["derivation"]["dstar"] = {{0, 1}, {0, 0}};
    CHECK_THROWS_AS(parse_system(j), SemanticError);

    // lambda outside the admissible range
    j = base_config();
    j["group"]["lambda"] = 2.0;
    CHECK_THROWS_AS(parse_system(j), SemanticError);

    // zero control field
    j = base_config();
    j["controls"] = {{0, 0, 0}};
    CHECK_THROWS_AS(parse_system(j), SemanticError);
}

TEST_CASE("verdict records") {
    const auto sys = parse_system(base_config());
    const auto rec = verdict_record(decide(sys));
    CHECK(rec.at("controllable") == false);
    CHECK(rec.at("clause") == "T1.R3Lambda");
    CHECK(rec.at("larc") == true);
    CHECK(rec.at("delta_dim") == 1);
    const auto spec = rec.at("spectrum");
    REQUIRE(spec.size() == 3);
    // [re, im] pairs, sorted lexicographically
    for (const auto& pair : spec) REQUIRE(pair.size() == 2);
    CHECK(spec[0][0].get<double>() == doctest::Approx(0.0));
    CHECK(spec[1][0].get<double>() == doctest::Approx(0.5));
    CHECK(spec[2][0].get<double>() == doctest::Approx(1.0));
    CHECK(!rec.at("certificate").is_null());
    CHECK(rec.at("certificate").at("kind") == "half_plane");

    // controllable systems carry a null certificate
    json j = base_config();
    j["group"] = {{"class", "r3_prime"}, {"lambda", 1.0}};
    j["derivation"]["dstar"] = {{0, 0}, {0, 0}};
    j["derivation"]["xi"] = {1, 0};
    const auto rec2 = verdict_record(decide(parse_system(j)));
    CHECK(rec2.at("controllable") == true);
    CHECK(rec2.at("certificate").is_null());
}
