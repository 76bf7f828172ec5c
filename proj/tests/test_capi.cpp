#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "orbint/capi.h"

#include "json.hpp"

#include <string>

namespace {

std::string take(char* s) {
    std::string out = s ? s : "";
    orbint_string_free(s);
    return out;
}

orbint_curve* parse_ok(const char* text) {
    orbint_curve* c = nullptr;
    char* err = nullptr;
    REQUIRE(orbint_curve_parse_json(text, &c, &err) == ORBINT_OK);
    REQUIRE(c != nullptr);
    return c;
}

}  // namespace

TEST_CASE("curve parsing") {
    orbint_curve* p1 = parse_ok("{\"q\": 2, \"genus\": 0}");
    CHECK(orbint_curve_q(p1) == 2);
    CHECK(orbint_curve_genus(p1) == 0);
    orbint_curve_free(p1);

    orbint_curve* ell = parse_ok("{\"q\": 2, \"genus\": 1, \"counts\": [3]}");
    CHECK(orbint_curve_genus(ell) == 1);
    orbint_curve_free(ell);

    /* explicit numerator accepted only under the functional equation */
    orbint_curve* byn = parse_ok("{\"q\": 2, \"genus\": 1, \"numerator\": [\"1\", \"-1\", \"2\"]}");
    orbint_curve_free(byn);

    orbint_curve* c = nullptr;
    char* err = nullptr;
    CHECK(orbint_curve_parse_json("{\"q\": 2, \"genus\": 1, \"numerator\": [\"1\", \"0\", \"1\"]}",
                                  &c, &err) == ORBINT_USAGE_ERROR);
    CHECK(take(err).size() > 0);
    err = nullptr;
    CHECK(orbint_curve_parse_json("not json", &c, &err) == ORBINT_USAGE_ERROR);
    take(err);
    err = nullptr;
    CHECK(orbint_curve_parse_json("{\"genus\": 0}", &c, &err) == ORBINT_USAGE_ERROR);
    CHECK(take(err).find("\"q\"") != std::string::npos);
}

TEST_CASE("values through the boundary") {
    orbint_curve* p1 = parse_ok("{\"q\": 2, \"genus\": 0}");
    char* out = nullptr;
    char* err = nullptr;

    REQUIRE(orbint_zeta_at(p1, "1/4", &out, &err) == ORBINT_OK);
    CHECK(take(out) == "8/3");

    REQUIRE(orbint_volume(p1, 2, &out, &err) == ORBINT_OK);
    CHECK(take(out) == "1/3");

    REQUIRE(orbint_psi(p1, 1, 2, 1, 1, 0, &out, &err) == ORBINT_OK);
    CHECK(take(out) == "2/3");

    REQUIRE(orbint_integral(p1, 1, 2, 2, 1, 0, &out, &err) == ORBINT_OK);
    nlohmann::json res = nlohmann::json::parse(take(out));
    CHECK(res["value"] == "1/3");
    CHECK(res["psi"] == "1");

    /* determinism: repeated calls give identical bytes */
    REQUIRE(orbint_integral(p1, 1, 4, 1, 1, 0, &out, &err) == ORBINT_OK);
    std::string first = take(out);
    REQUIRE(orbint_integral(p1, 1, 4, 1, 1, 0, &out, &err) == ORBINT_OK);
    CHECK(take(out) == first);

    orbint_curve_free(p1);
}

TEST_CASE("error classification") {
    orbint_curve* p1 = parse_ok("{\"q\": 2, \"genus\": 0}");
    char* out = nullptr;
    char* err = nullptr;

    /* evaluation at a pole of the zeta function: bad input */
    CHECK(orbint_zeta_at(p1, "1/2", &out, &err) == ORBINT_USAGE_ERROR);
    CHECK(take(err).find("pole") != std::string::npos);
    err = nullptr;

    /* non-coprime degree: outside the theorem's hypothesis */
    CHECK(orbint_integral(p1, 1, 4, 1, 2, 0, &out, &err) == ORBINT_USAGE_ERROR);
    CHECK(take(err).find("coprime") != std::string::npos);
    err = nullptr;

    /* block count must divide the rank */
    CHECK(orbint_psi(p1, 1, 3, 2, 1, 0, &out, &err) == ORBINT_USAGE_ERROR);
    take(err);
    err = nullptr;

    CHECK(orbint_zeta_at(nullptr, "1", &out, &err) == ORBINT_USAGE_ERROR);
    take(err);

    orbint_curve_free(p1);
}

TEST_CASE("identity suites through the boundary") {
    char* out = nullptr;
    char* err = nullptr;
    REQUIRE(orbint_check_identities(2, 7, &out, &err) == ORBINT_OK);
    nlohmann::json rep = nlohmann::json::parse(take(out));
    CHECK(rep["passed"] == true);
    CHECK(rep["suites"].size() >= 10);
    for (const auto& s : rep["suites"])
        CHECK(s["passed"] == true);
}
