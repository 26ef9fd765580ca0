#include "doctest.h"

#include <fstream>
#include <string>

#include "burau_atlas.h"
#include "json.hpp"

using json = nlohmann::ordered_json;

namespace {

struct Str {
    char* s = nullptr;
    ~Str() { ba_string_free(s); }
};

// Minimal structural validator for the schema subset shipped in data/schema:
// type tags, required properties, nested properties/items, enum of strings.
bool conforms(const json& schema, const json& value) {
    if (schema.contains("type")) {
        const std::string t = schema["type"];
        if (t == "object" && !value.is_object()) return false;
        if (t == "array" && !value.is_array()) return false;
        if (t == "string" && !value.is_string()) return false;
        if (t == "integer" && !value.is_number_integer() && !value.is_number_unsigned()) return false;
        if (t == "boolean" && !value.is_boolean()) return false;
    }
    if (schema.contains("enum")) {
        bool hit = false;
        for (const auto& e : schema["enum"]) hit = hit || e == value;
        if (!hit) return false;
    }
    if (schema.contains("required"))
        for (const auto& key : schema["required"])
            if (!value.contains(key.get<std::string>())) return false;
    if (schema.contains("properties") && value.is_object())
        for (const auto& [key, sub] : schema["properties"].items())
            if (value.contains(key) && !conforms(sub, value[key])) return false;
    if (schema.contains("items") && value.is_array())
        for (const auto& item : value)
            if (!conforms(schema["items"], item)) return false;
    return true;
}

json load_schema(const std::string& name) {
    std::ifstream in(std::string(BATLAS_SOURCE_DIR) + "/data/schema/" + name);
    REQUIRE(in.good());
    return json::parse(in);
}

}  // namespace

TEST_CASE("poly canonicalization through the C surface") {
    Str out;
    REQUIRE(ba_poly_canonical("3*t^2 - t + 1", &out.s) == BA_OK);
    CHECK(std::string(out.s) == "3*t^2-t+1");

    Str bad;
    CHECK(ba_poly_canonical("t^-2", &bad.s) == BA_E_INVALID);
    CHECK(std::string(ba_last_error()).find("position") != std::string::npos);
}

TEST_CASE("enumerate: table 1 row over the C surface") {
    ba_enum_result* res = nullptr;
    REQUIRE(ba_enumerate(13, "t+2", 0, nullptr, 0, &res) == BA_OK);
    CHECK(ba_enum_index(res) == 14);
    CHECK(ba_enum_genus(res) == 0);
    CHECK(ba_enum_c2(res) == 0);
    CHECK(ba_enum_c3(res) == 2);
    CHECK(!ba_enum_cap_exceeded(res));
    CHECK(!ba_enum_six_significant(res));

    Str js;
    REQUIRE(ba_enum_json(res, &js.s) == BA_OK);
    json j = json::parse(js.s);
    CHECK(j["index"] == 14);
    CHECK(j["widths"] == json::parse("[[1,2],[12,1]]"));
    CHECK(j["partition"] == "1^2 12^1");

    Str dot;
    REQUIRE(ba_enum_dot(res, &dot.s) == BA_OK);
    CHECK(std::string(dot.s).find("graph skeleton {") == 0);
    ba_enum_result_free(res);
}

TEST_CASE("enumerate: reducible minimal polynomial is rejected with factors") {
    ba_enum_result* res = nullptr;
    CHECK(ba_enumerate(13, "t^2-1", 0, nullptr, 0, &res) == BA_E_DOMAIN);
    std::string msg = ba_last_error();
    CHECK(msg.find("reducible") != std::string::npos);
    CHECK(msg.find("t+1") != std::string::npos);
    CHECK(msg.find("t+12") != std::string::npos);

    CHECK(ba_enumerate(12, "t+5", 0, nullptr, 0, &res) == BA_E_DOMAIN);  // composite modulus
}

TEST_CASE("enumerate: braid mode six-significant figure") {
    ba_enum_result* res = nullptr;
    REQUIRE(ba_enumerate(7, "t+5", 1, nullptr, 0, &res) == BA_OK);
    CHECK(ba_enum_index(res) == 7);
    CHECK(ba_enum_six_significant(res) == 1);
    ba_enum_result_free(res);
}

TEST_CASE("enumerate: custom line and cap") {
    ba_enum_result* res = nullptr;
    REQUIRE(ba_enumerate(13, "t+2", 0, "0;1", 0, &res) == BA_OK);  // e2 explicitly
    CHECK(ba_enum_index(res) == 14);
    ba_enum_result_free(res);

    REQUIRE(ba_enumerate(43, "t+4", 0, nullptr, 9, &res) == BA_OK);
    CHECK(ba_enum_cap_exceeded(res) == 1);
    Str dot;
    CHECK(ba_enum_dot(res, &dot.s) == BA_E_CAP);
    ba_enum_result_free(res);
}

TEST_CASE("classify over the C surface") {
    Str js;
    REQUIRE(ba_classify_black(7, "t+5", 0, &js.s) == BA_OK);
    json j = json::parse(js.s);
    CHECK(j["kind"] == "III+");
    CHECK(j["dim"] == 1);

    Str js2;
    REQUIRE(ba_classify_white(11, "t+8", 1, &js2.s) == BA_OK);
    CHECK(json::parse(js2.s)["kind"] == "IV");

    Str js3;
    REQUIRE(ba_classify_trivalent(13, "t+2", 12, 1, 0, 0, &js3.s) == BA_OK);
    json j3 = json::parse(js3.s);
    CHECK(j3["kind"] == "I1");
    CHECK(j3["generator"] == json::parse("[\"0\",\"1\"]"));

    Str bad;
    CHECK(ba_classify_trivalent(13, "t-1", 2, 2, 0, 0, &bad.s) == BA_E_DOMAIN);  // xi = 1
}

TEST_CASE("search over a short range with table expectations") {
    ba_search_result* res = nullptr;
    REQUIRE(ba_search(12, 12, 0, 0, &res) == BA_OK);
    CHECK(ba_search_candidate_count(res) > 0);
    CHECK(ba_search_genus0_count(res) >= 6);  // the p=5 and p=13 families
    Str js;
    REQUIRE(ba_search_json(res, &js.s) == BA_OK);
    json j = json::parse(js.s);
    CHECK(j["char0_anomalies"].empty());
    bool found = false;
    for (const auto& c : j["candidates"])
        if (c["p"] == 13 && c["min_poly"] == "t+2" && c["verdict"] == "genus0") found = true;
    CHECK(found);
    ba_search_result_free(res);
}

TEST_CASE("char0 search over the C surface") {
    ba_search_result* res = nullptr;
    REQUIRE(ba_search(11, 13, 1, 0, &res) == BA_OK);
    CHECK(ba_search_candidate_count(res) == 0);
    CHECK(ba_search_expect_tables_ok(res) == 1);
    ba_search_result_free(res);

    CHECK(ba_search(2, 1, 0, 0, &res) == BA_E_INVALID);  // bad range
}

TEST_CASE("verify suite over the C surface") {
    Str js;
    int ok = 0;
    REQUIRE(ba_verify("burau", &js.s, &ok) == BA_OK);
    CHECK(ok == 1);
    json j = json::parse(js.s);
    CHECK(j["ok"] == true);
    CHECK(j["items"].size() >= 5);
    CHECK(ba_verify("bogus", &js.s, &ok) == BA_E_INVALID);
}

TEST_CASE("n79 over the C surface") {
    Str js;
    int ok = 0;
    REQUIRE(ba_n79(14, &js.s, &ok) == BA_OK);
    CHECK(ok == 1);
    json j = json::parse(js.s);
    CHECK(j["targets"].size() == 1);
    CHECK(j["targets"][0]["residues"].size() == 19);
    CHECK(j["targets"][0]["residues"][0]["residue"] == "2*t^2-t+2");
}

TEST_CASE("all json outputs conform to the shipped schemas") {
    {
        ba_enum_result* res = nullptr;
        REQUIRE(ba_enumerate(13, "t+2", 0, nullptr, 0, &res) == BA_OK);
        Str js;
        REQUIRE(ba_enum_json(res, &js.s) == BA_OK);
        CHECK(conforms(load_schema("enumerate.schema.json"), json::parse(js.s)));
        ba_enum_result_free(res);
    }
    {
        ba_search_result* res = nullptr;
        REQUIRE(ba_search(12, 12, 0, 0, &res) == BA_OK);
        Str js;
        REQUIRE(ba_search_json(res, &js.s) == BA_OK);
        CHECK(conforms(load_schema("search.schema.json"), json::parse(js.s)));
        ba_search_result_free(res);
    }
    {
        Str js;
        REQUIRE(ba_classify_trivalent(13, "t+2", 12, 1, 0, 0, &js.s) == BA_OK);
        CHECK(conforms(load_schema("classify.schema.json"), json::parse(js.s)));
        Str js2;
        REQUIRE(ba_classify_white(11, "t+8", 1, &js2.s) == BA_OK);
        CHECK(conforms(load_schema("classify.schema.json"), json::parse(js2.s)));
    }
    {
        Str js;
        int ok = 0;
        REQUIRE(ba_verify("burau", &js.s, &ok) == BA_OK);
        CHECK(conforms(load_schema("verify.schema.json"), json::parse(js.s)));
    }
    {
        Str js;
        int ok = 0;
        REQUIRE(ba_n79(0, &js.s, &ok) == BA_OK);
        CHECK(conforms(load_schema("n79.schema.json"), json::parse(js.s)));
    }
}
