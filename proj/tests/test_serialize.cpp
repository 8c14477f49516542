#include "doctest.h"

#include <fstream>

#include "hermitian/serialize.hpp"

using namespace hermitian;
using nlohmann::json;

namespace {

json load_schema(const std::string& name) {
    const std::string path = std::string(HERMIT_SOURCE_DIR) + "/schemas/" + name;
    std::ifstream in(path);
    REQUIRE(in.good());
    json j;
    in >> j;
    return j;
}

// Structural validator for the schema subset used in-repo: type, required,
// properties, additionalProperties, patternProperties, enum, minimum, items.
bool validates(const json& instance, const json& schema, std::string& err);

bool type_matches(const json& v, const std::string& t) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "integer") return v.is_number_integer();
    if (t == "number") return v.is_number();
    if (t == "boolean") return v.is_boolean();
    return false;
}

bool validates(const json& instance, const json& schema, std::string& err) {
    if (schema.contains("type") &&
        !type_matches(instance, schema["type"].get<std::string>())) {
        err = "type mismatch (" + schema["type"].get<std::string>() + ")";
        return false;
    }
    if (schema.contains("enum")) {
        bool found = false;
        for (const auto& v : schema["enum"])
            if (v == instance) found = true;
        if (!found) {
            err = "enum mismatch";
            return false;
        }
    }
    if (schema.contains("minimum") && instance.is_number() &&
        instance.get<double>() < schema["minimum"].get<double>()) {
        err = "below minimum";
        return false;
    }
    if (instance.is_object()) {
        if (schema.contains("required"))
            for (const auto& key : schema["required"])
                if (!instance.contains(key.get<std::string>())) {
                    err = "missing required " + key.get<std::string>();
                    return false;
                }
        for (const auto& [key, value] : instance.items()) {
            const json* sub = nullptr;
            if (schema.contains("properties") && schema["properties"].contains(key))
                sub = &schema["properties"][key];
            else if (schema.contains("patternProperties")) {
                // single numeric-key pattern in this repo
                for (const auto& [pat, ps] : schema["patternProperties"].items()) {
                    (void)pat;
                    sub = &ps;
                }
            }
            if (sub == nullptr) {
                if (schema.contains("additionalProperties") &&
                    schema["additionalProperties"] == false) {
                    err = "unexpected property " + key;
                    return false;
                }
                continue;
            }
            if (!validates(value, *sub, err)) {
                err = key + ": " + err;
                return false;
            }
        }
    }
    if (instance.is_array() && schema.contains("items")) {
        for (const auto& item : instance)
            if (!validates(item, schema["items"], err)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("matrix CSV uses integer codes with LF endings") {
    GFMatrix m = GFMatrix::from_rows({{1, 0, 3}, {2, 2, 0}});
    CHECK(matrix_csv(m) == "1,0,3\n2,2,0\n");
}

TEST_CASE("coset-bounds JSON validates against the shipped schema") {
    const CurveParams cp = curve_params(4);
    const auto seq = make_coset_bounds(cp, SequenceKind::TwoPoint,
                                       BoundMethod::Improved, 22);
    const json j = coset_bounds_json(seq);
    CHECK(j["q"] == 4);
    CHECK(j["kind"] == "twopoint");
    CHECK(j["bounds"]["-1"] == 1);
    CHECK(j["bounds"]["10"] == 4);
    std::string err;
    CHECK_MESSAGE(validates(j, load_schema("coset_bounds.schema.json"), err), err);
}

TEST_CASE("redundancy JSON validates against the shipped schema") {
    const RedundancyTable t = make_redundancy_table(curve_params(4), 3, 11);
    std::string err;
    CHECK_MESSAGE(validates(redundancy_json(t), load_schema("redundancy.schema.json"), err),
                  err);
}

TEST_CASE("check diagram JSON validates against the shipped schema") {
    const CurveParams cp = curve_params(8);
    const auto table =
        check_table_improved(SequenceKind::TwoPoint, 19, BoundMethod::Improved, cp);
    json meta;
    meta["q"] = 8;
    meta["construction"] = "twopoint-improved";
    meta["support"] = "R-P-Q";
    meta["n"] = 511;
    meta["redundancy"] = 37;
    meta["check_rows"] = 37;
    meta["delta"] = 19;
    meta["classical_checks"] = 39;
    meta["rows_are"] = "evaluations of x^i y^(j-1)";
    meta["monomials"] = check_entries_json(table);
    std::string err;
    CHECK_MESSAGE(validates(meta, load_schema("check_monomials.schema.json"), err), err);
}

TEST_CASE("weight distributions serialize as decimal strings") {
    WeightDistribution d;
    d.counts = {BigInt(1), BigInt(0), BigInt::pow(BigInt(10), 25)};
    const json j = weight_distribution_json(d);
    CHECK(j[0] == "1");
    CHECK(j[2] == "10000000000000000000000000");
}
