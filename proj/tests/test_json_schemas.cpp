#include <doctest.h>

#include <fstream>
#include <memory>
#include <string>
#include <univoque/baseclass.hpp>
#include <univoque/components.hpp>
#include <univoque/errors.hpp>
#include <univoque/expansion.hpp>
#include <univoque/json_io.hpp>
#include <univoque/oracle.hpp>
#include <univoque/sft.hpp>

using namespace univoque;

namespace {

Json load_schema(const std::string& name) {
    const std::string path = std::string(UNIVOQUE_SCHEMA_DIR) + "/" + name;
    std::ifstream in(path);
    REQUIRE_MESSAGE(in.good(), ("missing schema file " + path));
    return Json::parse(in);
}

bool type_matches(const Json& v, const std::string& t) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "boolean") return v.is_boolean();
    if (t == "integer") return v.is_number_integer() || v.is_number_unsigned();
    if (t == "number") return v.is_number();
    if (t == "null") return v.is_null();
    return false;
}

// Structural validator for the subset of JSON Schema the shipped files use:
// type, enum, required, properties, additionalProperties, items, oneOf, $ref.
bool conforms(const Json& v, const Json& schema) {
    if (schema.contains("$ref")) {
        return conforms(v, load_schema(schema["$ref"].get<std::string>()));
    }
    if (schema.contains("oneOf")) {
        int hits = 0;
        for (const Json& sub : schema["oneOf"]) hits += conforms(v, sub) ? 1 : 0;
        return hits == 1;
    }
    if (schema.contains("type") && !type_matches(v, schema["type"].get<std::string>())) {
        return false;
    }
    if (schema.contains("enum")) {
        bool found = false;
        for (const Json& e : schema["enum"]) found = found || e == v;
        if (!found) return false;
    }
    if (v.is_object()) {
        for (const Json& k : schema.value("required", Json::array())) {
            if (!v.contains(k.get<std::string>())) return false;
        }
        const Json props = schema.value("properties", Json::object());
        for (const auto& [key, sub] : props.items()) {
            if (v.contains(key) && !conforms(v.at(key), sub)) return false;
        }
        if (schema.value("additionalProperties", Json(true)) == Json(false)) {
            for (const auto& item : v.items()) {
                if (!props.contains(item.key())) return false;
            }
        }
    }
    if (v.is_array() && schema.contains("items")) {
        for (const Json& e : v) {
            if (!conforms(e, schema["items"])) return false;
        }
    }
    return true;
}

Json base_echo(const std::string& form, const std::string& text) {
    return Json{{"form", form}, {"text", text}};
}

BasePtr rational_base(const Rat& r) {
    return std::make_shared<const AlgebraicReal>(AlgebraicReal::from_rational(r));
}

}  // namespace

TEST_CASE("every shipped schema file parses") {
    for (const char* name :
         {"envelope.json", "base_echo.json", "expand.json", "base_class.json",
          "alpha_of_one.json", "point_class.json", "expansions_of_one.json", "base_spec.json",
          "endpoints.json", "stability.json", "component.json", "doubling.json",
          "algebraic.json", "smallest_univoque.json", "forbidden_set.json", "membership.json",
          "topology.json", "cardinality.json", "prefix_tree.json", "leaf_count.json",
          "constants.json"}) {
        CHECK(load_schema(name).is_object());
    }
}

TEST_CASE("envelope schema accepts both statuses and nothing else") {
    const Json env = load_schema("envelope.json");
    CHECK(conforms(Json{{"status", "ok"}, {"result", Json{{"member", true}}}}, env));
    CHECK(conforms(Json{{"status", "error"},
                        {"error", Json{{"code", errc::out_of_range}, {"message", "x"}}}},
                   env));
    CHECK_FALSE(conforms(Json{{"status", "ok"}}, env));
    CHECK_FALSE(conforms(Json{{"status", "bogus"}, {"result", 1}}, env));
    CHECK_FALSE(conforms(Json{{"status", "error"}, {"error", Json{{"code", "x"}}}}, env));
    CHECK_FALSE(conforms(Json::array(), env));
    CHECK_FALSE(conforms(
        Json{{"status", "ok"}, {"result", 1}, {"extra", 2}}, env));
}

TEST_CASE("expansion and classification payloads conform") {
    Json expand{{"base", base_echo("alpha", "(10)")},
                {"kind", "greedy"},
                {"digits", "110000"}};
    CHECK(conforms(expand, load_schema("expand.json")));
    expand["kind"] = "lazy";
    CHECK_FALSE(conforms(expand, load_schema("expand.json")));

    Json cls = json_of(classify_base(parse_epseq("(1100)")));
    CHECK(conforms(cls, load_schema("base_class.json")));
    cls["base"] = base_echo("alpha", "(1100)");
    CHECK(conforms(cls, load_schema("base_class.json")));
    cls["variant"] = "Bogus";
    CHECK_FALSE(conforms(cls, load_schema("base_class.json")));

    Json unc = json_of(alpha_of_one(rational_base(Rat(3, 2)), 24), 1);
    unc["base"] = base_echo("rational", "3/2");
    CHECK(conforms(unc, load_schema("alpha_of_one.json")));

    Json cert = json_of(alpha_of_one(rational_base(Rat(2)), 24), 1);
    CHECK(conforms(cert, load_schema("alpha_of_one.json")));

    const Json pt = json_of(classify_point(parse_epseq("(01)"), parse_epseq("(10)")));
    CHECK(conforms(pt, load_schema("point_class.json")));
    CHECK_FALSE(conforms(Json{{"in_U_q", true}}, load_schema("point_class.json")));
}

TEST_CASE("component and endpoint payloads conform") {
    const Json exp1 = json_of(expansions_of_one(classify_base(parse_epseq("(10)"))), 3);
    CHECK(conforms(exp1, load_schema("expansions_of_one.json")));

    CHECK(conforms(Json{{"right", to_string(right_endpoint(BaseSpec::one()))}},
                   load_schema("endpoints.json")));
    CHECK(conforms(Json{{"left", json_of(left_endpoint(parse_epseq("(1100)")))}},
                   load_schema("endpoints.json")));
    CHECK_FALSE(conforms(Json{{"left", Json{{"kind", "two"}, {"value", "2"}}}},
                         load_schema("endpoints.json")));

    Json stab = json_of(stability_interval(parse_epseq("(1100)")));
    stab["base"] = base_echo("alpha", "(1100)");
    CHECK(conforms(stab, load_schema("stability.json")));
    CHECK(conforms(json_of(stability_interval(parse_epseq("(110)"))),
                   load_schema("stability.json")));
    stab["surprise"] = 1;
    CHECK_FALSE(conforms(stab, load_schema("stability.json")));

    const Json comp = json_of(closure_component(parse_epseq("(1100)")));
    CHECK(conforms(comp, load_schema("component.json")));

    const Json dbl = json_of(doubling_construction(BaseSpec::integer(2), 2), 2);
    CHECK(conforms(dbl, load_schema("doubling.json")));

    const Json su = json_of(smallest_univoque(1, 8), 1);
    CHECK(conforms(su, load_schema("smallest_univoque.json")));

    const Json cst = json_of(constants(8));
    CHECK(conforms(cst, load_schema("constants.json")));

    const Json card = Json{{"cardinality", to_string(cardinality_of_Uq(rational_base(Rat(5, 2))))}};
    CHECK(conforms(card, load_schema("cardinality.json")));
    CHECK_FALSE(conforms(Json{{"cardinality", "Finite"}}, load_schema("cardinality.json")));
}

TEST_CASE("subshift and oracle payloads conform") {
    Json sft = json_of(forbidden_blocks(parse_epseq("(1100)")));
    sft["base"] = base_echo("alpha", "(1100)");
    CHECK(conforms(sft, load_schema("forbidden_set.json")));

    CHECK(conforms(Json{{"member", true}}, load_schema("membership.json")));
    CHECK_FALSE(conforms(Json{{"member", 3}}, load_schema("membership.json")));

    CHECK(conforms(Json{{"base_topology", to_string(base_topology(parse_epseq("(10)")))}},
                   load_schema("topology.json")));
    CHECK(conforms(
        Json{{"point_topology", to_string(point_topology(EpSeq::zero(1), parse_epseq("(10)")))}},
        load_schema("topology.json")));
    CHECK_FALSE(conforms(Json{{"base_topology", "Isolated"}}, load_schema("topology.json")));

    const BasePtr g =
        std::make_shared<const AlgebraicReal>(AlgebraicReal(PolyZ{-1, -1, 1}, Rat(1), Rat(2)));
    Json tree = json_of(enumerate_prefixes(FieldElem::from_rational(g, Rat(1)), 4));
    tree["base"] = base_echo("alpha", "(10)");
    CHECK(conforms(tree, load_schema("prefix_tree.json")));
    tree["leaves"] = Json::array({1, 2});
    CHECK_FALSE(conforms(tree, load_schema("prefix_tree.json")));

    CHECK(conforms(Json{{"count", 5}}, load_schema("leaf_count.json")));
    CHECK_FALSE(conforms(Json{{"count", "5"}}, load_schema("leaf_count.json")));
}
