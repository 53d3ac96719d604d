#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <string>
#include <vector>

#include "uiverify/io.hpp"
#include "uiverify/ontology.hpp"
#include "uiverify/prototype.hpp"

#include "support/oracles.hpp"
#include "support/paths.hpp"

using namespace uiverify;

namespace {

OntologyModel default_model() {
    return load_ontology_file(data_path("default.onto.json"));
}

Prototype flight_prototype(const OntologyModel& model,
                           std::vector<std::string>* warnings = nullptr) {
    return load_prototype_file(data_path("flight_search.proto.json"), model, warnings);
}

// A skeleton document with holes for quick invalid-input variants.
std::string proto_doc(const std::string& states, const std::string& transitions,
                      const std::string& initial = "Home") {
    return R"({"name":"P","platforms":["Web"],"initial_state":")" + initial +
           R"(","states":[)" + states + R"(],"transitions":[)" + transitions + "]}";
}

} // namespace

TEST_CASE("the flight-search prototype loads with both screens") {
    OntologyModel model = default_model();
    std::vector<std::string> warnings;
    Prototype proto = flight_prototype(model, &warnings);

    CHECK(proto.name == "Flight Tickets Search");
    CHECK(proto.platforms == std::vector<Platform>{Platform::Web});
    CHECK(proto.initial_state == "Find Flights");
    REQUIRE(proto.states.size() == 2);
    CHECK(proto.states[0].widgets.size() == 6);
    REQUIRE(proto.states[1].widgets.size() == 1);
    CHECK(proto.states[1].widgets[0].element_class == "Text");
    CHECK(proto.states[1].widgets[0].properties.at("text") == "Choose Flights");
    REQUIRE(proto.transitions.size() == 1);
    CHECK(proto.transitions[0].scenario_title == "One-Way Tickets Search");
    CHECK(warnings.empty());
}

TEST_CASE("state lookup ignores case") {
    OntologyModel model = default_model();
    Prototype proto = flight_prototype(model);
    REQUIRE(proto.find_state("find flights") != nullptr);
    CHECK(proto.find_state("find flights")->name == "Find Flights");
    CHECK(proto.find_state("FIND FLIGHTS") != nullptr);
    CHECK(proto.find_state("Find Flight") == nullptr);
    CHECK(proto.find_state("") == nullptr);
}

TEST_CASE("widget lookup ignores case and agrees with a linear-scan oracle") {
    OntologyModel model = default_model();
    Prototype proto = flight_prototype(model);
    const State& home = proto.states[0];

    const Widget* search = find_widget(home, "SEARCH");
    REQUIRE(search != nullptr);
    CHECK(search->element_class == "Button");
    CHECK(find_widget(home, "no such widget") == nullptr);
    CHECK(find_widget(home, "") == nullptr);

    for (const auto& state : proto.states) {
        for (const auto& widget : state.widgets) {
            CHECK(find_widget(state, widget.name) == oracles::widget_by_scan(state, widget.name));
        }
        CHECK(find_widget(state, "absent") == oracles::widget_by_scan(state, "absent"));
    }
}

TEST_CASE("transition lookup: source folds case, scenario title does not") {
    OntologyModel model = default_model();
    Prototype proto = flight_prototype(model);

    const Transition* t = proto.find_transition("find flights", "One-Way Tickets Search");
    REQUIRE(t != nullptr);
    CHECK(t->target == "Choose Flights");
    CHECK(proto.find_transition("Find Flights", "one-way tickets search") == nullptr);
    CHECK(proto.find_transition("Choose Flights", "One-Way Tickets Search") == nullptr);
}

TEST_CASE("unreachable states are reported as warnings, not errors") {
    OntologyModel model = default_model();
    std::vector<std::string> warnings;
    Prototype proto = load_prototype(
        proto_doc(R"({"name":"Home","widgets":[]},{"name":"Island","widgets":[]})", ""),
        model, &warnings);

    CHECK(unreachable_states(proto) == std::vector<std::string>{"Island"});
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("Island") != std::string::npos);

    // agreement with the fixpoint oracle across both fixtures
    for (const Prototype& p : {proto, flight_prototype(model)}) {
        auto reached = oracles::reachable_by_fixpoint(p);
        std::set<std::string> unreachable;
        for (const auto& state : p.states) {
            std::string folded;
            for (char c : state.name) {
                folded.push_back((c >= 'A' && c <= 'Z') ? char(c - 'A' + 'a') : c);
            }
            if (!reached.count(folded)) unreachable.insert(state.name);
        }
        auto got = unreachable_states(p);
        CHECK(std::set<std::string>(got.begin(), got.end()) == unreachable);
    }
}

TEST_CASE("widget classes must exist and be concrete") {
    OntologyModel model = default_model();
    CHECK_THROWS_AS(
        load_prototype(
            proto_doc(R"({"name":"Home","widgets":[{"name":"W","class":"Gizmo"}]})", ""),
            model),
        UnknownClassError);
    CHECK_THROWS_AS(
        load_prototype(
            proto_doc(R"({"name":"Home","widgets":[{"name":"W","class":"Input_Control"}]})",
                      ""),
            model),
        ValidationError);
}

TEST_CASE("names must be unique up to case") {
    OntologyModel model = default_model();
    CHECK_THROWS_AS(
        load_prototype(
            proto_doc(R"({"name":"Home","widgets":[]},{"name":"HOME","widgets":[]})", ""),
            model),
        ValidationError);
    CHECK_THROWS_AS(
        load_prototype(proto_doc(R"({"name":"Home","widgets":[
                           {"name":"Go","class":"Button"},{"name":"GO","class":"Link"}]})",
                                 ""),
                       model),
        ValidationError);
}

TEST_CASE("initial state and transition endpoints must resolve") {
    OntologyModel model = default_model();
    CHECK_THROWS_AS(
        load_prototype(proto_doc(R"({"name":"Home","widgets":[]})", "", "Lobby"), model),
        ValidationError);
    CHECK_THROWS_AS(
        load_prototype(
            proto_doc(R"({"name":"Home","widgets":[]})",
                      R"({"scenario":"S","source":"Home","target":"Away"})"),
            model),
        ValidationError);
    CHECK_THROWS_AS(
        load_prototype(
            proto_doc(R"({"name":"Home","widgets":[]})",
                      R"({"scenario":"S","source":"Away","target":"Home"})"),
            model),
        ValidationError);
}

TEST_CASE("one transition per source state and scenario") {
    OntologyModel model = default_model();
    CHECK_THROWS_AS(
        load_prototype(
            proto_doc(R"({"name":"A","widgets":[]},{"name":"B","widgets":[]})",
                      R"({"scenario":"S","source":"A","target":"B"},
                         {"scenario":"S","source":"A","target":"A"})",
                      "A"),
            model),
        ValidationError);
}

TEST_CASE("widget properties are checked against the ontology") {
    OntologyModel model = default_model();
    // unknown property id
    CHECK_THROWS_AS(
        load_prototype(proto_doc(R"({"name":"Home","widgets":[
                           {"name":"W","class":"Button","properties":{"tooltip":"hey"}}]})",
                                 ""),
                       model),
        ValidationError);
    // property that does not apply to the widget's class
    CHECK_THROWS_AS(
        load_prototype(proto_doc(R"({"name":"Home","widgets":[
                           {"name":"W","class":"Button","properties":{"symbol":"0a"}}]})",
                                 ""),
                       model),
        ValidationError);
    // value that violates the property's datatype
    CHECK_THROWS_AS(
        load_prototype(proto_doc(R"({"name":"Home","widgets":[
                           {"name":"W","class":"Icon","properties":{"symbol":"xyz"}}]})",
                                 ""),
                       model),
        ValidationError);
    // and a well-typed one loads
    Prototype ok = load_prototype(proto_doc(R"({"name":"Home","widgets":[
                        {"name":"W","class":"Icon","properties":{"symbol":"0aFF"}}]})",
                                            ""),
                                  model);
    CHECK(ok.states[0].widgets[0].properties.at("symbol") == "0aFF");
}

TEST_CASE("scalar property values are canonicalized to strings") {
    OntologyModel model = default_model();
    Prototype proto = load_prototype(proto_doc(R"({"name":"Home","widgets":[
            {"name":"N","class":"Dropdown_List","properties":{"value":2}}]})",
                                               ""),
                                     model);
    CHECK(proto.states[0].widgets[0].properties.at("value") == "2");

    CHECK_THROWS_AS(load_prototype(proto_doc(R"({"name":"Home","widgets":[
            {"name":"N","class":"Dropdown_List","properties":{"value":["x"]}}]})",
                                             ""),
                                   model),
                    SyntaxError);
}

TEST_CASE("shape problems are syntax errors") {
    OntologyModel model = default_model();
    CHECK_THROWS_AS(load_prototype("{]", model), SyntaxError);
    CHECK_THROWS_AS(load_prototype("[]", model), SyntaxError);
    CHECK_THROWS_AS(load_prototype(R"({"name":"P"})", model), SyntaxError);
    CHECK_THROWS_AS(
        load_prototype(R"({"name":"P","platforms":["Telex"],"initial_state":"H",
                           "states":[{"name":"H","widgets":[]}],"transitions":[]})",
                       model),
        SyntaxError);
    CHECK_THROWS_AS(
        load_prototype(R"({"name":"P","platforms":["Web"],"initial_state":"H",
                           "states":[{"name":"H","widgets":[{"name":"W"}]}],"transitions":[]})",
                       model),
        SyntaxError);
}

TEST_CASE("prototypes round-trip through serialization") {
    OntologyModel model = default_model();
    for (const char* file : {"flight_search.proto.json"}) {
        Prototype first = load_prototype(read_file(data_path(file)), model);
        Prototype second = load_prototype(serialize_prototype(first), model);
        CHECK(first == second);
    }
    Prototype mutated =
        load_prototype(read_file(fixture_path("search_as_text_field.proto.json")), model);
    CHECK(load_prototype(serialize_prototype(mutated), model) == mutated);
}

TEST_CASE("platform names round-trip") {
    for (Platform p : {Platform::Web, Platform::Mobile, Platform::Desktop}) {
        CHECK(platform_from_string(to_string(p)) == p);
    }
    CHECK(!platform_from_string("Telex").has_value());
}
