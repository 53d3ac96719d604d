#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "support/paths.hpp"
#include "uiverify/verifier.hpp"

using namespace uiverify;

namespace {

const OntologyModel& default_model() {
    static OntologyModel model = load_ontology_file(data_path("default.onto.json"));
    return model;
}

bool element_level(FindingCode code) {
    return code != FindingCode::TransitionNotFound;
}

std::string fold(const std::string& s) {
    std::string out;
    for (char c : s) out.push_back((c >= 'A' && c <= 'Z') ? char(c - 'A' + 'a') : c);
    return out;
}

} // namespace

TEST_CASE("swapping a behavior for an equivalent one never changes a verdict") {
    const OntologyModel& model = default_model();
    int swapped_total = 0;
    for (uint32_t seed = 1; seed <= 300; ++seed) {
        CAPTURE(seed);
        gen::Rng rng(seed);
        Prototype proto = gen::random_prototype(rng, model);
        Story story = gen::random_story(rng, model, proto, static_cast<int>(seed));
        VerificationReport before = execute_story(story, model, proto);

        Story swapped = story;
        int moved = gen::swap_equivalents(swapped, model, rng);
        swapped_total += moved;
        if (moved == 0) continue;

        VerificationReport after = execute_story(swapped, model, proto);
        REQUIRE(after.scenarios.size() == before.scenarios.size());
        for (size_t s = 0; s < before.scenarios.size(); ++s) {
            const ScenarioResult& lhs = before.scenarios[s];
            const ScenarioResult& rhs = after.scenarios[s];
            REQUIRE(rhs.steps.size() == lhs.steps.size());
            CHECK(rhs.overall() == lhs.overall());
            for (size_t i = 0; i < lhs.steps.size(); ++i) {
                CAPTURE(i);
                CHECK(rhs.steps[i].status == lhs.steps[i].status);
                CHECK(rhs.steps[i].finding.has_value() == lhs.steps[i].finding.has_value());
                if (lhs.steps[i].finding && rhs.steps[i].finding) {
                    CHECK(rhs.steps[i].finding->code == lhs.steps[i].finding->code);
                }
            }
        }
    }
    // the corpus must genuinely exercise the equivalence groups
    CHECK(swapped_total >= 150);
}

TEST_CASE("a clean prototype lint rules out element-level execution failures") {
    const OntologyModel& model = default_model();
    int clean_walks = 0;
    int element_failures = 0;
    for (uint32_t seed = 1; seed <= 400; ++seed) {
        CAPTURE(seed);
        gen::Rng rng(seed * 31 + 7);
        Prototype proto = gen::random_prototype(rng, model);
        Story story = gen::random_story(rng, model, proto, static_cast<int>(seed));

        std::vector<Finding> walk = lint_against_prototype(story, model, proto);
        VerificationReport report = execute_story(story, model, proto);

        for (const ScenarioResult& scenario : report.scenarios) {
            for (const StepResult& step : scenario.steps) {
                if (step.status != StepStatus::Fail) continue;
                REQUIRE(step.finding.has_value());
                const Finding& failure = *step.finding;
                if (!element_level(failure.code)) continue;
                ++element_failures;
                // the static walk must have predicted this exact failure
                bool predicted = std::any_of(walk.begin(), walk.end(), [&](const Finding& f) {
                    return f.code == failure.code && f.scenario_title == failure.scenario_title &&
                           f.step_index == failure.step_index;
                });
                CAPTURE(failure.scenario_title);
                CAPTURE(failure.step_index);
                CAPTURE(failure.message);
                CHECK(predicted);
            }
        }

        if (walk.empty()) {
            ++clean_walks;
            for (const ScenarioResult& scenario : report.scenarios) {
                for (const StepResult& step : scenario.steps) {
                    bool element_fail = step.status == StepStatus::Fail &&
                                        element_level(step.finding->code);
                    CHECK_FALSE(element_fail);
                }
            }
        }
    }
    // both sides of the property must actually occur in the corpus
    CHECK(element_failures >= 100);
    CHECK(clean_walks >= 5);
}

TEST_CASE("generated ontologies survive serialize/parse") {
    for (uint32_t seed = 1; seed <= 150; ++seed) {
        CAPTURE(seed);
        gen::Rng rng(seed * 131);
        OntologyModel model = gen::random_ontology(rng);
        OntologyModel again = parse_ontology_document(serialize_ontology(model));
        CHECK(again == model);
    }
}

TEST_CASE("generated stories survive serialize/parse") {
    for (uint32_t seed = 1; seed <= 150; ++seed) {
        CAPTURE(seed);
        gen::Rng rng(seed * 733);
        Story story = gen::random_free_story(rng);
        std::string text = serialize_story(story);
        Story again = parse_story(text);
        CHECK(again == story);
        CHECK(serialize_story(again) == text);
    }
}

TEST_CASE("generated prototypes survive serialize/load") {
    const OntologyModel& model = default_model();
    for (uint32_t seed = 1; seed <= 150; ++seed) {
        CAPTURE(seed);
        gen::Rng rng(seed * 977);
        Prototype proto = gen::random_prototype(rng, model);
        // sprinkle in some transitions so edges round-trip too
        int edges = rng.range(0, 5);
        for (int i = 0; i < edges; ++i) {
            Transition edge;
            edge.scenario_title = "Scenario " + std::to_string(rng.range(1, 4));
            edge.source = rng.pick(proto.states).name;
            edge.target = rng.pick(proto.states).name;
            if (!proto.find_transition(edge.source, edge.scenario_title)) {
                proto.transitions.push_back(std::move(edge));
            }
        }
        Prototype again = load_prototype(serialize_prototype(proto), model);
        CHECK(again == proto);
    }
}

TEST_CASE("subclass closure matches the fixpoint oracle on generated taxonomies") {
    for (uint32_t seed = 1; seed <= 120; ++seed) {
        CAPTURE(seed);
        gen::Rng rng(seed * 389);
        OntologyModel model = gen::random_ontology(rng);
        for (const ElementClass& cls : model.classes()) {
            CAPTURE(cls.id);
            CHECK(model.subclass_closure(cls.id) == oracles::closure_by_fixpoint(model, cls.id));
        }
    }
}

TEST_CASE("unreachable states complement the reachability fixpoint") {
    const OntologyModel& model = default_model();
    for (uint32_t seed = 1; seed <= 150; ++seed) {
        CAPTURE(seed);
        gen::Rng rng(seed * 543 + 11);
        Prototype proto = gen::random_prototype(rng, model);
        int edges = rng.range(0, 6);
        for (int i = 0; i < edges; ++i) {
            Transition edge;
            edge.scenario_title = "Scenario " + std::to_string(rng.range(1, 3));
            edge.source = rng.pick(proto.states).name;
            edge.target = rng.pick(proto.states).name;
            if (!proto.find_transition(edge.source, edge.scenario_title)) {
                proto.transitions.push_back(std::move(edge));
            }
        }

        std::set<std::string> reached = oracles::reachable_by_fixpoint(proto);
        std::set<std::string> expected;
        for (const State& state : proto.states) {
            if (!reached.count(fold(state.name))) expected.insert(state.name);
        }
        std::vector<std::string> reported = unreachable_states(proto);
        CHECK(std::set<std::string>(reported.begin(), reported.end()) == expected);
    }
}
