#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uiverify/errors.hpp"
#include "uiverify/ontology.hpp"

namespace uiverify {

enum class Platform { Web, Mobile, Desktop };

std::string_view to_string(Platform platform);
std::optional<Platform> platform_from_string(std::string_view name);

/// A concrete interaction element on a screen. `element_class` names a
/// non-abstract ontology class; `properties` carries data-property values,
/// canonicalized to strings.
struct Widget {
    std::string name;
    std::string element_class;
    std::map<std::string, std::string> properties;

    bool operator==(const Widget&) const = default;
};

struct State {
    std::string name;
    std::vector<Widget> widgets;

    bool operator==(const State&) const = default;
};

/// An edge of the screen-flow state machine. Edges are labeled with the
/// scenario they belong to; at most one edge per (source, scenario) pair.
struct Transition {
    std::string scenario_title;
    std::string source;
    std::string target;

    bool operator==(const Transition&) const = default;
};

/// A declarative UI prototype: named screens with their widgets, plus the
/// transitions scenarios drive between them. State and widget names are
/// unique and looked up case-insensitively; scenario titles match exactly.
struct Prototype {
    std::string name;
    std::vector<Platform> platforms;
    std::string initial_state;
    std::vector<State> states;
    std::vector<Transition> transitions;

    bool operator==(const Prototype&) const = default;

    const State* find_state(std::string_view name) const;
    const Transition* find_transition(std::string_view source_state,
                                      std::string_view scenario_title) const;
};

/// Case-insensitive widget lookup; returns nullptr when absent.
const Widget* find_widget(const State& state, std::string_view name);

/// Names of states no chain of transitions reaches from the initial state.
std::vector<std::string> unreachable_states(const Prototype& prototype);

/// Parses and validates a prototype document against the ontology. Shape
/// problems throw SyntaxError; semantic ones (unknown or abstract widget
/// class, duplicate names, dangling transition endpoints, property misuse)
/// throw ValidationError or UnknownClassError. Unreachable states are
/// reported through `warnings` when given, never thrown.
Prototype load_prototype(std::string_view json_text, const OntologyModel& model,
                         std::vector<std::string>* warnings = nullptr);
Prototype load_prototype_file(const std::string& path, const OntologyModel& model,
                              std::vector<std::string>* warnings = nullptr);

/// Canonical document text; load(serialize(p)) == p.
std::string serialize_prototype(const Prototype& prototype);

} // namespace uiverify
