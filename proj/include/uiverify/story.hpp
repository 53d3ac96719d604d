#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uiverify/errors.hpp"
#include "uiverify/ontology.hpp"

namespace uiverify {

/// One Given/When/Then/And line. `keyword` is the surface word as written;
/// `clause` is the resolved role (an And step inherits it from the step
/// above). Line numbers carry positions into findings and reports and are
/// ignored by equality.
struct Step {
    ClauseRole clause = ClauseRole::Event;
    std::string keyword;
    std::string text; // full step text without the keyword

    int line = 0;

    bool operator==(const Step& other) const {
        return clause == other.clause && keyword == other.keyword && text == other.text;
    }
};

struct Scenario {
    std::string title;
    std::vector<Step> steps;

    int line = 0;

    bool operator==(const Scenario& other) const {
        return title == other.title && steps == other.steps;
    }
};

/// The "As a ... / I want ... / So that ..." block under the story title.
struct Narrative {
    std::string role;
    std::string feature;
    std::string benefit;

    bool operator==(const Narrative&) const = default;
};

struct Story {
    std::string title;
    Narrative narrative;
    std::vector<Scenario> scenarios;

    bool operator==(const Story&) const = default;
};

/// Parses one User Story document. Throws SyntaxError (with the offending
/// line) on anything that departs from the template:
///
///   User Story: <title>
///   Narrative:
///   As a <role>
///   I want <feature>
///   So that <benefit>
///   Scenario: <title>
///   Given/When/Then/And <step text>
///   ...
///
/// Blank lines and lines starting with '#' are skipped. A scenario must
/// contain at least one step, and a story at least one scenario; the first
/// step of a scenario cannot be And.
Story parse_story(std::string_view text);
Story parse_story_file(const std::string& path);

/// Canonical story text; parse_story(serialize_story(s)) == s.
std::string serialize_story(const Story& story);

/// How a step text matched a behavior template: the behavior, the quoted
/// argument bound to the element slot (if the template has one) and the
/// remaining quoted arguments in order.
struct Binding {
    std::string behavior_id;
    std::optional<std::string> element_arg;
    std::vector<std::string> value_args;

    bool operator==(const Binding&) const = default;
};

struct BoundStep {
    Step step;
    std::optional<Binding> binding; // nullopt: no template matched
};

/// Binds every step of a scenario against the ontology's phrase templates.
/// Literal prose is matched case-insensitively with whitespace folded;
/// quoted arguments transfer byte-for-byte. Never throws on unmatched steps.
std::vector<BoundStep> bind_scenario(const Scenario& scenario, const OntologyModel& model);

/// bind_scenario over the whole story; one vector per scenario, in order.
std::vector<std::vector<BoundStep>> bind_steps(const Story& story, const OntologyModel& model);

} // namespace uiverify
