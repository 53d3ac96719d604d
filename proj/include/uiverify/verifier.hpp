#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uiverify/ontology.hpp"
#include "uiverify/prototype.hpp"
#include "uiverify/story.hpp"

namespace uiverify {

/// Verdict for one step. After the first failing step of a scenario the
/// remaining steps stay Untested: their preconditions no longer hold.
enum class StepStatus { Pass, Fail, Untested };

std::string_view to_string(StepStatus status);

enum class FindingCode {
    UnknownBehavior,     // step text matches no phrase template
    ClauseMismatch,      // behavior cannot play the step's clause role
    StateNotFound,       // goTo names a screen the prototype lacks
    WidgetNotFound,      // element argument names no widget in the current state
    IncompatibleElement, // widget's class is outside the behavior's range
    TransitionNotFound,  // no edge for this scenario leaves the current state
};

std::string_view to_string(FindingCode code);

struct Finding {
    FindingCode code;
    std::string scenario_title;
    int step_index = 0; // 0-based within the scenario
    int line = 0;
    std::string message;
};

struct StepResult {
    Step step;
    std::optional<Binding> binding;
    StepStatus status = StepStatus::Untested;
    std::optional<Finding> finding; // present iff status == Fail
};

struct ScenarioResult {
    std::string title;
    std::vector<StepResult> steps;

    /// Fail if any step failed, Pass if every step passed, Untested otherwise.
    StepStatus overall() const;
};

struct ReportCounts {
    int passed = 0;
    int failed = 0;
    int untested = 0;
};

struct VerificationReport {
    std::string story_title;
    std::vector<ScenarioResult> scenarios;

    ReportCounts counts() const;
    bool all_passed() const;
};

/// Ontology-only checks: every step must match a template and the bound
/// behavior must be allowed to play the step's clause role. Collects all
/// findings; never throws on story content.
std::vector<Finding> lint(const Story& story, const OntologyModel& model);

/// lint plus a static walk of each scenario over the prototype, resolving
/// the same element references execution would resolve but collecting every
/// finding instead of stopping at the first. Missing transitions are an
/// execution-time concern and are never reported here; they only suspend
/// element resolution until the walk regains a known screen. A story that
/// comes back clean cannot fail execution with anything but
/// TransitionNotFound.
std::vector<Finding> lint_against_prototype(const Story& story, const OntologyModel& model,
                                            const Prototype& prototype);

/// Runs one scenario as a state-machine walk from the prototype's initial
/// state. goTo moves the cursor to the named screen; the scenario's
/// transition fires once, immediately before its first Then step; every
/// other step resolves its element argument in the current screen and
/// checks it against the behavior's allowed classes.
ScenarioResult execute_scenario(const Scenario& scenario, const OntologyModel& model,
                                const Prototype& prototype);

/// Runs every scenario. With fail_fast, scenarios after the first failing
/// one are left entirely Untested.
VerificationReport execute_story(const Story& story, const OntologyModel& model,
                                 const Prototype& prototype, bool fail_fast = false);

} // namespace uiverify
