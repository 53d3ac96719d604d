#include "uiverify/verifier.hpp"

#include <algorithm>

#include "text_util.hpp"

namespace uiverify {

namespace {

// goTo repositions the walk instead of resolving a widget, and
// willBeDisplayed asserts on displayed text instead of a named element.
constexpr std::string_view kGoTo = "goTo";
constexpr std::string_view kWillBeDisplayed = "willBeDisplayed";

std::string roles_list(const BehaviorDef& behavior) {
    std::string out;
    for (ClauseRole role : behavior.roles) {
        if (!out.empty()) out += ", ";
        out += to_string(role);
    }
    return out;
}

std::string allowed_list(const BehaviorDef& behavior) {
    std::vector<std::string> sorted = behavior.allowed_elements;
    std::sort(sorted.begin(), sorted.end());
    std::string out;
    for (const auto& cls : sorted) {
        if (!out.empty()) out += ", ";
        out += cls;
    }
    return out;
}

Finding make_finding(FindingCode code, const Scenario& scenario, size_t index,
                     std::string message) {
    return Finding{code, scenario.title, static_cast<int>(index),
                   scenario.steps[index].line, std::move(message)};
}

std::string clause_mismatch_message(const BehaviorDef& behavior, ClauseRole clause) {
    return "behavior \"" + behavior.id + "\" plays " + roles_list(behavior) +
           "; the step is a " + std::string(to_string(clause)) + " clause";
}

/// True when some widget of the state shows the value: its class satisfies
/// the behavior and either its name matches loosely or its "text" property
/// matches exactly.
bool state_displays(const OntologyModel& model, const State& state,
                    const std::string& behavior_id, const std::string& value) {
    for (const auto& widget : state.widgets) {
        if (!model.element_satisfies(widget.element_class, behavior_id)) continue;
        if (text::iequals(widget.name, value)) return true;
        auto it = widget.properties.find("text");
        if (it != widget.properties.end() && it->second == value) return true;
    }
    return false;
}

/// The scenario walk shared by execution and the static lint pass. Both
/// move the cursor the same way; they differ in what happens on a failed
/// check (stop vs. collect) and on a missing transition (fail vs. lose the
/// cursor silently).
struct Walk {
    const OntologyModel& model;
    const Prototype& prototype;
    const Scenario& scenario;
    const State* cursor;
    bool transition_fired = false;

    Walk(const OntologyModel& m, const Prototype& p, const Scenario& s)
        : model(m), prototype(p), scenario(s),
          cursor(p.find_state(p.initial_state)) {}

    /// Fires the scenario transition if this step is the one to trigger it.
    /// Returns false when the edge is missing (cursor becomes unknown).
    bool advance_for(const Step& step) {
        if (step.clause != ClauseRole::Action || transition_fired) return true;
        transition_fired = true;
        if (!cursor) return true; // already lost; nothing to follow
        const Transition* edge = prototype.find_transition(cursor->name, scenario.title);
        if (!edge) {
            cursor = nullptr;
            return false;
        }
        cursor = prototype.find_state(edge->target);
        return true;
    }
};

} // namespace

std::string_view to_string(StepStatus status) {
    switch (status) {
    case StepStatus::Pass: return "Pass";
    case StepStatus::Fail: return "Fail";
    case StepStatus::Untested: return "Untested";
    }
    return "?";
}

std::string_view to_string(FindingCode code) {
    switch (code) {
    case FindingCode::UnknownBehavior: return "UNKNOWN_BEHAVIOR";
    case FindingCode::ClauseMismatch: return "CLAUSE_MISMATCH";
    case FindingCode::StateNotFound: return "STATE_NOT_FOUND";
    case FindingCode::WidgetNotFound: return "WIDGET_NOT_FOUND";
    case FindingCode::IncompatibleElement: return "INCOMPATIBLE_ELEMENT";
    case FindingCode::TransitionNotFound: return "TRANSITION_NOT_FOUND";
    }
    return "?";
}

StepStatus ScenarioResult::overall() const {
    bool all_pass = true;
    for (const auto& step : steps) {
        if (step.status == StepStatus::Fail) return StepStatus::Fail;
        all_pass &= step.status == StepStatus::Pass;
    }
    return all_pass ? StepStatus::Pass : StepStatus::Untested;
}

ReportCounts VerificationReport::counts() const {
    ReportCounts out;
    for (const auto& scenario : scenarios) {
        for (const auto& step : scenario.steps) {
            switch (step.status) {
            case StepStatus::Pass: ++out.passed; break;
            case StepStatus::Fail: ++out.failed; break;
            case StepStatus::Untested: ++out.untested; break;
            }
        }
    }
    return out;
}

bool VerificationReport::all_passed() const {
    ReportCounts c = counts();
    return c.failed == 0 && c.untested == 0;
}

std::vector<Finding> lint(const Story& story, const OntologyModel& model) {
    std::vector<Finding> findings;
    for (const auto& scenario : story.scenarios) {
        auto bound = bind_scenario(scenario, model);
        for (size_t i = 0; i < bound.size(); ++i) {
            const BoundStep& bs = bound[i];
            if (!bs.binding) {
                findings.push_back(make_finding(FindingCode::UnknownBehavior, scenario, i,
                                                "step text matches no behavior template"));
                continue;
            }
            const BehaviorDef& behavior = *model.find_behavior(bs.binding->behavior_id);
            if (!behavior.roles.count(bs.step.clause)) {
                findings.push_back(make_finding(FindingCode::ClauseMismatch, scenario, i,
                                                clause_mismatch_message(behavior,
                                                                        bs.step.clause)));
            }
        }
    }
    return findings;
}

std::vector<Finding> lint_against_prototype(const Story& story, const OntologyModel& model,
                                            const Prototype& prototype) {
    std::vector<Finding> findings;
    for (const auto& scenario : story.scenarios) {
        auto bound = bind_scenario(scenario, model);
        Walk walk(model, prototype, scenario);
        for (size_t i = 0; i < bound.size(); ++i) {
            const BoundStep& bs = bound[i];
            walk.advance_for(bs.step); // a missing edge is not a lint finding

            if (!bs.binding) {
                findings.push_back(make_finding(FindingCode::UnknownBehavior, scenario, i,
                                                "step text matches no behavior template"));
                continue;
            }
            const BehaviorDef& behavior = *model.find_behavior(bs.binding->behavior_id);
            if (!behavior.roles.count(bs.step.clause)) {
                findings.push_back(make_finding(FindingCode::ClauseMismatch, scenario, i,
                                                clause_mismatch_message(behavior,
                                                                        bs.step.clause)));
            }

            if (behavior.id == kGoTo && bs.binding->element_arg) {
                const State* target = prototype.find_state(*bs.binding->element_arg);
                if (!target) {
                    findings.push_back(make_finding(
                        FindingCode::StateNotFound, scenario, i,
                        "no state named \"" + *bs.binding->element_arg + "\""));
                }
                walk.cursor = target; // unknown screen suspends resolution below
                continue;
            }
            if (!walk.cursor) continue; // cannot resolve anything without a screen
            if (behavior.id == kWillBeDisplayed) {
                const std::string& value =
                    bs.binding->value_args.empty() ? std::string() : bs.binding->value_args[0];
                if (!state_displays(model, *walk.cursor, behavior.id, value)) {
                    findings.push_back(make_finding(FindingCode::WidgetNotFound, scenario, i,
                                                    "nothing in state \"" + walk.cursor->name +
                                                        "\" displays \"" + value + "\""));
                }
                continue;
            }
            if (!bs.binding->element_arg) continue; // value-only step
            const Widget* widget = find_widget(*walk.cursor, *bs.binding->element_arg);
            if (!widget) {
                findings.push_back(make_finding(FindingCode::WidgetNotFound, scenario, i,
                                                "no widget named \"" + *bs.binding->element_arg +
                                                    "\" in state \"" + walk.cursor->name +
                                                    "\""));
                continue;
            }
            if (!model.element_satisfies(widget->element_class, behavior.id)) {
                findings.push_back(make_finding(
                    FindingCode::IncompatibleElement, scenario, i,
                    "widget \"" + widget->name + "\" is a " + widget->element_class +
                        "; behavior \"" + behavior.id + "\" allows " + allowed_list(behavior)));
            }
        }
    }
    return findings;
}

ScenarioResult execute_scenario(const Scenario& scenario, const OntologyModel& model,
                                const Prototype& prototype) {
    ScenarioResult result;
    result.title = scenario.title;
    auto bound = bind_scenario(scenario, model);
    Walk walk(model, prototype, scenario);
    bool failed = false;

    for (size_t i = 0; i < bound.size(); ++i) {
        const BoundStep& bs = bound[i];
        StepResult sr;
        sr.step = bs.step;
        sr.binding = bs.binding;
        if (failed) {
            sr.status = StepStatus::Untested;
            result.steps.push_back(std::move(sr));
            continue;
        }

        auto fail_with = [&](FindingCode code, std::string message) {
            sr.status = StepStatus::Fail;
            sr.finding = make_finding(code, scenario, i, std::move(message));
            failed = true;
        };

        if (!bs.binding) {
            fail_with(FindingCode::UnknownBehavior, "step text matches no behavior template");
            result.steps.push_back(std::move(sr));
            continue;
        }
        const BehaviorDef& behavior = *model.find_behavior(bs.binding->behavior_id);

        const State* source = walk.cursor;
        if (!walk.advance_for(bs.step)) {
            fail_with(FindingCode::TransitionNotFound,
                      "no transition from state \"" + (source ? source->name : "?") +
                          "\" for scenario \"" + scenario.title + "\"");
            result.steps.push_back(std::move(sr));
            continue;
        }

        if (behavior.id == kGoTo && bs.binding->element_arg) {
            const State* target = prototype.find_state(*bs.binding->element_arg);
            if (!target) {
                fail_with(FindingCode::StateNotFound,
                          "no state named \"" + *bs.binding->element_arg + "\"");
            } else if (!behavior.roles.count(bs.step.clause)) {
                fail_with(FindingCode::ClauseMismatch,
                          clause_mismatch_message(behavior, bs.step.clause));
            } else {
                walk.cursor = target;
                sr.status = StepStatus::Pass;
            }
            result.steps.push_back(std::move(sr));
            continue;
        }

        if (behavior.id == kWillBeDisplayed) {
            const std::string& value =
                bs.binding->value_args.empty() ? std::string() : bs.binding->value_args[0];
            if (!state_displays(model, *walk.cursor, behavior.id, value)) {
                fail_with(FindingCode::WidgetNotFound, "nothing in state \"" +
                                                           walk.cursor->name + "\" displays \"" +
                                                           value + "\"");
            } else if (!behavior.roles.count(bs.step.clause)) {
                fail_with(FindingCode::ClauseMismatch,
                          clause_mismatch_message(behavior, bs.step.clause));
            } else {
                sr.status = StepStatus::Pass;
            }
            result.steps.push_back(std::move(sr));
            continue;
        }

        const Widget* widget = nullptr;
        if (bs.binding->element_arg) {
            widget = find_widget(*walk.cursor, *bs.binding->element_arg);
            if (!widget) {
                fail_with(FindingCode::WidgetNotFound,
                          "no widget named \"" + *bs.binding->element_arg + "\" in state \"" +
                              walk.cursor->name + "\"");
                result.steps.push_back(std::move(sr));
                continue;
            }
            if (!model.element_satisfies(widget->element_class, behavior.id)) {
                fail_with(FindingCode::IncompatibleElement,
                          "widget \"" + widget->name + "\" is a " + widget->element_class +
                              "; behavior \"" + behavior.id + "\" allows " +
                              allowed_list(behavior));
                result.steps.push_back(std::move(sr));
                continue;
            }
        }
        if (!behavior.roles.count(bs.step.clause)) {
            fail_with(FindingCode::ClauseMismatch,
                      clause_mismatch_message(behavior, bs.step.clause));
        } else {
            sr.status = StepStatus::Pass;
        }
        result.steps.push_back(std::move(sr));
    }
    return result;
}

VerificationReport execute_story(const Story& story, const OntologyModel& model,
                                 const Prototype& prototype, bool fail_fast) {
    VerificationReport report;
    report.story_title = story.title;
    bool stop = false;
    for (const auto& scenario : story.scenarios) {
        if (stop) {
            ScenarioResult skipped;
            skipped.title = scenario.title;
            for (const auto& bs : bind_scenario(scenario, model)) {
                StepResult sr;
                sr.step = bs.step;
                sr.binding = bs.binding;
                sr.status = StepStatus::Untested;
                skipped.steps.push_back(std::move(sr));
            }
            report.scenarios.push_back(std::move(skipped));
            continue;
        }
        ScenarioResult result = execute_scenario(scenario, model, prototype);
        if (fail_fast && result.overall() == StepStatus::Fail) stop = true;
        report.scenarios.push_back(std::move(result));
    }
    return report;
}

} // namespace uiverify
