#include "uiverify/story.hpp"

#include <map>
#include <utility>

#include "text_util.hpp"
#include "uiverify/io.hpp"

namespace uiverify {

namespace {

bool starts_with(std::string_view s, std::string_view prefix) {
    return s.size() >= prefix.size() && s.substr(0, prefix.size()) == prefix;
}

[[noreturn]] void fail(int line, const std::string& message) {
    throw SyntaxError(message, SourcePos{line, 1});
}

std::string after_prefix(std::string_view s, size_t n) {
    return std::string(text::trim(s.substr(n)));
}

} // namespace

Story parse_story(std::string_view input) {
    Story story;
    enum class Expect { Title, NarrativeHeader, Role, Feature, Benefit, Scenarios };
    Expect expect = Expect::Title;
    Scenario* scenario = nullptr;

    int line_no = 0;
    size_t pos = 0;
    int last_line = 1;
    while (pos <= input.size()) {
        size_t eol = input.find('\n', pos);
        std::string_view raw = input.substr(pos, eol == std::string_view::npos
                                                     ? std::string_view::npos
                                                     : eol - pos);
        pos = eol == std::string_view::npos ? input.size() + 1 : eol + 1;
        ++line_no;

        std::string_view line = text::trim(raw);
        if (line.empty() || line.front() == '#') continue;
        last_line = line_no;

        switch (expect) {
        case Expect::Title:
            if (!starts_with(line, "User Story:")) {
                fail(line_no, "expected \"User Story: <title>\"");
            }
            story.title = after_prefix(line, 11);
            if (story.title.empty()) fail(line_no, "story title must not be empty");
            expect = Expect::NarrativeHeader;
            continue;
        case Expect::NarrativeHeader:
            if (line != "Narrative:") fail(line_no, "expected \"Narrative:\"");
            expect = Expect::Role;
            continue;
        case Expect::Role:
            if (starts_with(line, "As an ")) {
                story.narrative.role = after_prefix(line, 6);
            } else if (starts_with(line, "As a ")) {
                story.narrative.role = after_prefix(line, 5);
            } else {
                fail(line_no, "expected \"As a <role>\"");
            }
            if (story.narrative.role.empty()) fail(line_no, "narrative role must not be empty");
            expect = Expect::Feature;
            continue;
        case Expect::Feature:
            if (!starts_with(line, "I want ")) fail(line_no, "expected \"I want <feature>\"");
            story.narrative.feature = after_prefix(line, 7);
            if (story.narrative.feature.empty()) {
                fail(line_no, "narrative feature must not be empty");
            }
            expect = Expect::Benefit;
            continue;
        case Expect::Benefit:
            if (!starts_with(line, "So that ")) fail(line_no, "expected \"So that <benefit>\"");
            story.narrative.benefit = after_prefix(line, 8);
            if (story.narrative.benefit.empty()) {
                fail(line_no, "narrative benefit must not be empty");
            }
            expect = Expect::Scenarios;
            continue;
        case Expect::Scenarios:
            break;
        }

        if (starts_with(line, "Scenario:")) {
            if (scenario && scenario->steps.empty()) {
                fail(scenario->line, "scenario \"" + scenario->title + "\" has no steps");
            }
            Scenario next;
            next.title = after_prefix(line, 9);
            next.line = line_no;
            if (next.title.empty()) fail(line_no, "scenario title must not be empty");
            story.scenarios.push_back(std::move(next));
            scenario = &story.scenarios.back();
            continue;
        }

        size_t space = line.find(' ');
        std::string keyword(line.substr(0, space));
        std::optional<ClauseRole> clause = clause_for_keyword(keyword);
        bool is_and = keyword == "And";
        if (!clause && !is_and) {
            fail(line_no, "expected \"Scenario:\" or a Given/When/Then/And step");
        }
        if (!scenario) fail(line_no, "step before the first \"Scenario:\"");
        if (is_and) {
            if (scenario->steps.empty()) {
                fail(line_no, "\"And\" needs a preceding Given/When/Then step");
            }
            clause = scenario->steps.back().clause;
        }

        Step step;
        step.clause = *clause;
        step.keyword = keyword;
        step.text = space == std::string_view::npos
                        ? std::string()
                        : std::string(text::trim(line.substr(space + 1)));
        step.line = line_no;
        if (step.text.empty()) fail(line_no, "step has no text after its keyword");
        scenario->steps.push_back(std::move(step));
    }

    if (expect != Expect::Scenarios) fail(last_line, "story ended before it was complete");
    if (story.scenarios.empty()) fail(last_line, "story has no scenarios");
    if (scenario && scenario->steps.empty()) {
        fail(scenario->line, "scenario \"" + scenario->title + "\" has no steps");
    }
    return story;
}

Story parse_story_file(const std::string& path) { return parse_story(read_file(path)); }

std::string serialize_story(const Story& story) {
    std::string out;
    out += "User Story: " + story.title + "\n";
    out += "Narrative:\n";
    char first = story.narrative.role.empty() ? 'x' : story.narrative.role[0];
    bool vowel = first == 'a' || first == 'e' || first == 'i' || first == 'o' || first == 'u' ||
                 first == 'A' || first == 'E' || first == 'I' || first == 'O' || first == 'U';
    out += std::string(vowel ? "As an " : "As a ") + story.narrative.role + "\n";
    out += "I want " + story.narrative.feature + "\n";
    out += "So that " + story.narrative.benefit + "\n";
    for (const auto& scenario : story.scenarios) {
        out += "\nScenario: " + scenario.title + "\n";
        for (const auto& step : scenario.steps) {
            out += step.keyword + " " + step.text + "\n";
        }
    }
    return out;
}

std::vector<BoundStep> bind_scenario(const Scenario& scenario, const OntologyModel& model) {
    // The folded literal pieces identify the template: a consistent ontology
    // has no two templates with the same signature.
    std::map<std::string, std::pair<const BehaviorDef*, const PhraseTemplate*>> index;
    for (const auto& behavior : model.behaviors()) {
        for (const auto& t : behavior.templates) {
            index.emplace(text::literal_signature(t.literals), std::make_pair(&behavior, &t));
        }
    }

    std::vector<BoundStep> bound;
    bound.reserve(scenario.steps.size());
    for (const auto& step : scenario.steps) {
        BoundStep bs{step, std::nullopt};
        auto split = text::split_quoted(step.text);
        if (split && !split->args.empty()) {
            auto it = index.find(text::literal_signature(split->literals));
            if (it != index.end()) {
                const PhraseTemplate& t = *it->second.second;
                Binding binding;
                binding.behavior_id = it->second.first->id;
                int element_index = t.element_slot_index();
                for (size_t i = 0; i < split->args.size(); ++i) {
                    if (static_cast<int>(i) == element_index) {
                        binding.element_arg = split->args[i];
                    } else {
                        binding.value_args.push_back(split->args[i]);
                    }
                }
                bs.binding = std::move(binding);
            }
        }
        bound.push_back(std::move(bs));
    }
    return bound;
}

std::vector<std::vector<BoundStep>> bind_steps(const Story& story, const OntologyModel& model) {
    std::vector<std::vector<BoundStep>> out;
    out.reserve(story.scenarios.size());
    for (const auto& scenario : story.scenarios) {
        out.push_back(bind_scenario(scenario, model));
    }
    return out;
}

} // namespace uiverify
