#include "uiverify/report.hpp"

#include "json.hpp"

namespace uiverify {

namespace {

constexpr const char* kGreen = "\x1b[32m";
constexpr const char* kRed = "\x1b[31m";
constexpr const char* kReset = "\x1b[0m";

std::string step_mark(StepStatus status, bool color) {
    switch (status) {
    case StepStatus::Pass: return color ? std::string(kGreen) + "V" + kReset : "V";
    case StepStatus::Fail: return color ? std::string(kRed) + "X" + kReset : "X";
    case StepStatus::Untested: return "?";
    }
    return "?";
}

std::string plural(int n, const char* noun) {
    return std::to_string(n) + " " + noun + (n == 1 ? "" : "s");
}

std::string xml_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\'': out += "&apos;"; break;
        default: out.push_back(c);
        }
    }
    return out;
}

std::string attr(std::string_view name, std::string_view value) {
    return std::string(name) + "=\"" + xml_escape(value) + "\"";
}

struct ScenarioTally {
    int scenarios = 0;
    int failed = 0;
    int skipped = 0;
};

ScenarioTally tally(const VerificationReport& story) {
    ScenarioTally t;
    for (const auto& scenario : story.scenarios) {
        ++t.scenarios;
        StepStatus overall = scenario.overall();
        if (overall == StepStatus::Fail) ++t.failed;
        if (overall == StepStatus::Untested) ++t.skipped;
    }
    return t;
}

nlohmann::ordered_json finding_json(const Finding& finding) {
    nlohmann::ordered_json out;
    out["code"] = std::string(to_string(finding.code));
    out["scenario"] = finding.scenario_title;
    out["step_index"] = finding.step_index;
    out["line"] = finding.line;
    out["message"] = finding.message;
    return out;
}

std::string render_run_text(const std::vector<VerificationReport>& stories, bool color) {
    std::string out;
    ReportCounts totals;
    for (const auto& story : stories) {
        out += "Story: " + story.story_title + "\n";
        for (const auto& scenario : story.scenarios) {
            out += "  Scenario: " + scenario.title + "\n";
            for (const auto& step : scenario.steps) {
                out += "    " + step_mark(step.status, color) + " " + step.step.keyword + " " +
                       step.step.text + "\n";
                if (step.finding) {
                    out += "        " + std::string(to_string(step.finding->code)) + ": " +
                           step.finding->message + "\n";
                }
            }
        }
        ReportCounts counts = story.counts();
        totals.passed += counts.passed;
        totals.failed += counts.failed;
        totals.untested += counts.untested;
    }
    int steps = totals.passed + totals.failed + totals.untested;
    out += "\n" + plural(steps, "step") + ": " + std::to_string(totals.passed) + " passed, " +
           std::to_string(totals.failed) + " failed, " + std::to_string(totals.untested) +
           " untested\n";
    return out;
}

std::string render_run_json(const std::vector<VerificationReport>& stories) {
    nlohmann::ordered_json doc;
    doc["stories"] = nlohmann::ordered_json::array();
    ReportCounts totals;
    for (const auto& story : stories) {
        nlohmann::ordered_json story_json;
        story_json["title"] = story.story_title;
        story_json["scenarios"] = nlohmann::ordered_json::array();
        for (const auto& scenario : story.scenarios) {
            nlohmann::ordered_json scenario_json;
            scenario_json["title"] = scenario.title;
            scenario_json["overall"] = std::string(to_string(scenario.overall()));
            scenario_json["steps"] = nlohmann::ordered_json::array();
            for (const auto& step : scenario.steps) {
                nlohmann::ordered_json step_json;
                step_json["keyword"] = step.step.keyword;
                step_json["text"] = step.step.text;
                step_json["clause"] = std::string(to_string(step.step.clause));
                step_json["line"] = step.step.line;
                if (step.binding) {
                    step_json["behavior"] = step.binding->behavior_id;
                } else {
                    step_json["behavior"] = nullptr;
                }
                step_json["status"] = std::string(to_string(step.status));
                if (step.finding) {
                    nlohmann::ordered_json finding;
                    finding["code"] = std::string(to_string(step.finding->code));
                    finding["message"] = step.finding->message;
                    finding["line"] = step.finding->line;
                    step_json["finding"] = std::move(finding);
                }
                scenario_json["steps"].push_back(std::move(step_json));
            }
            story_json["scenarios"].push_back(std::move(scenario_json));
        }
        doc["stories"].push_back(std::move(story_json));
        ReportCounts counts = story.counts();
        totals.passed += counts.passed;
        totals.failed += counts.failed;
        totals.untested += counts.untested;
    }
    doc["totals"] = {{"passed", totals.passed},
                     {"failed", totals.failed},
                     {"untested", totals.untested}};
    return doc.dump(2) + "\n";
}

std::string render_run_junit(const std::vector<VerificationReport>& stories) {
    ScenarioTally all;
    for (const auto& story : stories) {
        ScenarioTally t = tally(story);
        all.scenarios += t.scenarios;
        all.failed += t.failed;
        all.skipped += t.skipped;
    }
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<testsuites " + attr("tests", std::to_string(all.scenarios)) + " " +
           attr("failures", std::to_string(all.failed)) + " " +
           attr("skipped", std::to_string(all.skipped)) + ">\n";
    for (const auto& story : stories) {
        ScenarioTally t = tally(story);
        out += "  <testsuite " + attr("name", story.story_title) + " " +
               attr("tests", std::to_string(t.scenarios)) + " " +
               attr("failures", std::to_string(t.failed)) + " " +
               attr("skipped", std::to_string(t.skipped)) + ">\n";
        for (const auto& scenario : story.scenarios) {
            out += "    <testcase " + attr("classname", story.story_title) + " " +
                   attr("name", scenario.title) + ">\n";
            if (scenario.overall() == StepStatus::Untested) {
                out += "      <skipped/>\n";
            }
            for (size_t i = 0; i < scenario.steps.size(); ++i) {
                const StepResult& step = scenario.steps[i];
                if (!step.finding) continue;
                out += "      <failure " +
                       attr("message", std::string(to_string(step.finding->code)) + ": " +
                                           step.finding->message) +
                       ">step " + std::to_string(i + 1) + " (line " +
                       std::to_string(step.step.line) + "): " +
                       xml_escape(step.step.keyword + " " + step.step.text) + "</failure>\n";
            }
            out += "      <system-out>\n";
            for (const auto& step : scenario.steps) {
                out += xml_escape(std::string(to_string(step.status)) + ": " +
                                  step.step.keyword + " " + step.step.text) +
                       "\n";
            }
            out += "      </system-out>\n";
            out += "    </testcase>\n";
        }
        out += "  </testsuite>\n";
    }
    out += "</testsuites>\n";
    return out;
}

std::string render_lint_text(const std::vector<StoryFindings>& stories, bool color) {
    std::string out;
    int total = 0;
    for (const auto& story : stories) {
        out += "Story: " + story.story_title + "\n";
        if (story.findings.empty()) {
            out += "  no findings\n";
            continue;
        }
        for (const auto& finding : story.findings) {
            std::string code(to_string(finding.code));
            if (color) code = std::string(kRed) + code + kReset;
            out += "  [" + code + "] scenario \"" + finding.scenario_title + "\", step " +
                   std::to_string(finding.step_index + 1) + " (line " +
                   std::to_string(finding.line) + "): " + finding.message + "\n";
            ++total;
        }
    }
    out += "\n" + plural(total, "finding") + "\n";
    return out;
}

std::string render_lint_json(const std::vector<StoryFindings>& stories) {
    nlohmann::ordered_json doc;
    doc["stories"] = nlohmann::ordered_json::array();
    int total = 0;
    for (const auto& story : stories) {
        nlohmann::ordered_json story_json;
        story_json["title"] = story.story_title;
        story_json["findings"] = nlohmann::ordered_json::array();
        for (const auto& finding : story.findings) {
            story_json["findings"].push_back(finding_json(finding));
            ++total;
        }
        doc["stories"].push_back(std::move(story_json));
    }
    doc["total_findings"] = total;
    return doc.dump(2) + "\n";
}

std::string render_lint_junit(const std::vector<StoryFindings>& stories) {
    int total = 0;
    for (const auto& story : stories) total += static_cast<int>(story.findings.size());
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<testsuites " + attr("tests", std::to_string(total)) + " " +
           attr("failures", std::to_string(total)) + ">\n";
    for (const auto& story : stories) {
        out += "  <testsuite " + attr("name", story.story_title) + " " +
               attr("tests", std::to_string(story.findings.size())) + " " +
               attr("failures", std::to_string(story.findings.size())) + ">\n";
        for (const auto& finding : story.findings) {
            out += "    <testcase " + attr("classname", story.story_title) + " " +
                   attr("name", finding.scenario_title + " (step " +
                                    std::to_string(finding.step_index + 1) + ")") +
                   ">\n";
            out += "      <failure " +
                   attr("message", std::string(to_string(finding.code)) + ": " +
                                       finding.message) +
                   ">line " + std::to_string(finding.line) + "</failure>\n";
            out += "    </testcase>\n";
        }
        out += "  </testsuite>\n";
    }
    out += "</testsuites>\n";
    return out;
}

std::string render_consistency_text(const ConsistencyReport& report, bool color) {
    if (report.findings.empty()) return "ontology is consistent\n";
    std::string out;
    for (const auto& finding : report.findings) {
        std::string code(to_string(finding.code));
        if (color) code = std::string(kRed) + code + kReset;
        out += "[" + code + "] " + finding.locus + ": " + finding.message + "\n";
    }
    out += "\n" + plural(static_cast<int>(report.findings.size()), "finding") + "\n";
    return out;
}

std::string render_consistency_json(const ConsistencyReport& report) {
    nlohmann::ordered_json doc;
    doc["consistent"] = report.is_consistent();
    doc["findings"] = nlohmann::ordered_json::array();
    for (const auto& finding : report.findings) {
        nlohmann::ordered_json entry;
        entry["code"] = std::string(to_string(finding.code));
        entry["severity"] = finding.severity == Severity::Error ? "error" : "warning";
        entry["locus"] = finding.locus;
        entry["message"] = finding.message;
        doc["findings"].push_back(std::move(entry));
    }
    return doc.dump(2) + "\n";
}

std::string render_consistency_junit(const ConsistencyReport& report) {
    bool failed = !report.findings.empty();
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<testsuites tests=\"1\" failures=\"" + std::string(failed ? "1" : "0") + "\">\n";
    out += "  <testsuite name=\"ontology-consistency\" tests=\"1\" failures=\"" +
           std::string(failed ? "1" : "0") + "\">\n";
    out += "    <testcase classname=\"ontology\" name=\"consistency\">";
    if (failed) {
        out += "\n      <failure " +
               attr("message",
                    plural(static_cast<int>(report.findings.size()), "finding")) + ">";
        for (const auto& finding : report.findings) {
            out += "\n[" + std::string(to_string(finding.code)) + "] " +
                   xml_escape(finding.locus) + ": " + xml_escape(finding.message);
        }
        out += "\n      </failure>\n    </testcase>\n";
    } else {
        out += "</testcase>\n";
    }
    out += "  </testsuite>\n</testsuites>\n";
    return out;
}

} // namespace

std::string_view to_string(ReportFormat format) {
    switch (format) {
    case ReportFormat::Text: return "text";
    case ReportFormat::Json: return "json";
    case ReportFormat::Junit: return "junit";
    }
    return "?";
}

std::optional<ReportFormat> report_format_from_string(std::string_view name) {
    if (name == "text") return ReportFormat::Text;
    if (name == "json") return ReportFormat::Json;
    if (name == "junit") return ReportFormat::Junit;
    return std::nullopt;
}

std::string render_run(const std::vector<VerificationReport>& stories, ReportFormat format,
                       bool color) {
    switch (format) {
    case ReportFormat::Text: return render_run_text(stories, color);
    case ReportFormat::Json: return render_run_json(stories);
    case ReportFormat::Junit: return render_run_junit(stories);
    }
    return {};
}

std::string render_lint(const std::vector<StoryFindings>& stories, ReportFormat format,
                        bool color) {
    switch (format) {
    case ReportFormat::Text: return render_lint_text(stories, color);
    case ReportFormat::Json: return render_lint_json(stories);
    case ReportFormat::Junit: return render_lint_junit(stories);
    }
    return {};
}

std::string render_consistency(const ConsistencyReport& report, ReportFormat format,
                               bool color) {
    switch (format) {
    case ReportFormat::Text: return render_consistency_text(report, color);
    case ReportFormat::Json: return render_consistency_json(report);
    case ReportFormat::Junit: return render_consistency_junit(report);
    }
    return {};
}

} // namespace uiverify
