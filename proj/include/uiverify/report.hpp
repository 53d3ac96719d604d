#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uiverify/ontology.hpp"
#include "uiverify/verifier.hpp"

namespace uiverify {

enum class ReportFormat { Text, Json, Junit };

std::string_view to_string(ReportFormat format);
std::optional<ReportFormat> report_format_from_string(std::string_view name);

/// Findings of one linted story.
struct StoryFindings {
    std::string story_title;
    std::vector<Finding> findings;
};

/// Renders execution results. Text marks steps with V / X / ? (pass, fail,
/// untested) and ends with a step-count summary; JSON mirrors the full
/// report structure; JUnit maps story -> testsuite and scenario -> testcase,
/// with step verdicts in system-out. `color` wraps the text markers in ANSI
/// green/red and is ignored by the other formats.
std::string render_run(const std::vector<VerificationReport>& stories, ReportFormat format,
                       bool color = false);

/// Renders lint findings; in JUnit each finding becomes a failed testcase.
std::string render_lint(const std::vector<StoryFindings>& stories, ReportFormat format,
                        bool color = false);

/// Renders an ontology consistency report.
std::string render_consistency(const ConsistencyReport& report, ReportFormat format,
                               bool color = false);

} // namespace uiverify
