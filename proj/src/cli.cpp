#include "uiverify/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <ostream>

#include <unistd.h>

#include "CLI11.hpp"
#include "uiverify/io.hpp"
#include "uiverify/ontology.hpp"
#include "uiverify/prototype.hpp"
#include "uiverify/report.hpp"
#include "uiverify/story.hpp"
#include "uiverify/verifier.hpp"

namespace uiverify {

namespace {

bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

struct CommonOpts {
    std::string format = "text";
    std::string output;
    bool no_color = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--format", opts.format, "Report format")
        ->check(CLI::IsMember({"text", "json", "junit"}));
    cmd->add_option("--output", opts.output, "Write the report to a file instead of stdout");
    cmd->add_flag("--no-color", opts.no_color, "Never emit ANSI colors");
}

/// Colors only reach a real terminal: never a file, never a captured stream.
bool want_color(const CommonOpts& opts, const std::ostream& out) {
    return !opts.no_color && opts.output.empty() && opts.format == "text" &&
           &out == &std::cout && isatty(STDOUT_FILENO) != 0;
}

int emit(const std::string& content, const CommonOpts& opts, std::ostream& out) {
    if (!opts.output.empty()) {
        write_file(opts.output, content);
    } else {
        out << content;
    }
    return 0;
}

std::string env_ontology() {
    const char* value = std::getenv("UIVERIFY_ONTOLOGY");
    return value ? std::string(value) : std::string();
}

[[noreturn]] void usage_error(const std::string& message) {
    throw CLI::ValidationError("invocation", message);
}

/// Splits mixed positionals into (ontology, rest). The explicit path wins;
/// UIVERIFY_ONTOLOGY covers the ontology only when the first file already
/// looks like one of the other inputs (.story / .proto.json).
std::string take_ontology(std::vector<std::string>& files, bool first_is_other_input) {
    std::string from_env = env_ontology();
    if (!from_env.empty() && (files.empty() || first_is_other_input)) return from_env;
    if (files.empty()) {
        usage_error("no ontology given and UIVERIFY_ONTOLOGY is not set");
    }
    std::string path = files.front();
    files.erase(files.begin());
    return path;
}

std::string describe(const std::string& path, const SyntaxError& e) {
    std::string where = path;
    if (e.pos().line > 0) {
        where += ":" + std::to_string(e.pos().line) + ":" + std::to_string(e.pos().column);
    }
    return where + ": " + e.what();
}

OntologyModel load_ontology_checked(const std::string& path) {
    try {
        return load_ontology(read_file(path));
    } catch (const SyntaxError& e) {
        throw Error(describe(path, e));
    } catch (const ConsistencyError& e) {
        throw Error(path + ": " + e.what());
    }
}

int do_check_ontology(const std::string& path, const CommonOpts& opts, std::ostream& out) {
    OntologyModel model;
    try {
        model = parse_ontology_document(read_file(path));
    } catch (const SyntaxError& e) {
        throw Error(describe(path, e));
    }
    ConsistencyReport report = check_consistency(model);
    ReportFormat format = *report_format_from_string(opts.format);
    emit(render_consistency(report, format, want_color(opts, out)), opts, out);
    return report.findings.empty() ? 0 : 1;
}

int do_lint(const std::string& ontology_path, const std::string& prototype_path,
            const std::vector<std::string>& story_paths, const CommonOpts& opts,
            std::ostream& out, std::ostream& err) {
    OntologyModel model = load_ontology_checked(ontology_path);

    std::optional<Prototype> prototype;
    if (!prototype_path.empty()) {
        std::vector<std::string> warnings;
        try {
            prototype = load_prototype_file(prototype_path, model, &warnings);
        } catch (const SyntaxError& e) {
            throw Error(describe(prototype_path, e));
        } catch (const Error& e) {
            throw Error(prototype_path + ": " + e.what());
        }
        for (const auto& warning : warnings) {
            err << "warning: " << prototype_path << ": " << warning << "\n";
        }
    }

    std::vector<StoryFindings> results;
    int total = 0;
    for (const auto& path : story_paths) {
        Story story;
        try {
            story = parse_story_file(path);
        } catch (const SyntaxError& e) {
            throw Error(describe(path, e));
        }
        StoryFindings entry;
        entry.story_title = story.title;
        entry.findings = prototype ? lint_against_prototype(story, model, *prototype)
                                   : lint(story, model);
        total += static_cast<int>(entry.findings.size());
        results.push_back(std::move(entry));
    }
    ReportFormat format = *report_format_from_string(opts.format);
    emit(render_lint(results, format, want_color(opts, out)), opts, out);
    return total == 0 ? 0 : 1;
}

int do_run(const std::string& ontology_path, const std::string& prototype_path,
           const std::vector<std::string>& story_paths, bool fail_fast, const CommonOpts& opts,
           std::ostream& out, std::ostream& err) {
    OntologyModel model = load_ontology_checked(ontology_path);

    std::vector<std::string> warnings;
    Prototype prototype;
    try {
        prototype = load_prototype_file(prototype_path, model, &warnings);
    } catch (const SyntaxError& e) {
        throw Error(describe(prototype_path, e));
    } catch (const Error& e) {
        throw Error(prototype_path + ": " + e.what());
    }
    for (const auto& warning : warnings) {
        err << "warning: " << prototype_path << ": " << warning << "\n";
    }

    std::vector<VerificationReport> reports;
    bool stop = false;
    bool all_passed = true;
    for (const auto& path : story_paths) {
        Story story;
        try {
            story = parse_story_file(path);
        } catch (const SyntaxError& e) {
            throw Error(describe(path, e));
        }
        VerificationReport report;
        if (stop) {
            // a fail-fast run leaves the remaining stories entirely untested
            report.story_title = story.title;
            for (const auto& scenario : story.scenarios) {
                ScenarioResult result;
                result.title = scenario.title;
                for (const auto& bs : bind_scenario(scenario, model)) {
                    result.steps.push_back(
                        StepResult{bs.step, bs.binding, StepStatus::Untested, std::nullopt});
                }
                report.scenarios.push_back(std::move(result));
            }
        } else {
            report = execute_story(story, model, prototype, fail_fast);
        }
        if (!report.all_passed()) {
            all_passed = false;
            if (fail_fast) stop = true;
        }
        reports.push_back(std::move(report));
    }
    ReportFormat format = *report_format_from_string(opts.format);
    emit(render_run(reports, format, want_color(opts, out)), opts, out);
    return all_passed ? 0 : 1;
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Checks UI behavior ontologies and verifies BDD user stories "
                 "against declarative UI prototypes.",
                 "uiverify"};
    app.require_subcommand(1);

    CommonOpts check_opts;
    std::vector<std::string> check_files;
    CLI::App* check = app.add_subcommand(
        "check-ontology", "Check a behavior ontology document for consistency");
    check->add_option("ontology", check_files, "Ontology document (JSON)")->expected(0, 1);
    add_common(check, check_opts);

    CommonOpts lint_opts;
    std::vector<std::string> lint_files;
    std::string lint_prototype;
    CLI::App* lint_cmd = app.add_subcommand(
        "lint", "Check stories against the ontology (and optionally a prototype) "
                "without executing them");
    lint_cmd->add_option("files", lint_files, "Ontology (unless set by UIVERIFY_ONTOLOGY) "
                                              "followed by story files")
        ->expected(-1);
    lint_cmd->add_option("--prototype", lint_prototype,
                         "Also resolve element references against this prototype");
    add_common(lint_cmd, lint_opts);

    CommonOpts run_opts;
    std::vector<std::string> run_files;
    bool fail_fast = false;
    CLI::App* run_cmd = app.add_subcommand(
        "run", "Execute story scenarios against a prototype");
    run_cmd->add_option("files", run_files, "Ontology (unless set by UIVERIFY_ONTOLOGY), "
                                            "prototype, then story files")
        ->expected(-1);
    run_cmd->add_flag("--fail-fast", fail_fast,
                      "Stop executing after the first failed scenario");
    add_common(run_cmd, run_opts);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));

        if (check->parsed()) {
            std::string path = take_ontology(check_files, false);
            if (!check_files.empty()) usage_error("check-ontology takes one ontology");
            return do_check_ontology(path, check_opts, out);
        }
        if (lint_cmd->parsed()) {
            std::string ontology = take_ontology(
                lint_files, !lint_files.empty() && ends_with(lint_files.front(), ".story"));
            if (lint_files.empty()) usage_error("lint needs at least one story file");
            return do_lint(ontology, lint_prototype, lint_files, lint_opts, out, err);
        }
        std::string ontology = take_ontology(
            run_files, !run_files.empty() && ends_with(run_files.front(), ".proto.json"));
        if (run_files.size() < 2) {
            usage_error("run needs a prototype and at least one story file");
        }
        std::string prototype = run_files.front();
        run_files.erase(run_files.begin());
        return do_run(ontology, prototype, run_files, fail_fast, run_opts, out, err);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace uiverify
