#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "qjudge/embedded_scenarios.hpp"
#include "qjudge/errors.hpp"
#include "qjudge/fit.hpp"
#include "qjudge/report.hpp"
#include "qjudge/scenario.hpp"
#include "qjudge/version.hpp"

namespace {

// Exit codes: 0 success, 2 parse or validation failure (including
// command-line misuse), 3 engine failure.
constexpr int kExitParse = 2;
constexpr int kExitEngine = 3;

int exit_code_for(qjudge::errc code) {
    switch (code) {
        case qjudge::errc::syntax_error:
        case qjudge::errc::validation_error:
            return kExitParse;
        default:
            return kExitEngine;
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw qjudge::ValidationError("cannot open file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& bytes, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << bytes;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw qjudge::ValidationError("cannot open output file: " + out_path);
    }
    out << bytes;
}

qjudge::ReportFormat parse_format(const std::string& format) {
    return format == "table" ? qjudge::ReportFormat::table : qjudge::ReportFormat::json;
}

void run_scenario_text(const std::string& text, const std::string& format,
                       const std::string& out_path) {
    const qjudge::Scenario s = qjudge::parse_scenario(text);
    const qjudge::Report r = qjudge::run_scenario(s);
    write_output(qjudge::emit_report(r, parse_format(format)), out_path);
}

void print_error(const qjudge::Error& e) {
    if (const auto* syn = dynamic_cast<const qjudge::SyntaxError*>(&e); syn && syn->line > 0) {
        std::cerr << "qjudge: parse error at line " << syn->line << ", column " << syn->column
                  << ": " << syn->what() << "\n";
    } else {
        std::cerr << "qjudge: error: " << e.what() << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Subspace-event probability engine"};
    app.set_version_flag("--version", qjudge::engine_string());
    app.require_subcommand(1);

    std::string file;
    std::string format = "json";
    std::string out_path;

    CLI::App* run = app.add_subcommand("run", "Evaluate a scenario file and emit its report");
    run->add_option("file", file, "Scenario JSON file")->required();
    run->add_option("--format", format, "Report format")
        ->check(CLI::IsMember({"json", "table"}));
    run->add_option("--out", out_path, "Write the report here instead of stdout");

    std::string targets_file;
    double grid_step = 1.0;
    double refine_tol = 1e-4;
    CLI::App* fit = app.add_subcommand("fit", "Recover 2D geometry from observed probabilities");
    fit->add_option("targets", targets_file, "Targets JSON file")->required();
    fit->add_option("--grid-step", grid_step, "Grid step in degrees")
        ->check(CLI::PositiveNumber);
    fit->add_option("--tol", refine_tol, "Refinement tolerance in degrees")
        ->check(CLI::PositiveNumber);

    std::string demo_name;
    CLI::App* demo = app.add_subcommand("demo", "Run a bundled scenario");
    demo->add_option("which", demo_name, "Bundled scenario: linda or korea")
        ->required()
        ->check(CLI::IsMember({"linda", "korea"}));
    demo->add_option("--format", format, "Report format")
        ->check(CLI::IsMember({"json", "table"}));
    demo->add_option("--out", out_path, "Write the report here instead of stdout");

    std::string validate_file;
    CLI::App* validate = app.add_subcommand("validate", "Parse and validate a scenario file");
    validate->add_option("file", validate_file, "Scenario JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints the message or help/version text
        return code == 0 ? 0 : kExitParse;
    }

    try {
        if (*run) {
            run_scenario_text(read_file(file), format, out_path);
        } else if (*fit) {
            const qjudge::Targets2D targets = qjudge::parse_targets(read_file(targets_file));
            write_output(qjudge::emit_fit_report(qjudge::fit_2d(targets, grid_step, refine_tol)),
                         "");
        } else if (*demo) {
            const char* text = demo_name == "linda" ? qjudge::embedded::kLindaScenario
                                                    : qjudge::embedded::kKoreaChinaScenario;
            run_scenario_text(text, format, out_path);
        } else if (*validate) {
            const qjudge::Scenario s = qjudge::parse_scenario(read_file(validate_file));
            std::cout << "valid: " << s.name << "\n";
        }
    } catch (const qjudge::Error& e) {
        print_error(e);
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "qjudge: error: " << e.what() << "\n";
        return kExitEngine;
    }
    return 0;
}
