#include "abckit/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

namespace abckit {

namespace {

constexpr double kOptimumCheckTolerance = 1e-3;

/// Writes text to the configured sink; returns false on I/O failure.
bool write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return static_cast<bool>(std::cout);
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out << text;
    return static_cast<bool>(out);
}

int do_run(const CliConfig& config) {
    std::vector<std::string> names;
    for (const ProblemSpec& p : registry()) {
        if (glob_match(config.problem_filter, p.name)) names.push_back(p.name);
    }
    if (names.empty()) {
        std::cerr << "error: no problems match '" << config.problem_filter << "'\n";
        return 1;
    }

    VariantConfig variant;
    variant.variant = variant_from_string(config.variant);
    variant.colony_size = config.colony_size;
    variant.limit = config.limit;

    ExperimentPlan plan;
    plan.problems = std::move(names);
    plan.variants = {variant};
    plan.runs = config.runs;
    plan.base_seed = config.seed;
    plan.budget = config.budget;

    const std::vector<ResultRow> rows = execute(plan, config.workers);
    const std::string text =
        config.format == "table" ? to_table(rows) : to_csv(rows);
    if (!write_output(config.output_path, text)) {
        std::cerr << "error: cannot write output to '" << config.output_path << "'\n";
        return 1;
    }
    return 0;
}

int do_list_problems(const CliConfig& config) {
    const std::string text =
        config.format == "table" ? catalogue_table() : catalogue_csv();
    if (!write_output(config.output_path, text)) {
        std::cerr << "error: cannot write output to '" << config.output_path << "'\n";
        return 1;
    }
    return 0;
}

int do_verify_registry(const CliConfig& config) {
    std::ostringstream out;
    bool all_ok = true;
    int checked = 0;
    for (const ProblemSpec& p : registry()) {
        if (!p.verified_optimum) continue;
        ++checked;
        const double got = p.objective(p.best_known);
        const double delta = std::abs(got - p.optimum_value);
        const bool ok = delta <= kOptimumCheckTolerance;
        all_ok = all_ok && ok;
        char line[160];
        std::snprintf(line, sizeof line, "%-20s f(x*) = %-14.8g catalogued %-12.6g |diff| = %-10.3g %s\n",
                      p.name.c_str(), got, p.optimum_value, delta, ok ? "ok" : "FAIL");
        out << line;
    }
    out << checked << " catalogued optima checked\n";
    if (!write_output(config.output_path, out.str())) {
        std::cerr << "error: cannot write output\n";
        return 1;
    }
    return all_ok ? 0 : 1;
}

Variant single_variant_of(const std::vector<ResultRow>& rows,
                          const std::string& path) {
    if (rows.empty()) throw std::runtime_error("no result rows in " + path);
    const Variant v = rows.front().variant;
    for (const ResultRow& row : rows) {
        if (row.variant != v) {
            throw std::runtime_error("results file " + path +
                                     " mixes variants; expected exactly one");
        }
    }
    return v;
}

int do_compare(const CliConfig& config) {
    const auto baseline_rows = read_results_csv(config.baseline_file);
    const auto challenger_rows = read_results_csv(config.challenger_file);
    const Variant baseline = single_variant_of(baseline_rows, config.baseline_file);
    const Variant challenger =
        single_variant_of(challenger_rows, config.challenger_file);
    if (baseline == challenger) {
        throw std::runtime_error("compare: both files hold variant '" +
                                 to_string(baseline) + "'");
    }
    std::vector<ResultRow> merged = baseline_rows;
    merged.insert(merged.end(), challenger_rows.begin(), challenger_rows.end());
    const ComparisonTable table = compare(merged, baseline, challenger);
    if (!write_output(config.output_path, to_text(table))) {
        std::cerr << "error: cannot write output\n";
        return 1;
    }
    return 0;
}

}  // namespace

bool glob_match(const std::string& pattern, const std::string& text) {
    std::size_t p = 0, t = 0;
    std::size_t star = std::string::npos, mark = 0;
    while (t < text.size()) {
        if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
            ++p;
            ++t;
        } else if (p < pattern.size() && pattern[p] == '*') {
            star = p++;
            mark = t;
        } else if (star != std::string::npos) {
            p = star + 1;
            t = ++mark;
        } else {
            return false;
        }
    }
    while (p < pattern.size() && pattern[p] == '*') ++p;
    return p == pattern.size();
}

CliConfig parse_args(const std::vector<std::string>& args) {
    CliConfig config;

    CLI::App app{"Bee-colony optimization benchmark runner"};
    app.require_subcommand(1);

    CLI::App* cmd_run =
        app.add_subcommand("run", "Run a batched experiment and report statistics");
    cmd_run->add_option("--problem", config.problem_filter,
                        "Problem name glob (see list-problems)");
    cmd_run->add_option("--variant", config.variant, "Algorithm variant")
        ->check(CLI::IsMember({"abc", "meabc", "ioabc"}));
    cmd_run->add_option("--runs", config.runs, "Repetitions per problem")
        ->check(CLI::PositiveNumber);
    cmd_run->add_option("--budget", config.budget, "Evaluation cap per run")
        ->check(CLI::PositiveNumber);
    cmd_run->add_option("--seed", config.seed, "Base seed (run r uses seed + r)");
    cmd_run->add_option("--colony-size", config.colony_size,
                        "Colony size (even; half are food sources)")
        ->check(CLI::PositiveNumber);
    cmd_run->add_option("--limit", config.limit,
                        "Non-improvement limit before a source is abandoned")
        ->check(CLI::PositiveNumber);
    cmd_run->add_option("--workers", config.workers,
                        "Worker threads (0 = available parallelism)");
    cmd_run->add_option("--output", config.output_path, "Output file (default stdout)");
    cmd_run->add_option("--format", config.format, "Output format")
        ->check(CLI::IsMember({"csv", "table"}));

    CLI::App* cmd_list =
        app.add_subcommand("list-problems", "Print the problem catalogue");
    cmd_list->add_option("--output", config.output_path, "Output file");
    cmd_list->add_option("--format", config.format, "Output format")
        ->check(CLI::IsMember({"csv", "table"}));

    CLI::App* cmd_verify = app.add_subcommand(
        "verify-registry", "Check catalogued optima against their objectives");
    cmd_verify->add_option("--output", config.output_path, "Output file");

    CLI::App* cmd_compare = app.add_subcommand(
        "compare", "Per-problem verdicts between two result files");
    cmd_compare->add_option("baseline", config.baseline_file, "Baseline results CSV")
        ->required();
    cmd_compare
        ->add_option("challenger", config.challenger_file, "Challenger results CSV")
        ->required();
    cmd_compare->add_option("--output", config.output_path, "Output file");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw UsageError(app.help(), 0);
    } catch (const CLI::CallForAllHelp&) {
        throw UsageError(app.help("", CLI::AppFormatMode::All), 0);
    } catch (const CLI::ParseError& err) {
        std::string message = err.what();
        message += "\ncommands: run, list-problems, verify-registry, compare";
        message += "\nsee --help for usage";
        throw UsageError(message, 2);
    }

    if (cmd_run->parsed()) {
        config.command = CliConfig::Command::kRun;
        if (config.colony_size % 2 != 0) {
            throw UsageError("--colony-size must be even", 2);
        }
    } else if (cmd_list->parsed()) {
        config.command = CliConfig::Command::kListProblems;
    } else if (cmd_verify->parsed()) {
        config.command = CliConfig::Command::kVerifyRegistry;
    } else {
        config.command = CliConfig::Command::kCompare;
    }
    return config;
}

int run_cli(const CliConfig& config) {
    try {
        switch (config.command) {
            case CliConfig::Command::kRun: return do_run(config);
            case CliConfig::Command::kListProblems: return do_list_problems(config);
            case CliConfig::Command::kVerifyRegistry: return do_verify_registry(config);
            case CliConfig::Command::kCompare: return do_compare(config);
        }
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 1;
    }
    return 1;
}

int cli_main(int argc, const char* const* argv) {
    std::vector<std::string> args;
    args.reserve(argc > 0 ? argc - 1 : 0);
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    try {
        const CliConfig config = parse_args(args);
        return run_cli(config);
    } catch (const UsageError& err) {
        if (err.exit_code() == 0) {
            std::cout << err.what() << '\n';
        } else {
            std::cerr << err.what() << '\n';
        }
        return err.exit_code();
    }
}

}  // namespace abckit
