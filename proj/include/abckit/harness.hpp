#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "abckit/benchmarks.hpp"
#include "abckit/colony.hpp"

namespace abckit {

/// A results table misses one of the two variants being compared.
class MissingVariant : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A batched experiment: every (problem, variant) pair is run `runs` times
/// with seeds base_seed, base_seed + 1, ... so partial reruns reproduce.
struct ExperimentPlan {
    std::vector<std::string> problems;
    std::vector<VariantConfig> variants;
    int runs = 100;
    std::uint64_t base_seed = 1;
    std::uint64_t budget = 200000;
};

/// Aggregate over the repeated runs of one (problem, variant) pair:
/// mean final value, population standard deviation, mean absolute error to
/// the catalogued optimum, mean evaluations consumed, successful-run count.
struct RunStatistics {
    double mfv = 0.0;
    double sd = 0.0;
    double me = 0.0;
    double afe = 0.0;
    int sr = 0;
};

struct ResultRow {
    std::string problem;
    Variant variant = Variant::kAbc;
    RunStatistics stats;
    int runs = 0;
    std::uint64_t budget = 0;
    std::uint64_t base_seed = 0;
};

/// True iff the run's best objective is within the problem's acceptable
/// error of the catalogued optimum.
bool success_of(const RunResult& result, const ProblemSpec& problem);

/// Statistics over one batch of runs of a single problem.
RunStatistics aggregate(const std::vector<RunResult>& batch,
                        const ProblemSpec& problem);

/// Executes the plan. Individual runs may execute on `workers` threads
/// (<= 0 selects the available parallelism); the aggregation is a
/// sequential reduction ordered by (problem, variant, run index), so the
/// output never depends on the worker count. Throws UnknownProblem for
/// unresolvable names.
std::vector<ResultRow> execute(const ExperimentPlan& plan, int workers = 1);

/// One comparison cell: '+' when the challenger beats the baseline on the
/// problem, '-' otherwise.
struct ComparisonCell {
    std::string problem;
    char sign = '-';
};

struct ComparisonTable {
    Variant baseline = Variant::kAbc;
    Variant challenger = Variant::kIoAbc;
    std::vector<ComparisonCell> cells;
    int plus_count = 0;
};

/// Per-problem verdicts. "Better" is lexicographic: higher success count,
/// then lower mean evaluations, then lower mean error; full ties go to the
/// baseline. Throws MissingVariant when a problem lacks either variant.
ComparisonTable compare(const std::vector<ResultRow>& rows, Variant baseline,
                        Variant challenger);

// Serialization ----------------------------------------------------------
// Real-valued statistics are printed as scientific notation with six
// significant digits; output carries no timestamps, so identical inputs
// produce byte-identical text.

std::string to_csv(const std::vector<ResultRow>& rows);
std::string to_table(const std::vector<ResultRow>& rows);
std::string to_text(const ComparisonTable& table);

/// Parses a results CSV produced by to_csv. Throws std::runtime_error on
/// unreadable files or malformed rows.
std::vector<ResultRow> read_results_csv(const std::string& path);

}  // namespace abckit
