#include "abckit/harness.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

namespace abckit {

namespace {

std::string sci(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.5E", v);
    return buf;
}

struct RunTask {
    const ProblemSpec* problem;
    const VariantConfig* config;
    std::uint64_t seed;
};

void run_tasks(const std::vector<RunTask>& tasks, std::vector<RunResult>& out,
               std::uint64_t budget, int workers) {
    auto run_one = [&](std::size_t t) {
        const RunTask& task = tasks[t];
        out[t] = run(*task.problem, *task.config, task.seed,
                     StopRule::for_problem(*task.problem, budget));
    };
    if (workers <= 1 || tasks.size() <= 1) {
        for (std::size_t t = 0; t < tasks.size(); ++t) run_one(t);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t t = next.fetch_add(1);
            if (t >= tasks.size()) return;
            try {
                run_one(t);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    const int count = std::min<std::size_t>(workers, tasks.size());
    pool.reserve(count);
    for (int w = 0; w < count; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

bool challenger_better(const RunStatistics& baseline,
                       const RunStatistics& challenger) {
    if (challenger.sr != baseline.sr) return challenger.sr > baseline.sr;
    if (challenger.afe != baseline.afe) return challenger.afe < baseline.afe;
    return challenger.me < baseline.me;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) fields.push_back(field);
    return fields;
}

}  // namespace

bool success_of(const RunResult& result, const ProblemSpec& problem) {
    return std::abs(result.best_objective - problem.optimum_value) <=
           problem.acceptable_error;
}

RunStatistics aggregate(const std::vector<RunResult>& batch,
                        const ProblemSpec& problem) {
    if (batch.empty()) throw std::invalid_argument("aggregate: empty batch");
    const double n = static_cast<double>(batch.size());
    RunStatistics stats;
    for (const RunResult& r : batch) {
        stats.mfv += r.best_objective;
        stats.me += std::abs(r.best_objective - problem.optimum_value);
        stats.afe += static_cast<double>(r.evaluations);
        if (success_of(r, problem)) ++stats.sr;
    }
    stats.mfv /= n;
    stats.me /= n;
    stats.afe /= n;
    double sq = 0.0;
    for (const RunResult& r : batch) {
        const double d = r.best_objective - stats.mfv;
        sq += d * d;
    }
    stats.sd = std::sqrt(sq / n);  // population deviation
    return stats;
}

std::vector<ResultRow> execute(const ExperimentPlan& plan, int workers) {
    if (plan.runs < 1) throw std::invalid_argument("plan: runs must be >= 1");
    if (plan.problems.empty()) throw std::invalid_argument("plan: no problems");
    if (plan.variants.empty()) throw std::invalid_argument("plan: no variants");
    for (const VariantConfig& config : plan.variants) config.validate();

    std::vector<const ProblemSpec*> problems;
    problems.reserve(plan.problems.size());
    for (const std::string& name : plan.problems) {
        problems.push_back(&find_problem(name));
    }

    std::vector<RunTask> tasks;
    tasks.reserve(problems.size() * plan.variants.size() * plan.runs);
    for (const ProblemSpec* problem : problems) {
        for (const VariantConfig& config : plan.variants) {
            for (int r = 0; r < plan.runs; ++r) {
                tasks.push_back(
                    {problem, &config, plan.base_seed + static_cast<std::uint64_t>(r)});
            }
        }
    }

    int count = workers;
    if (count <= 0) {
        count = static_cast<int>(std::thread::hardware_concurrency());
        if (count < 1) count = 1;
    }
    std::vector<RunResult> results(tasks.size());
    run_tasks(tasks, results, plan.budget, count);

    // Ordered reduction over (problem, variant, run index).
    std::vector<ResultRow> rows;
    rows.reserve(problems.size() * plan.variants.size());
    std::size_t offset = 0;
    for (const ProblemSpec* problem : problems) {
        for (const VariantConfig& config : plan.variants) {
            std::vector<RunResult> batch(results.begin() + offset,
                                         results.begin() + offset + plan.runs);
            offset += plan.runs;
            ResultRow row;
            row.problem = problem->name;
            row.variant = config.variant;
            row.stats = aggregate(batch, *problem);
            row.runs = plan.runs;
            row.budget = plan.budget;
            row.base_seed = plan.base_seed;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

ComparisonTable compare(const std::vector<ResultRow>& rows, Variant baseline,
                        Variant challenger) {
    ComparisonTable table;
    table.baseline = baseline;
    table.challenger = challenger;

    std::vector<std::string> problems;
    for (const ResultRow& row : rows) {
        bool seen = false;
        for (const std::string& p : problems) {
            if (p == row.problem) { seen = true; break; }
        }
        if (!seen) problems.push_back(row.problem);
    }

    auto find_row = [&rows](const std::string& problem,
                            Variant variant) -> const ResultRow* {
        for (const ResultRow& row : rows) {
            if (row.problem == problem && row.variant == variant) return &row;
        }
        return nullptr;
    };

    for (const std::string& problem : problems) {
        const ResultRow* base = find_row(problem, baseline);
        const ResultRow* chal = find_row(problem, challenger);
        if (base == nullptr || chal == nullptr) {
            throw MissingVariant("compare: problem '" + problem +
                                 "' lacks variant " +
                                 to_string(base == nullptr ? baseline : challenger));
        }
        ComparisonCell cell;
        cell.problem = problem;
        cell.sign = challenger_better(base->stats, chal->stats) ? '+' : '-';
        if (cell.sign == '+') ++table.plus_count;
        table.cells.push_back(std::move(cell));
    }
    return table;
}

std::string to_csv(const std::vector<ResultRow>& rows) {
    std::ostringstream out;
    out << "name,variant,mfv,sd,me,afe,sr,runs,budget,base_seed\n";
    for (const ResultRow& row : rows) {
        out << row.problem << ',' << to_string(row.variant) << ','
            << sci(row.stats.mfv) << ',' << sci(row.stats.sd) << ','
            << sci(row.stats.me) << ',' << sci(row.stats.afe) << ','
            << row.stats.sr << ',' << row.runs << ',' << row.budget << ','
            << row.base_seed << '\n';
    }
    return out.str();
}

std::string to_table(const std::vector<ResultRow>& rows) {
    std::ostringstream out;
    char line[224];
    std::snprintf(line, sizeof line, "%-20s %-7s %-12s %-12s %-12s %-12s %5s %5s\n",
                  "problem", "variant", "MFV", "SD", "ME", "AFE", "SR", "runs");
    out << line;
    for (const ResultRow& row : rows) {
        std::snprintf(line, sizeof line,
                      "%-20s %-7s %-12s %-12s %-12s %-12s %5d %5d\n",
                      row.problem.c_str(), to_string(row.variant).c_str(),
                      sci(row.stats.mfv).c_str(), sci(row.stats.sd).c_str(),
                      sci(row.stats.me).c_str(), sci(row.stats.afe).c_str(),
                      row.stats.sr, row.runs);
        out << line;
    }
    return out.str();
}

std::string to_text(const ComparisonTable& table) {
    std::ostringstream out;
    const std::string header =
        to_string(table.challenger) + " vs. " + to_string(table.baseline);
    char line[96];
    std::snprintf(line, sizeof line, "%-20s %s\n", "problem", header.c_str());
    out << line;
    for (const ComparisonCell& cell : table.cells) {
        std::snprintf(line, sizeof line, "%-20s %c\n", cell.problem.c_str(),
                      cell.sign);
        out << line;
    }
    std::snprintf(line, sizeof line, "%-20s %d\n", "total '+'", table.plus_count);
    out << line;
    return out.str();
}

std::vector<ResultRow> read_results_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open results file: " + path);
    std::string line;
    if (!std::getline(in, line)) {
        throw std::runtime_error("empty results file: " + path);
    }
    if (line != "name,variant,mfv,sd,me,afe,sr,runs,budget,base_seed") {
        throw std::runtime_error("unrecognized results header in " + path);
    }
    std::vector<ResultRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != 10) {
            throw std::runtime_error("malformed results row in " + path + ": " + line);
        }
        ResultRow row;
        row.problem = fields[0];
        row.variant = variant_from_string(fields[1]);
        row.stats.mfv = std::stod(fields[2]);
        row.stats.sd = std::stod(fields[3]);
        row.stats.me = std::stod(fields[4]);
        row.stats.afe = std::stod(fields[5]);
        row.stats.sr = std::stoi(fields[6]);
        row.runs = std::stoi(fields[7]);
        row.budget = std::stoull(fields[8]);
        row.base_seed = std::stoull(fields[9]);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace abckit
