#include "abckit/colony.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <utility>

namespace abckit {

namespace {

constexpr double kFitnessGuard = 1e-12;
constexpr double kFitnessCap = 1e12;

double scheme_fitness(double objective, const VariantConfig& config,
                      RngStream& rng) {
    if (config.variant == Variant::kIoAbc &&
        config.fitness_scheme == FitnessScheme::kRandomizedBlend) {
        return fitness_transform(objective, rng);
    }
    return classic_fitness(objective);
}

/// Greedy replacement on strictly lower objective; bumps the trial counter
/// otherwise.
bool greedy_replace(FoodSource& source, std::vector<double>&& candidate,
                    double objective, const VariantConfig& config,
                    RngStream& rng) {
    if (objective < source.objective) {
        source.position = std::move(candidate);
        source.objective = objective;
        source.fitness = scheme_fitness(objective, config, rng);
        source.trials = 0;
        return true;
    }
    ++source.trials;
    return false;
}

/// One-dimension candidate move shared by the employed and plain onlooker
/// phases. Consumes: partner (rejection), dimension, step factor, and the
/// attractor weight for the attractor variant.
void neighborhood_move(ColonyState& state, std::size_t i,
                       const ProblemSpec& problem, const VariantConfig& config) {
    const std::size_t n = state.sources.size();
    FoodSource& source = state.sources[i];
    const std::size_t k = n > 1 ? state.rng.index_excluding(n, i) : i;
    const std::size_t j = state.rng.index(problem.dimension);
    const double phi = state.rng.uniform(-1.0, 1.0);

    std::vector<double> candidate = source.position;
    candidate[j] += phi * (source.position[j] - state.sources[k].position[j]);
    if (config.variant == Variant::kMeAbc) {
        const double psi = state.rng.uniform(0.0, config.meabc_c);
        candidate[j] += psi * (state.best.position[j] - source.position[j]);
    }
    snap_dimension(candidate, j, problem.bounds);

    const double objective = evaluate(problem, candidate, state.budget);
    greedy_replace(source, std::move(candidate), objective, config, state.rng);
}

}  // namespace

std::string to_string(Variant variant) {
    switch (variant) {
        case Variant::kAbc: return "abc";
        case Variant::kMeAbc: return "meabc";
        case Variant::kIoAbc: return "ioabc";
    }
    return "abc";
}

Variant variant_from_string(const std::string& label) {
    if (label == "abc") return Variant::kAbc;
    if (label == "meabc") return Variant::kMeAbc;
    if (label == "ioabc") return Variant::kIoAbc;
    throw std::invalid_argument("unknown variant: " + label);
}

void VariantConfig::validate() const {
    if (colony_size < 2 || colony_size % 2 != 0) {
        throw std::invalid_argument("colony_size must be even and >= 2");
    }
    if (limit < 1) throw std::invalid_argument("limit must be positive");
    if (meabc_c <= 0.0) throw std::invalid_argument("meabc_c must be positive");
    if (!(gss_a < gss_b)) throw std::invalid_argument("gss_a must be < gss_b");
    if (!(gss_phi_min > 0.0 && gss_phi_min <= gss_phi_max && gss_phi_max < 1.0)) {
        throw std::invalid_argument("gss phi range must satisfy 0 < min <= max < 1");
    }
    if (gss_max_iters < 1) throw std::invalid_argument("gss_max_iters must be positive");
    if (gss_tolerance <= 0.0) throw std::invalid_argument("gss_tolerance must be positive");
}

double classic_fitness(double objective) {
    return objective >= 0.0 ? 1.0 / (1.0 + objective) : 1.0 + std::abs(objective);
}

double fitness_transform(double objective, double phi) {
    const double near_term =
        1.0 / std::max(std::abs(2.0 * objective + 1.0), kFitnessGuard);
    const double far_term =
        1.0 + 1.0 / std::max(std::abs(objective), kFitnessGuard);
    const double fit = objective >= 0.0
                           ? phi * near_term + (1.0 - phi) * far_term
                           : (1.0 - phi) * near_term + phi * far_term;
    return std::min(fit, kFitnessCap);
}

double fitness_transform(double objective, RngStream& rng) {
    return fitness_transform(objective, rng.uniform01());
}

std::vector<double> proportional_probabilities(std::span<const double> fitnesses) {
    double sum = 0.0;
    for (double f : fitnesses) sum += f;
    if (!(sum > 0.0) || !std::isfinite(sum)) {
        throw DegenerateFitness("fitness mass is zero or non-finite");
    }
    std::vector<double> probs(fitnesses.size());
    for (std::size_t i = 0; i < fitnesses.size(); ++i) probs[i] = fitnesses[i] / sum;
    return probs;
}

std::vector<double> blend_probabilities(std::span<const double> fitnesses,
                                        double phi) {
    double sum = 0.0;
    double max_fit = 0.0;
    for (double f : fitnesses) {
        sum += f;
        max_fit = std::max(max_fit, f);
    }
    if (!(sum > 0.0) || !std::isfinite(sum) || !(max_fit > 0.0)) {
        throw DegenerateFitness("fitness mass is zero or non-finite");
    }
    std::vector<double> raw(fitnesses.size());
    double raw_sum = 0.0;
    for (std::size_t i = 0; i < fitnesses.size(); ++i) {
        raw[i] = phi * (fitnesses[i] / max_fit) + (1.0 - phi) * (fitnesses[i] / sum);
        raw_sum += raw[i];
    }
    for (double& p : raw) p /= raw_sum;
    return raw;
}

std::vector<double> selection_probabilities(ColonyState& state, Variant variant) {
    std::vector<double> fitnesses(state.sources.size());
    for (std::size_t i = 0; i < state.sources.size(); ++i) {
        fitnesses[i] = state.sources[i].fitness;
    }
    if (variant == Variant::kIoAbc) {
        return blend_probabilities(fitnesses, state.rng.uniform01());
    }
    return proportional_probabilities(fitnesses);
}

std::size_t roulette_select(std::span<const double> probabilities,
                            RngStream& rng) {
    const double u = rng.uniform01();
    double cumulative = 0.0;
    for (std::size_t i = 0; i < probabilities.size(); ++i) {
        cumulative += probabilities[i];
        if (u < cumulative) return i;
    }
    return probabilities.size() - 1;
}

ColonyState initialize(const ProblemSpec& problem, const VariantConfig& config,
                       std::uint64_t seed, std::uint64_t max_evaluations) {
    config.validate();
    ColonyState state{{}, {}, EvaluationBudget(max_evaluations), RngStream(seed)};
    const std::size_t n = config.food_sources();
    const Bounds& bounds = problem.bounds;
    state.sources.reserve(n);
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<double> position(problem.dimension);
        for (std::size_t j = 0; j < position.size(); ++j) {
            position[j] = bounds.lower[j] +
                          state.rng.uniform01() * (bounds.upper[j] - bounds.lower[j]);
        }
        position = snap_to_granularity(position, bounds);
        FoodSource source;
        source.objective = evaluate(problem, position, state.budget);
        source.fitness = classic_fitness(source.objective);
        source.position = std::move(position);
        state.sources.push_back(std::move(source));
    }
    state.best = state.sources.front();
    refresh_best(state);
    return state;
}

void recompute_fitness(ColonyState& state, const VariantConfig& config) {
    for (FoodSource& source : state.sources) {
        source.fitness = scheme_fitness(source.objective, config, state.rng);
    }
}

void employed_phase(ColonyState& state, const ProblemSpec& problem,
                    const VariantConfig& config) {
    for (std::size_t i = 0; i < state.sources.size(); ++i) {
        if (state.budget.exhausted()) break;
        neighborhood_move(state, i, problem, config);
    }
}

void onlooker_phase_abc(ColonyState& state, const ProblemSpec& problem,
                        const VariantConfig& config,
                        const std::vector<double>& probabilities) {
    for (std::size_t o = 0; o < state.sources.size(); ++o) {
        if (state.budget.exhausted()) break;
        const std::size_t i = roulette_select(probabilities, state.rng);
        neighborhood_move(state, i, problem, config);
    }
}

GssSearchResult gss_line_search(ColonyState& state, std::size_t source_index,
                                const ProblemSpec& problem,
                                const VariantConfig& config) {
    GssSearchResult result;
    const FoodSource& source = state.sources[source_index];
    const std::size_t n = state.sources.size();
    double a = config.gss_a;
    double b = config.gss_b;

    auto consider = [&result](std::vector<double>&& position, double objective) {
        if (!result.has_candidate || objective < result.objective) {
            result.position = std::move(position);
            result.objective = objective;
            result.has_candidate = true;
        }
    };

    for (int iter = 0;
         iter < config.gss_max_iters && (b - a) >= config.gss_tolerance; ++iter) {
        if (state.budget.exhausted()) break;
        const double phi = state.rng.uniform(config.gss_phi_min, config.gss_phi_max);
        const double f1 = b - (b - a) * phi;
        const double f2 = a + (b - a) * phi;
        // The partner draw deliberately admits the source itself.
        const std::size_t k = state.rng.index(n);
        const std::size_t j = state.rng.index(problem.dimension);
        const double delta = source.position[j] - state.sources[k].position[j];

        std::vector<double> near = source.position;
        near[j] += delta * f1;
        snap_dimension(near, j, problem.bounds);
        const double near_objective = evaluate(problem, near, state.budget);
        consider(std::move(near), near_objective);

        if (state.budget.exhausted()) break;
        std::vector<double> far = source.position;
        far[j] += delta * f2;
        snap_dimension(far, j, problem.bounds);
        const double far_objective = evaluate(problem, far, state.budget);
        consider(std::move(far), far_objective);

        if (near_objective < far_objective) {
            b = f2;
        } else {
            a = f1;
        }
        result.interval_widths.push_back(b - a);
    }
    return result;
}

void onlooker_phase_gss(ColonyState& state, const ProblemSpec& problem,
                        const VariantConfig& config,
                        const std::vector<double>& probabilities) {
    for (std::size_t o = 0; o < state.sources.size(); ++o) {
        if (state.budget.exhausted()) break;
        const std::size_t i = roulette_select(probabilities, state.rng);
        GssSearchResult found = gss_line_search(state, i, problem, config);
        if (!found.has_candidate) continue;  // budget died before any trial
        greedy_replace(state.sources[i], std::move(found.position),
                       found.objective, config, state.rng);
    }
}

void scout_phase(ColonyState& state, const ProblemSpec& problem,
                 const VariantConfig& config) {
    if (state.sources.empty()) return;
    std::size_t worst = 0;
    for (std::size_t i = 1; i < state.sources.size(); ++i) {
        if (state.sources[i].trials > state.sources[worst].trials) worst = i;
    }
    FoodSource& source = state.sources[worst];
    if (source.trials < static_cast<std::uint32_t>(config.limit)) return;
    if (state.budget.exhausted()) return;

    const Bounds& bounds = problem.bounds;
    std::vector<double> position(problem.dimension);
    for (std::size_t j = 0; j < position.size(); ++j) {
        position[j] = bounds.lower[j] +
                      state.rng.uniform01() * (bounds.upper[j] - bounds.lower[j]);
    }
    position = snap_to_granularity(position, bounds);
    source.objective = evaluate(problem, position, state.budget);
    source.fitness = scheme_fitness(source.objective, config, state.rng);
    source.position = std::move(position);
    source.trials = 0;
}

void refresh_best(ColonyState& state) {
    for (const FoodSource& source : state.sources) {
        if (source.objective < state.best.objective) state.best = source;
    }
}

RunResult run(const ProblemSpec& problem, const VariantConfig& config,
              std::uint64_t seed, const StopRule& stop,
              const CycleObserver& on_cycle) {
    config.validate();
    ColonyState state = initialize(problem, config, seed, stop.max_evaluations);

    auto error_now = [&state, &problem] {
        return std::abs(state.best.objective - problem.optimum_value);
    };

    std::uint64_t cycles = 0;
    bool success = error_now() <= stop.target_error;
    while (!success && !state.budget.exhausted()) {
        if (config.variant == Variant::kIoAbc) recompute_fitness(state, config);
        employed_phase(state, problem, config);
        refresh_best(state);
        const std::vector<double> probabilities =
            selection_probabilities(state, config.variant);
        if (config.variant == Variant::kIoAbc) {
            onlooker_phase_gss(state, problem, config, probabilities);
        } else {
            onlooker_phase_abc(state, problem, config, probabilities);
        }
        refresh_best(state);
        scout_phase(state, problem, config);
        refresh_best(state);
        ++cycles;
        success = error_now() <= stop.target_error;
        if (on_cycle) on_cycle(cycles, state.best);
    }

    RunResult result;
    result.problem = problem.name;
    result.variant = config.variant;
    result.seed = seed;
    result.best_position = state.best.position;
    result.best_objective = state.best.objective;
    result.error = error_now();
    result.evaluations = state.budget.used();
    result.cycles = cycles;
    result.success = success;
    return result;
}

std::string run_result_csv_header() {
    return "problem,variant,seed,success,best_objective,error,evaluations,cycles";
}

std::string to_csv_row(const RunResult& r) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s,%s,%llu,%d,%.17g,%.17g,%llu,%llu",
                  r.problem.c_str(), to_string(r.variant).c_str(),
                  static_cast<unsigned long long>(r.seed), r.success ? 1 : 0,
                  r.best_objective, r.error,
                  static_cast<unsigned long long>(r.evaluations),
                  static_cast<unsigned long long>(r.cycles));
    return buf;
}

}  // namespace abckit
