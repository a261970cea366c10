#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "abckit/benchmarks.hpp"
#include "abckit/core.hpp"

namespace abckit {

/// Probability vector cannot be formed (all fitness mass is zero).
class DegenerateFitness : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The three colony variants. They share the phase structure and differ in
/// the candidate rule: the plain variant perturbs one dimension against a
/// random partner; the attractor variant adds a pull toward the best-so-far
/// solution; the line-search variant replaces the onlooker step with a
/// randomized interval-shrinking search over the step coefficient.
enum class Variant { kAbc, kMeAbc, kIoAbc };

std::string to_string(Variant variant);
Variant variant_from_string(const std::string& label);  // throws invalid_argument

/// Fitness scheme used by the line-search variant. The randomized blend
/// mixes a near-optimum transform with a reciprocal magnitude term under a
/// fresh uniform weight; the classic scheme is the deterministic
/// 1/(1+f) / 1+|f| transform used by the other variants.
enum class FitnessScheme { kRandomizedBlend, kClassic };

struct VariantConfig {
    Variant variant = Variant::kIoAbc;
    int colony_size = 60;   // SN; food sources = employed = onlookers = SN/2
    int limit = 1500;       // scout trigger: consecutive non-improvements
    double meabc_c = 1.5;   // upper bound of the attractor weight draw

    // Line-search controls (onlooker phase of the line-search variant).
    double gss_a = -1.2;          // initial step-coefficient interval
    double gss_b = 1.2;
    double gss_phi_min = 0.55;    // shrink ratio draw range
    double gss_phi_max = 0.65;
    int gss_max_iters = 20;
    double gss_tolerance = 1e-2;  // stop once the interval is this narrow

    FitnessScheme fitness_scheme = FitnessScheme::kRandomizedBlend;

    std::size_t food_sources() const {
        return static_cast<std::size_t>(colony_size) / 2;
    }
    void validate() const;  // throws std::invalid_argument
};

/// The swarm for one run. Confined to a single run; never shared.
struct ColonyState {
    std::vector<FoodSource> sources;
    FoodSource best;  // best-so-far copy, refreshed after every phase
    EvaluationBudget budget;
    RngStream rng;
};

struct StopRule {
    double target_error = 0.0;           // stop when |best - optimum| <= this
    std::uint64_t max_evaluations = 200000;

    static StopRule for_problem(const ProblemSpec& problem,
                                std::uint64_t budget) {
        return StopRule{problem.acceptable_error, budget};
    }
};

/// Outcome of one run, serializable as a single CSV record.
struct RunResult {
    std::string problem;
    Variant variant = Variant::kAbc;
    std::uint64_t seed = 0;
    std::vector<double> best_position;
    double best_objective = 0.0;
    double error = 0.0;  // |best_objective - catalogued optimum|
    std::uint64_t evaluations = 0;
    std::uint64_t cycles = 0;
    bool success = false;
};

std::string run_result_csv_header();
std::string to_csv_row(const RunResult& result);

// Fitness transforms ---------------------------------------------------

/// Deterministic transform: 1/(1+f) for f >= 0, otherwise 1 + |f|.
double classic_fitness(double objective);

/// Randomized blend under an explicit weight phi in [0,1]: a reciprocal
/// near-term 1/|2f+1| mixed with a far-term 1 + |1/f|, with the branch
/// order flipped for negative objectives. Singular inputs are absorbed by
/// a 1e-12 floor on both denominators and the result is capped at 1e12.
double fitness_transform(double objective, double phi);

/// Same transform with phi drawn from the stream (one uniform01 draw).
double fitness_transform(double objective, RngStream& rng);

// Selection ------------------------------------------------------------

/// Plain proportional probabilities fit_i / sum(fit).
std::vector<double> proportional_probabilities(std::span<const double> fitnesses);

/// Blend of max-relative and sum-relative scores under an explicit weight,
/// renormalized to sum to one.
std::vector<double> blend_probabilities(std::span<const double> fitnesses,
                                        double phi);

/// Per-phase probabilities for the given variant. The line-search variant
/// draws one blend weight from the colony stream; the others are
/// deterministic. Throws DegenerateFitness when the fitness mass is zero.
std::vector<double> selection_probabilities(ColonyState& state, Variant variant);

/// Roulette pick over a probability vector (one uniform01 draw).
std::size_t roulette_select(std::span<const double> probabilities,
                            RngStream& rng);

// Phases ----------------------------------------------------------------
//
// Deterministic draw order: every stochastic decision consumes draws from
// the colony's own stream in a fixed order, so (seed, config, problem)
// fully determines a trajectory.
//
//   initialize   per source: D position draws, then one evaluation.
//                Fitness starts from the classic transform for every
//                variant; the line-search variant refits at cycle start.
//   refit        per source: one blend draw (randomized scheme only).
//   employed     per source: partner index (rejection draws until != i),
//                dimension index, step factor in [-1,1); the attractor
//                variant adds one weight draw in [0, meabc_c). One
//                evaluation; an accepted candidate consumes one extra
//                blend draw under the randomized scheme.
//   onlooker     per onlooker: one roulette draw, then as employed; the
//                line-search variant instead runs gss_line_search on the
//                chosen source.
//   scout        when a source is replaced: D position draws, one
//                evaluation (+ one blend draw under the randomized scheme).
//
// Each phase stops before any draw of its next step once the evaluation
// budget is exhausted, leaving partial updates applied.

/// Builds the swarm: SN/2 sources drawn uniformly inside the bounds, each
/// evaluated once. Throws BudgetExhausted when max_evaluations < SN/2.
ColonyState initialize(const ProblemSpec& problem, const VariantConfig& config,
                       std::uint64_t seed, std::uint64_t max_evaluations);

/// Reapplies the variant's fitness transform to every source.
void recompute_fitness(ColonyState& state, const VariantConfig& config);

/// One-dimension neighborhood move per source with greedy replacement.
void employed_phase(ColonyState& state, const ProblemSpec& problem,
                    const VariantConfig& config);

/// Roulette-assigned onlookers using the employed-phase candidate rule.
void onlooker_phase_abc(ColonyState& state, const ProblemSpec& problem,
                        const VariantConfig& config,
                        const std::vector<double>& probabilities);

/// Roulette-assigned onlookers, each refining its source with the
/// interval-shrinking line search, then greedy replacement.
void onlooker_phase_gss(ColonyState& state, const ProblemSpec& problem,
                        const VariantConfig& config,
                        const std::vector<double>& probabilities);

/// Replaces the single source with the highest trial count (ties to the
/// lowest index) once it reaches the limit.
void scout_phase(ColonyState& state, const ProblemSpec& problem,
                 const VariantConfig& config);

/// Folds the current swarm minimum into the best-so-far copy.
void refresh_best(ColonyState& state);

/// Result of one line-search loop over the step-coefficient interval.
struct GssSearchResult {
    bool has_candidate = false;
    std::vector<double> position;  // best trial point seen, by objective
    double objective = 0.0;
    std::vector<double> interval_widths;  // after each completed iteration
};

/// Shrinks [gss_a, gss_b] around the better of two step coefficients per
/// iteration, evaluating the two shifted trial points of the chosen source.
/// Every trial evaluation charges the budget; on exhaustion the loop exits
/// with the candidates evaluated so far.
GssSearchResult gss_line_search(ColonyState& state, std::size_t source_index,
                                const ProblemSpec& problem,
                                const VariantConfig& config);

/// Called after each full cycle with the cycle count and best-so-far.
using CycleObserver = std::function<void(std::uint64_t, const FoodSource&)>;

/// Full run: cycles of employed / onlooker / scout phases until the best
/// objective is within stop.target_error of the catalogued optimum or the
/// budget is exhausted.
RunResult run(const ProblemSpec& problem, const VariantConfig& config,
              std::uint64_t seed, const StopRule& stop,
              const CycleObserver& on_cycle = {});

}  // namespace abckit
