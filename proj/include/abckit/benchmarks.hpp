#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "abckit/core.hpp"

namespace abckit {

/// Lookup of a problem name that is not in the registry.
class UnknownProblem : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Static additive quadratic penalty: penalized(x) = f(x) + w * sum max(0, g_k(x))^2.
struct PenaltyPolicy {
    double weight = 1e6;
};

/// One optimization problem: objective, box bounds, catalogued optimum and
/// the per-problem success threshold. Constrained problems expose their
/// inequality constraints g_k(x) <= 0 and are evaluated through the penalty.
struct ProblemSpec {
    std::string name;
    std::size_t dimension = 0;
    Bounds bounds;
    std::function<double(std::span<const double>)> raw;
    std::vector<std::function<double(std::span<const double>)>> constraints;
    PenaltyPolicy penalty;
    double optimum_value = 0.0;
    double acceptable_error = 0.0;   // success: |f - optimum_value| <= acceptable_error
    std::vector<double> best_known;  // empty when no catalogued optimizer
    bool verified_optimum = false;   // checked against optimum_value at registry build

    /// Penalized objective (equal to raw when unconstrained or feasible).
    double objective(std::span<const double> x) const;
    /// sum over constraints of max(0, g_k(x))^2.
    double constraint_violation(std::span<const double> x) const;
};

/// Evaluates the (penalized) objective, charging one unit of budget.
/// Throws BudgetExhausted when the budget is already spent and
/// DimensionMismatch when the position length is wrong.
double evaluate(const ProblemSpec& problem, std::span<const double> position,
                EvaluationBudget& budget);

/// The fixed 14-problem registry, in catalogue order. Problems carrying a
/// verified optimizer are checked against their catalogued optimum (within
/// 1e-3) the first time the registry is built.
const std::vector<ProblemSpec>& registry();

/// Case-sensitive lookup by name; throws UnknownProblem.
const ProblemSpec& find_problem(const std::string& name);

/// Machine-readable catalogue: one line per problem,
/// "name,dimension,bounds,optimum,acceptable_error" after a header line.
/// Bounds are per-dimension "lo:hi" (or "lo:hi:step" when discretized)
/// joined by ';', collapsed to a single token when all dimensions agree.
std::string catalogue_csv();

/// Human-readable aligned catalogue.
std::string catalogue_table();

// Named objectives with constraint handling, exposed for direct use.
// Both return the penalized value; they throw DimensionMismatch.

/// Coil spring weight, x = (coil count, mean coil diameter, wire diameter).
double compression_spring(std::span<const double> x);

/// Cylindrical vessel cost, x = (shell thickness, head thickness, radius, length).
double pressure_vessel(std::span<const double> x);

/// Rosenbrock landscape translated by a shift vector o, with the minimum
/// value biased to 390: f(o) = 390 exactly.
double shifted_rosenbrock(std::span<const double> x, std::span<const double> o);

}  // namespace abckit
