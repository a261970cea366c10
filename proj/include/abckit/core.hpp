#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace abckit {

/// Objective evaluation requested past the evaluation cap.
class BudgetExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A position vector whose length does not match the problem dimension.
class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Per-dimension box constraints, optionally discretized.
///
/// When granularity[j] > 0 the admissible values in dimension j are the
/// lattice points lower[j] + k * granularity[j] clamped into
/// [lower[j], upper[j]]; granularity[j] == 0 means continuous.
struct Bounds {
    std::vector<double> lower;
    std::vector<double> upper;
    std::vector<double> granularity;  // empty = fully continuous

    Bounds() = default;
    Bounds(std::vector<double> lo, std::vector<double> hi,
           std::vector<double> gran = {});

    /// Uniform box [lo, hi]^dim, continuous.
    static Bounds uniform(std::size_t dim, double lo, double hi);

    std::size_t dimension() const { return lower.size(); }
    bool contains(std::span<const double> x) const;
};

/// Candidate solution: position, raw objective, transformed fitness and the
/// consecutive non-improvement counter used by the scout phase.
struct FoodSource {
    std::vector<double> position;
    double objective = 0.0;
    double fitness = 0.0;
    std::uint32_t trials = 0;
};

/// Deterministic, owned random stream.
///
/// Draws are derived from std::mt19937_64 raw output only (never from the
/// standard distributions, whose sequences are implementation-defined), so
/// an identical seed yields an identical draw sequence on every platform.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }

    /// Uniform draw in [0, 1).
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform draw in [lo, hi).
    double uniform(double lo, double hi) {
        return lo + uniform01() * (hi - lo);
    }

    /// Uniform index in [0, n): floor(u * n).
    std::size_t index(std::size_t n) {
        return static_cast<std::size_t>(uniform01() * static_cast<double>(n));
    }

    /// Uniform index in [0, n) \ {excluded}, drawn by rejection. n >= 2.
    std::size_t index_excluding(std::size_t n, std::size_t excluded) {
        std::size_t k;
        do {
            k = index(n);
        } while (k == excluded);
        return k;
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

/// Counts raw objective evaluations against a hard cap. Every raw objective
/// computation in a run charges exactly one unit, including the evaluations
/// inside the onlooker line-search loop.
class EvaluationBudget {
public:
    explicit EvaluationBudget(std::uint64_t max_evaluations);

    std::uint64_t used() const { return used_; }
    std::uint64_t max() const { return max_; }
    bool exhausted() const { return used_ >= max_; }
    std::uint64_t remaining() const { return max_ - used_; }

    /// Consumes one evaluation; throws BudgetExhausted if none remain.
    void charge();

private:
    std::uint64_t used_ = 0;
    std::uint64_t max_;
};

/// Snaps every discretized dimension to its nearest lattice point, then
/// clamps all dimensions into the box. Idempotent.
std::vector<double> snap_to_granularity(std::span<const double> position,
                                        const Bounds& bounds);

/// In-place variant of snap_to_granularity for a single dimension.
void snap_dimension(std::vector<double>& position, std::size_t j,
                    const Bounds& bounds);

}  // namespace abckit
