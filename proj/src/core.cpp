#include "abckit/core.hpp"

#include <algorithm>
#include <cmath>

namespace abckit {

Bounds::Bounds(std::vector<double> lo, std::vector<double> hi,
               std::vector<double> gran)
    : lower(std::move(lo)), upper(std::move(hi)), granularity(std::move(gran)) {
    if (lower.empty() || lower.size() != upper.size()) {
        throw DimensionMismatch("bounds: lower/upper lengths differ or are empty");
    }
    if (!granularity.empty() && granularity.size() != lower.size()) {
        throw DimensionMismatch("bounds: granularity length mismatch");
    }
    for (std::size_t j = 0; j < lower.size(); ++j) {
        if (!(lower[j] < upper[j])) {
            throw std::invalid_argument("bounds: lower must be < upper in every dimension");
        }
    }
}

Bounds Bounds::uniform(std::size_t dim, double lo, double hi) {
    return Bounds(std::vector<double>(dim, lo), std::vector<double>(dim, hi));
}

bool Bounds::contains(std::span<const double> x) const {
    if (x.size() != lower.size()) return false;
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (x[j] < lower[j] || x[j] > upper[j]) return false;
    }
    return true;
}

EvaluationBudget::EvaluationBudget(std::uint64_t max_evaluations)
    : max_(max_evaluations) {
    if (max_evaluations == 0) {
        throw std::invalid_argument("budget: max must be positive");
    }
}

void EvaluationBudget::charge() {
    if (used_ >= max_) {
        throw BudgetExhausted("evaluation budget exhausted (" +
                              std::to_string(max_) + ")");
    }
    ++used_;
}

void snap_dimension(std::vector<double>& position, std::size_t j,
                    const Bounds& bounds) {
    double v = position[j];
    if (!bounds.granularity.empty() && bounds.granularity[j] > 0.0) {
        const double step = bounds.granularity[j];
        v = bounds.lower[j] + std::round((v - bounds.lower[j]) / step) * step;
    }
    position[j] = std::clamp(v, bounds.lower[j], bounds.upper[j]);
}

std::vector<double> snap_to_granularity(std::span<const double> position,
                                        const Bounds& bounds) {
    if (position.size() != bounds.dimension()) {
        throw DimensionMismatch("snap_to_granularity: position length " +
                                std::to_string(position.size()) + " vs bounds " +
                                std::to_string(bounds.dimension()));
    }
    std::vector<double> snapped(position.begin(), position.end());
    for (std::size_t j = 0; j < snapped.size(); ++j) {
        snap_dimension(snapped, j, bounds);
    }
    return snapped;
}

}  // namespace abckit
