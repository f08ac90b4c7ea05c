#pragma once

#include <span>
#include <vector>

namespace robustcurve {

/// Mean of the attack curve. The node and edge robustness measures share this
/// formula; only the grid they are sampled on differs.
/// Throws ParameterError for an empty curve.
double robustness(std::span<const double> curve);

/// Training label: the curve followed by its robustness.
struct LabelVector {
    std::vector<double> curve;
    double robustness = 0.0;

    std::size_t size() const noexcept { return curve.size() + 1; }
    std::vector<double> flatten() const;

    friend bool operator==(const LabelVector&, const LabelVector&) = default;
};

LabelVector label_vector(std::span<const double> curve);

/// Splits a flat (curve..., robustness) vector. Needs at least two entries.
LabelVector unflatten_label(std::span<const double> values);

/// Elementwise clamp into [0, 1]. No monotonicity repair.
std::vector<double> clamp_filter(std::span<const double> values);

}  // namespace robustcurve
