#include "robustcurve/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "robustcurve/errors.hpp"

namespace robustcurve {

double robustness(std::span<const double> curve) {
    if (curve.empty()) throw ParameterError("robustness of an empty curve");
    // Neumaier summation keeps the mean exact to the last ulp for long curves.
    double sum = 0.0;
    double carry = 0.0;
    for (const double x : curve) {
        const double t = sum + x;
        carry += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
        sum = t;
    }
    const double mean = (sum + carry) / static_cast<double>(curve.size());
    return std::clamp(mean, *std::min_element(curve.begin(), curve.end()),
                      *std::max_element(curve.begin(), curve.end()));
}

std::vector<double> LabelVector::flatten() const {
    std::vector<double> out(curve);
    out.push_back(robustness);
    return out;
}

LabelVector label_vector(std::span<const double> curve) {
    return {std::vector<double>(curve.begin(), curve.end()), robustness(curve)};
}

LabelVector unflatten_label(std::span<const double> values) {
    if (values.size() < 2) throw ParameterError("label vector needs a curve and a robustness value");
    return {std::vector<double>(values.begin(), values.end() - 1), values.back()};
}

std::vector<double> clamp_filter(std::span<const double> values) {
    std::vector<double> out(values.size());
    std::transform(values.begin(), values.end(), out.begin(),
                   [](double x) { return std::min(1.0, std::max(0.0, x)); });
    return out;
}

}  // namespace robustcurve
