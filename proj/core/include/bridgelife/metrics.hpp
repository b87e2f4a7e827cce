#pragma once

#include <optional>
#include <vector>

#include "bridgelife/errors.hpp"

namespace bridgelife::metrics {

struct ConfusionMatrix {
    long tp = 0;
    long fp = 0;
    long fn = 0;
    long tn = 0;
};

// Each metric is absent (not zero) when its denominator vanishes.
struct ClassificationMetrics {
    std::optional<double> precision;
    std::optional<double> recall;
    std::optional<double> accuracy;
    std::optional<double> f1;
};

ClassificationMetrics evaluate(const ConfusionMatrix& cm);

// Coefficient of determination; absent when y is constant.
std::optional<double> r2(const std::vector<double>& y, const std::vector<double>& y_hat);

} // namespace bridgelife::metrics
