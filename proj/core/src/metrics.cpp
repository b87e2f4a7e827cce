#include "bridgelife/metrics.hpp"

namespace bridgelife::metrics {

ClassificationMetrics evaluate(const ConfusionMatrix& cm) {
    if (cm.tp < 0 || cm.fp < 0 || cm.fn < 0 || cm.tn < 0) {
        throw DomainError("metrics: counts must be non-negative");
    }
    ClassificationMetrics out;
    if (cm.tp + cm.fp > 0) {
        out.precision = static_cast<double>(cm.tp) / static_cast<double>(cm.tp + cm.fp);
    }
    if (cm.tp + cm.fn > 0) {
        out.recall = static_cast<double>(cm.tp) / static_cast<double>(cm.tp + cm.fn);
    }
    const long total = cm.tp + cm.fp + cm.fn + cm.tn;
    if (total > 0) {
        out.accuracy = static_cast<double>(cm.tp + cm.tn) / static_cast<double>(total);
    }
    if (out.precision && out.recall && *out.precision + *out.recall > 0.0) {
        out.f1 = 2.0 * *out.precision * *out.recall / (*out.precision + *out.recall);
    }
    return out;
}

std::optional<double> r2(const std::vector<double>& y, const std::vector<double>& y_hat) {
    if (y.size() != y_hat.size() || y.empty()) {
        throw DomainError("r2: series must be non-empty and equal length");
    }
    double mean = 0.0;
    for (double v : y) mean += v;
    mean /= static_cast<double>(y.size());
    double ss_res = 0.0;
    double ss_tot = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        ss_res += (y[i] - y_hat[i]) * (y[i] - y_hat[i]);
        ss_tot += (y[i] - mean) * (y[i] - mean);
    }
    if (ss_tot == 0.0) return std::nullopt;
    return 1.0 - ss_res / ss_tot;
}

} // namespace bridgelife::metrics
