#include "bridgelife/stats.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "bridgelife/specialfn.hpp"

namespace bridgelife::stats {

double eval_polynomial(const PolynomialModel& m, double age_years) {
    if (age_years < 0.0) throw DomainError("eval_polynomial: age must be non-negative");
    double y = 0.0;
    for (int k = 3; k >= 0; --k) y = y * age_years + m.c[static_cast<std::size_t>(k)];
    return y;
}

std::optional<double> service_life_first_crossing(const PolynomialModel& m, double threshold,
                                                  double horizon_years) {
    if (horizon_years <= 0.0) throw DomainError("first_crossing: horizon must be positive");
    if (eval_polynomial(m, 0.0) <= threshold) return 0.0;

    const double step = 0.1;
    double lo = 0.0;
    double hi = -1.0;
    for (double t = step; t <= horizon_years + step * 0.5; t += step) {
        const double tt = std::min(t, horizon_years);
        if (eval_polynomial(m, tt) <= threshold) {
            hi = tt;
            break;
        }
        lo = tt;
        if (tt >= horizon_years) break;
    }
    if (hi < 0.0) return std::nullopt;
    while (hi - lo > 1e-6) {
        const double mid = 0.5 * (lo + hi);
        if (eval_polynomial(m, mid) <= threshold) hi = mid;
        else lo = mid;
    }
    return hi;
}

double eval_piecewise_stukhart(const PiecewiseLinearModel& m, double age_years) {
    if (age_years < 0.0) throw DomainError("eval_piecewise_stukhart: age must be non-negative");
    if (m.t1 >= m.t2) throw DomainError("eval_piecewise_stukhart: breakpoints out of order");
    if (age_years <= m.t1) return m.b0 + m.b1 * age_years;
    const double at_t1 = m.b0 + m.b1 * m.t1;
    if (age_years <= m.t2) return at_t1 + m.b2 * (age_years - m.t1);
    return at_t1 + m.b2 * (m.t2 - m.t1) + m.b3 * (age_years - m.t2);
}

double eval_exponential(double beta1, double beta2, double age_years) {
    if (age_years < 0.0) throw DomainError("eval_exponential: age must be non-negative");
    if (beta2 == 0.0) throw DomainError("eval_exponential: beta2 must be non-zero");
    return beta1 * std::exp(age_years / beta2);
}

double eval_hatami(double adtt, double age_years) {
    if (adtt < 0.0 || age_years < 0.0) throw DomainError("eval_hatami: inputs must be non-negative");
    const double t = age_years;
    if (adtt < 100.0) {
        return 10.189 - 0.233 * t + 0.0092 * t * t - 0.0002 * t * t * t;
    }
    if (adtt <= 500.0) {
        return 10.754 - 0.342 * t + 0.0127 * t * t - 0.0002 * t * t * t;
    }
    return 10.372 - 0.2311 * t + 0.0039 * t * t - 0.00004 * t * t * t;
}

namespace {

const std::map<std::string, PolynomialModel>& catalog() {
    static const std::map<std::string, PolynomialModel> models = {
        {"jiang.concrete.superstructure",
         {{9.0, -0.28877329, 0.0093685, -0.00008877}, "nbi-0-9", 120.0}},
        {"agrawal.curb.granite",
         {{7.0, -0.0605424, 0.0001089, -1.0e-7}, "ny-1-7", 120.0}},
        {"agrawal.curb.steel_plate",
         {{7.0, -0.0577393, -0.0001956, -1.7e-6}, "ny-1-7", 120.0}},
        {"agrawal.curb.timber",
         {{7.0, -0.0584921, -0.0003144, -2.4e-6}, "ny-1-7", 120.0}},
        {"agrawal.curb.concrete",
         {{7.0, -0.0507576, -0.0002625, -1.9e-6}, "ny-1-7", 120.0}},
    };
    return models;
}

} // namespace

const PolynomialModel& catalog_model(const std::string& id) {
    const auto& models = catalog();
    auto it = models.find(id);
    if (it == models.end()) throw DomainError("unknown catalog model: " + id);
    return it->second;
}

std::vector<std::string> catalog_ids() {
    std::vector<std::string> ids;
    for (const auto& [id, m] : catalog()) ids.push_back(id);
    ids.push_back("hatami.adtt"); // banded model, addressed via eval_hatami
    return ids;
}

double weibull_survival(const WeibullParams& w, double t) {
    if (w.shape <= 0.0 || w.scale <= 0.0) throw DomainError("weibull: parameters must be positive");
    if (t < 0.0) throw DomainError("weibull: time must be non-negative");
    return std::exp(-std::pow(t / w.scale, w.shape));
}

double weibull_density(const WeibullParams& w, double t) {
    if (w.shape <= 0.0 || w.scale <= 0.0) throw DomainError("weibull: parameters must be positive");
    if (t < 0.0) throw DomainError("weibull: time must be non-negative");
    if (t == 0.0) return w.shape == 1.0 ? 1.0 / w.scale : (w.shape < 1.0 ? INFINITY : 0.0);
    const double z = t / w.scale;
    return w.shape / w.scale * std::pow(z, w.shape - 1.0) * std::exp(-std::pow(z, w.shape));
}

double hazard(double density, double survival) {
    if (survival <= 0.0) throw DomainError("hazard: survival must be positive");
    if (density < 0.0) throw DomainError("hazard: density must be non-negative");
    return density / survival;
}

std::vector<double> hearn_discrete_probability(std::vector<double> lifetimes) {
    if (lifetimes.empty()) throw DomainError("hearn: empty sample");
    std::sort(lifetimes.begin(), lifetimes.end());
    std::vector<double> d(lifetimes.size());
    const double n = static_cast<double>(lifetimes.size());
    for (std::size_t i = 0; i < lifetimes.size(); ++i) {
        d[i] = static_cast<double>(i + 1) / n;
    }
    return d;
}

double hearn_model_error(const std::vector<double>& empirical,
                         const std::vector<double>& fitted) {
    if (empirical.size() != fitted.size()) throw DomainError("hearn: size mismatch");
    double err = 0.0;
    for (std::size_t i = 0; i < empirical.size(); ++i) {
        const double d = empirical[i] - fitted[i];
        err += d * d;
    }
    return err;
}

WeibullParams fit_weibull_censored(const std::vector<CensoredObservation>& sample) {
    std::size_t failures = 0;
    double sum_log_failed = 0.0;
    for (const auto& obs : sample) {
        if (obs.time <= 0.0) throw DomainError("fit_weibull_censored: times must be positive");
        if (obs.failed) {
            ++failures;
            sum_log_failed += std::log(obs.time);
        }
    }
    if (failures < 2) {
        throw ModelError("fit_weibull_censored: need at least two observed failures");
    }
    const double r = static_cast<double>(failures);

    // Profile score in beta; eta is eliminated in closed form.
    auto score = [&](double beta) {
        double s = 0.0;       // sum t^beta
        double s_log = 0.0;   // sum t^beta * log t
        for (const auto& obs : sample) {
            const double tb = std::pow(obs.time, beta);
            s += tb;
            s_log += tb * std::log(obs.time);
        }
        return 1.0 / beta + sum_log_failed / r - s_log / s;
    };

    double lo = 0.05;
    double hi = 50.0;
    double f_lo = score(lo);
    double f_hi = score(hi);
    if (f_lo * f_hi > 0.0) {
        throw ModelError("fit_weibull_censored: shape outside the supported bracket");
    }
    while (hi - lo > 1e-9) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = score(mid);
        if (f_mid == 0.0) {
            lo = hi = mid;
            break;
        }
        if (f_lo * f_mid < 0.0) {
            hi = mid;
            f_hi = f_mid;
        } else {
            lo = mid;
            f_lo = f_mid;
        }
    }
    const double beta = 0.5 * (lo + hi);
    double s = 0.0;
    for (const auto& obs : sample) s += std::pow(obs.time, beta);
    const double eta = std::pow(s / r, 1.0 / beta);
    return {beta, eta};
}

double gamma_process_density(double shape, double scale, double x) {
    if (shape <= 0.0 || scale <= 0.0 || x <= 0.0) {
        throw DomainError("gamma_process_density: arguments must be positive");
    }
    const double log_f = shape * std::log(scale) - specialfn::log_gamma(shape) +
                         (shape - 1.0) * std::log(x) - scale * x;
    return std::exp(log_f);
}

double ar_forecast(const std::vector<double>& coeffs, const std::vector<double>& history) {
    if (coeffs.empty()) throw DomainError("ar_forecast: empty coefficient vector");
    const std::size_t p = coeffs.size() - 1;
    if (history.size() < p) throw DomainError("ar_forecast: history shorter than model order");
    double y = coeffs[0];
    for (std::size_t k = 1; k <= p; ++k) {
        y += coeffs[k] * history[history.size() - k];
    }
    return y;
}

std::vector<double> choice_probability(const std::vector<double>& utilities) {
    if (utilities.empty()) throw DomainError("choice_probability: empty utility vector");
    double vmax = utilities[0];
    for (double v : utilities) {
        if (!std::isfinite(v)) throw DomainError("choice_probability: non-finite utility");
        vmax = std::max(vmax, v);
    }
    std::vector<double> p(utilities.size());
    double z = 0.0;
    for (std::size_t i = 0; i < utilities.size(); ++i) {
        p[i] = std::exp(utilities[i] - vmax);
        z += p[i];
    }
    for (double& v : p) v /= z;
    return p;
}

} // namespace bridgelife::stats
