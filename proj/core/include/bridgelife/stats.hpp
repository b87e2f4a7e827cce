#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bridgelife/errors.hpp"

namespace bridgelife::stats {

struct PolynomialModel {
    std::array<double, 4> c{}; // c[k] multiplies t^k
    std::string scale;         // e.g. "nbi-0-9", "ny-1-7"
    double max_age_years = 120.0;
};

struct PiecewiseLinearModel {
    // Slopes per branch; value is continuous across the breakpoints.
    double b0 = 0.0; // rating at t = 0
    double b1 = 0.0; // slope on [0, t1]
    double b2 = 0.0; // slope on (t1, t2]
    double b3 = 0.0; // slope beyond t2
    double t1 = 25.0;
    double t2 = 45.0;
};

struct WeibullParams {
    double shape = 1.0; // beta
    double scale = 1.0; // eta
};

struct CensoredObservation {
    double time = 0.0;
    bool failed = false; // false = right-censored
};

double eval_polynomial(const PolynomialModel& m, double age_years);

// Smallest age in [0, horizon] where the rating reaches the threshold;
// nullopt if the curve never crosses.
std::optional<double> service_life_first_crossing(const PolynomialModel& m, double threshold,
                                                  double horizon_years);

double eval_piecewise_stukhart(const PiecewiseLinearModel& m, double age_years);

double eval_exponential(double beta1, double beta2, double age_years);

// Truck-traffic banded cubic rating model.
double eval_hatami(double adtt, double age_years);

// Built-in published rating models, addressed by id:
//   jiang.concrete.superstructure
//   agrawal.curb.granite | agrawal.curb.steel_plate | agrawal.curb.timber |
//   agrawal.curb.concrete
const PolynomialModel& catalog_model(const std::string& id);
std::vector<std::string> catalog_ids();

double weibull_survival(const WeibullParams& w, double t);
double weibull_density(const WeibullParams& w, double t);
double hazard(double density, double survival);

// Empirical cumulative probability D(x_i) = i/N over sorted lifetimes.
std::vector<double> hearn_discrete_probability(std::vector<double> lifetimes);
double hearn_model_error(const std::vector<double>& empirical,
                         const std::vector<double>& fitted);

// Right-censored Weibull maximum likelihood via the 1-D profile equation.
WeibullParams fit_weibull_censored(const std::vector<CensoredObservation>& sample);

double gamma_process_density(double shape, double scale, double x);

// One-step-ahead AR(p) forecast: coeffs[0] is the intercept; coeffs[k]
// multiplies the k-th most recent value.
double ar_forecast(const std::vector<double>& coeffs, const std::vector<double>& history);

// Multinomial-logit probabilities from per-state utilities.
std::vector<double> choice_probability(const std::vector<double>& utilities);

} // namespace bridgelife::stats
