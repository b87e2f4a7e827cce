#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bridgelife/chloride.hpp"
#include "bridgelife/errors.hpp"

namespace bridgelife::decksim {

// Independent truncated normal for one sampled cell parameter.
struct TruncatedNormal {
    double mean = 0.0;
    double sd = 0.0; // 0 = deterministic
    double lo = 0.0;
    double hi = 1e300;
};

struct DeckSimConfig {
    std::size_t cells = 1000; // one rebar per cell
    std::uint64_t seed = 0;

    TruncatedNormal surface_chloride;   // kg/m^3
    TruncatedNormal threshold_chloride; // kg/m^3
    TruncatedNormal diffusion;          // cm^2/s
    TruncatedNormal cover;              // mm
    TruncatedNormal icorr;              // uA/cm^2

    double rebar_diameter_mm = 16.0;
    chloride::T2Model t2_model = chloride::T2Model::LiuWeyers;
    chloride::ChlorideLifeChoices model_params; // per-model t2 parameters

    double time_step_years = 0.25;
    double horizon_years = 100.0;
    double damage_target = 0.25;
};

struct DamageSeries {
    std::vector<double> times;
    std::vector<double> fractions; // damaged share per time point
};

// Per-cell damage onset times (t1 + t2); cells that never initiate report nullopt.
std::vector<std::optional<double>> cell_damage_times(const DeckSimConfig& cfg);

DamageSeries simulate_deck(const DeckSimConfig& cfg);

// First time the series reaches the target fraction, linearly interpolated
// within the step; nullopt when never reached inside the horizon.
std::optional<double> time_to_fraction(const DamageSeries& series, double target);

} // namespace bridgelife::decksim
