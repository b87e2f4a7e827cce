#include "bridgelife/decksim.hpp"

#include <cmath>

namespace bridgelife::decksim {

namespace {

// splitmix64: cheap, well-mixed generator used to derive one independent
// substream per cell so results do not depend on iteration order.
struct SplitMix64 {
    std::uint64_t state;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    double uniform() { // in (0, 1)
        return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
    }

    double normal() { // Box-Muller
        const double u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }
};

double sample_truncated(SplitMix64& rng, const TruncatedNormal& d) {
    if (d.sd < 0.0) throw DomainError("decksim: standard deviation must be non-negative");
    if (d.lo > d.hi) throw DomainError("decksim: truncation bounds out of order");
    if (d.sd == 0.0) {
        if (d.mean < d.lo || d.mean > d.hi) {
            throw ModelError("decksim: deterministic value outside truncation bounds");
        }
        return d.mean;
    }
    for (int tries = 0; tries < 10000; ++tries) {
        const double v = d.mean + d.sd * rng.normal();
        if (v >= d.lo && v <= d.hi) return v;
    }
    throw ModelError("decksim: truncated-normal rejection did not converge");
}

} // namespace

std::vector<std::optional<double>> cell_damage_times(const DeckSimConfig& cfg) {
    if (cfg.cells == 0) throw DomainError("decksim: need at least one cell");
    if (cfg.damage_target <= 0.0 || cfg.damage_target > 1.0) {
        throw DomainError("decksim: damage target must be in (0, 1]");
    }
    if (cfg.time_step_years <= 0.0 || cfg.horizon_years <= 0.0) {
        throw DomainError("decksim: time step and horizon must be positive");
    }

    std::vector<std::optional<double>> onset(cfg.cells);
    for (std::size_t c = 0; c < cfg.cells; ++c) {
        // Cell-indexed substream: mix the seed and the cell index once.
        SplitMix64 mixer{cfg.seed ^ (0x632be59bd9b4e019ULL * (c + 1))};
        SplitMix64 rng{mixer.next()};

        chloride::ChlorideEnvironment env;
        env.surface_chloride_kg_m3 = sample_truncated(rng, cfg.surface_chloride);
        env.threshold_chloride_kg_m3 = sample_truncated(rng, cfg.threshold_chloride);
        env.diffusion_cm2_s = sample_truncated(rng, cfg.diffusion);
        env.cover_mm = sample_truncated(rng, cfg.cover);
        chloride::CorrosionKinetics kin;
        kin.icorr_uA_cm2 = sample_truncated(rng, cfg.icorr);
        chloride::RebarGeometry geom{cfg.rebar_diameter_mm, std::nullopt};

        const std::optional<double> t1 = chloride::t1_fick(env);
        if (!t1) continue;

        std::optional<double> t2;
        switch (cfg.t2_model) {
            case chloride::T2Model::Bazant:
                t2 = chloride::t2_bazant(geom, kin, cfg.model_params.bazant_delta_d_mm);
                break;
            case chloride::T2Model::Morinaga:
                t2 = chloride::t2_morinaga(geom, env.cover_mm, kin);
                break;
            case chloride::T2Model::Wang:
                t2 = chloride::t2_wang(geom, env.cover_mm, cfg.model_params.wang_fcu_kn_cm2, kin,
                                       cfg.model_params.wang_delta_crit_mm);
                break;
            case chloride::T2Model::LiuWeyers:
                t2 = chloride::t2_liu_weyers(geom, env.cover_mm, cfg.model_params.liu_weyers,
                                             kin);
                break;
        }
        if (!t2) continue;
        onset[c] = *t1 + *t2;
    }
    return onset;
}

DamageSeries simulate_deck(const DeckSimConfig& cfg) {
    const std::vector<std::optional<double>> onset = cell_damage_times(cfg);
    DamageSeries series;
    const std::size_t steps =
        static_cast<std::size_t>(std::floor(cfg.horizon_years / cfg.time_step_years + 1e-9));
    for (std::size_t k = 0; k <= steps; ++k) {
        const double t = static_cast<double>(k) * cfg.time_step_years;
        std::size_t damaged = 0;
        for (const auto& o : onset) {
            if (o && *o <= t) ++damaged;
        }
        series.times.push_back(t);
        series.fractions.push_back(static_cast<double>(damaged) /
                                   static_cast<double>(cfg.cells));
    }
    return series;
}

std::optional<double> time_to_fraction(const DamageSeries& series, double target) {
    if (series.times.size() != series.fractions.size() || series.times.empty()) {
        throw DomainError("time_to_fraction: malformed series");
    }
    if (target < 0.0 || target > 1.0) {
        throw DomainError("time_to_fraction: target must be in [0, 1]");
    }
    if (target <= series.fractions.front()) return series.times.front();
    for (std::size_t k = 1; k < series.times.size(); ++k) {
        if (series.fractions[k] >= target) {
            const double f0 = series.fractions[k - 1];
            const double f1 = series.fractions[k];
            const double t0 = series.times[k - 1];
            const double t1 = series.times[k];
            if (f1 == f0) return t1;
            return t0 + (target - f0) / (f1 - f0) * (t1 - t0);
        }
    }
    return std::nullopt;
}

} // namespace bridgelife::decksim
