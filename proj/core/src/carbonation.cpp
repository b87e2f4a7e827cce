#include "bridgelife/carbonation.hpp"

#include <cmath>

#include "bridgelife/units.hpp"

namespace bridgelife::carbonation {

SurfaceFinish finish_from_string(const std::string& name) {
    if (name == "no_layer") return SurfaceFinish::NoLayer;
    if (name == "plaster") return SurfaceFinish::Plaster;
    if (name == "mortar_plus_plaster") return SurfaceFinish::MortarPlusPlaster;
    if (name == "mortar") return SurfaceFinish::Mortar;
    if (name == "mortar_plus_paint") return SurfaceFinish::MortarPlusPaint;
    if (name == "tiles") return SurfaceFinish::Tiles;
    if (name == "paint") return SurfaceFinish::Paint;
    throw DomainError("unknown surface finish: " + name);
}

double finish_beta(SurfaceFinish finish, bool indoor) {
    // Published indoor/outdoor pairs; a negative sentinel marks entries with
    // no outdoor value.
    struct Row { double in, out; };
    Row row{};
    switch (finish) {
        case SurfaceFinish::NoLayer: row = {1.0, 1.0}; break;
        case SurfaceFinish::Plaster: row = {0.79, -1.0}; break;
        case SurfaceFinish::MortarPlusPlaster: row = {0.41, -1.0}; break;
        case SurfaceFinish::Mortar: row = {0.29, 0.28}; break;
        case SurfaceFinish::MortarPlusPaint: row = {0.15, -1.0}; break;
        case SurfaceFinish::Tiles: row = {0.21, 0.07}; break;
        case SurfaceFinish::Paint: row = {0.57, 0.8}; break;
    }
    const double beta = indoor ? row.in : row.out;
    if (beta < 0.0) throw DomainError("finish_beta: no outdoor value for this finish");
    return beta;
}

double tc_hookman(double remaining_cover_mm, double rate_mm_yr) {
    if (rate_mm_yr <= 0.0) throw DomainError("tc_hookman: rate must be positive");
    if (remaining_cover_mm < 0.0) throw DomainError("tc_hookman: cover must be non-negative");
    return remaining_cover_mm / rate_mm_yr;
}

double life_coefficient_model(double cover_mm, double k_c, double k_e, double k_a) {
    if (k_c < 0.0 || k_e < 0.0 || k_a < 0.0) {
        throw DomainError("life_coefficient_model: coefficients must be non-negative");
    }
    return k_c * k_e * cover_mm * cover_mm + k_a * cover_mm;
}

double depth_sqrt_law(double dc, double delta_c, double t) {
    if (dc < 0.0 || delta_c < 0.0 || t < 0.0) {
        throw DomainError("depth_sqrt_law: arguments must be non-negative");
    }
    return std::sqrt(2.0 * dc * delta_c * t);
}

double time_iaea(double cover_mm, int grade) {
    double k;
    switch (grade) {
        case 15: k = 17.0; break;
        case 20: k = 10.0; break;
        case 25: k = 6.0; break;
        case 30: k = 5.0; break;
        case 35: k = 4.0; break;
        case 40: k = 3.5; break;
        default: throw DomainError("time_iaea: grade not in permeability table");
    }
    if (cover_mm < 0.0) throw DomainError("time_iaea: cover must be non-negative");
    return (cover_mm / k) * (cover_mm / k);
}

EmpiricalDepth depth_empirical_wcr(double age_years, double water_cement, SurfaceFinish finish,
                                   bool indoor) {
    if (age_years < 0.0) throw DomainError("depth_empirical_wcr: age must be non-negative");
    const double alpha = indoor ? 1.7 : 1.0;
    const double r = alpha * finish_beta(finish, indoor);
    const double wc_term = 4.6 * water_cement - 1.76;
    if (wc_term <= 0.0) return {0.0, true};
    return {std::sqrt(age_years) * r * wc_term / std::sqrt(7.2), false};
}

double papadakis_diffusivity(const PapadakisConcrete& p, double rh_percent) {
    if (rh_percent < 0.0 || rh_percent > 100.0) {
        throw DomainError("papadakis_diffusivity: RH must be in [0, 100]");
    }
    if (p.carbonated_porosity < p.entrapped_air) {
        throw DomainError("papadakis_diffusivity: carbonated porosity below entrapped air");
    }
    const double denom = 1.0 - p.aggregate_kg_m3 / p.aggregate_density_kg_m3 - p.entrapped_air;
    if (denom <= 0.0) throw ModelError("papadakis_diffusivity: paste fraction non-positive");
    const double poro = (p.carbonated_porosity - p.entrapped_air) / denom;
    return 6.1e-6 * poro * poro * poro * std::pow(1.0 - rh_percent / 100.0, 2.2);
}

namespace {

double papadakis_binder(const PapadakisConcrete& p) {
    const double b = 0.33 * p.ch_kg_m3 + 0.214 * p.csh_kg_m3;
    if (b <= 0.0) throw DomainError("papadakis: CH and CSH cannot both be zero");
    return b;
}

} // namespace

double papadakis_depth_m(const PapadakisConcrete& p, double co2_percent, double rh_percent,
                         double t_s) {
    if (t_s < 0.0) throw DomainError("papadakis_depth: time must be non-negative");
    if (co2_percent < 0.0) throw DomainError("papadakis_depth: CO2 must be non-negative");
    const double de = papadakis_diffusivity(p, rh_percent);
    return std::sqrt(2.0 * de * (co2_percent / 100.0) * t_s / papadakis_binder(p));
}

double papadakis_tcr_s(const PapadakisConcrete& p, double co2_percent, double rh_percent,
                       double cover_m) {
    if (cover_m < 0.0) throw DomainError("papadakis_tcr: cover must be non-negative");
    const double de = papadakis_diffusivity(p, rh_percent);
    const double denom = 2.0 * de * (co2_percent / 100.0);
    if (denom <= 0.0) throw DomainError("papadakis_tcr: zero transport term");
    return papadakis_binder(p) * cover_m * cover_m / denom;
}

std::optional<double> propagation_morinaga(double cover_mm, double rh_percent) {
    if (cover_mm < 0.0) throw DomainError("propagation_morinaga: cover must be non-negative");
    if (rh_percent <= 0.0 || rh_percent >= 100.0) {
        throw DomainError("propagation_morinaga: RH must be in (0, 100)");
    }
    const double q_c = 65.0 * (rh_percent / 100.0) - 35.0;
    if (q_c <= 0.0) return std::nullopt;
    const double q_cr = 6.0 * std::pow(1.0 + 0.2 * cover_mm, 0.85);
    return q_cr / q_c;
}

double z_carb(double t_cr_s, double t_pr_years) {
    if (t_cr_s < 0.0 || t_pr_years < 0.0) {
        throw DomainError("z_carb: periods must be non-negative");
    }
    return t_cr_s / units::kSecondsPerYearJulian + t_pr_years;
}

} // namespace bridgelife::carbonation
