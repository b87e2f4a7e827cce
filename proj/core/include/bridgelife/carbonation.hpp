#pragma once

#include <optional>
#include <string>

#include "bridgelife/errors.hpp"

namespace bridgelife::carbonation {

enum class SurfaceFinish {
    NoLayer,
    Plaster,
    MortarPlusPlaster,
    Mortar,
    MortarPlusPaint,
    Tiles,
    Paint,
};

SurfaceFinish finish_from_string(const std::string& name);

// Finish factor beta; some outdoor entries have no published value and throw.
double finish_beta(SurfaceFinish finish, bool indoor);

struct CarbonationEnvironment {
    double co2_percent = 0.03;
    double rh_percent = 65.0;
    double cover_mm = 25.0;
    int grade = 25;
    double water_cement = 0.5;
    double age_years = 0.0;
    bool indoor = false;
    SurfaceFinish finish = SurfaceFinish::NoLayer;
};

struct PapadakisConcrete {
    double ch_kg_m3 = 0.0;          // calcium hydroxide
    double csh_kg_m3 = 0.0;         // calcium silicate hydrate
    double carbonated_porosity = 0.0;
    double entrapped_air = 0.0;
    double aggregate_kg_m3 = 0.0;
    double aggregate_density_kg_m3 = 1.0;
};

// Time for the carbonation front to cross the remaining cover at a fixed rate.
double tc_hookman(double remaining_cover_mm, double rate_mm_yr);

// Quadratic-in-cover life with caller-supplied coefficients.
double life_coefficient_model(double cover_mm, double k_c, double k_e, double k_a);

// depth = sqrt(2 * Dc * dC * t)
double depth_sqrt_law(double dc, double delta_c, double t);

// Years for the front to reach depth d, using the permeability rate for the grade.
double time_iaea(double cover_mm, int grade);

struct EmpiricalDepth {
    double depth_mm = 0.0;
    bool below_wcr_floor = false; // 4.6x - 1.76 <= 0: no measurable carbonation
};

EmpiricalDepth depth_empirical_wcr(double age_years, double water_cement, SurfaceFinish finish,
                                   bool indoor);

double papadakis_diffusivity(const PapadakisConcrete& p, double rh_percent);

double papadakis_depth_m(const PapadakisConcrete& p, double co2_percent, double rh_percent,
                         double t_s);
double papadakis_tcr_s(const PapadakisConcrete& p, double co2_percent, double rh_percent,
                       double cover_m);

// Propagation period after the front reaches the bar; nullopt when the
// humidity puts the corrosion rate at or below zero.
std::optional<double> propagation_morinaga(double cover_mm, double rh_percent);

// Total life from initiation time in seconds plus propagation in years.
// Uses a 365.25-day year for the seconds conversion.
double z_carb(double t_cr_s, double t_pr_years);

} // namespace bridgelife::carbonation
