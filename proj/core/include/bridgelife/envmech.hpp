#pragma once

#include <optional>

#include "bridgelife/errors.hpp"

namespace bridgelife::envmech {

struct SulfateParams {
    double elastic_modulus_pa = 20e9;
    double stress_per_mole_m3_mol = 1.8e-6;
    double solution_sulfate_mol_m3 = 0.0;
    double reacted_sulfate_mol_m3 = 0.0;
    double diffusion_m2_s = 0.0;
    double roughness = 1.0;
    double fracture_energy_j_m2 = 10.0;
    double poisson_ratio = 0.2;
};

struct FreezeThawParams {
    double equivalence_coefficient = 6.5;
    double lab_cycles = 0.0;          // cycles to limit in the lab test
    double annual_field_cycles = 200.0;
    double water_content = 0.0;
    double unsaturated_pore_content = 0.0;
    double cycles = 0.0;              // N in the annual-degradation form
    double lab_time_to_limit = 0.0;   // T_c
};

struct AsrObservation {
    double rating = 0.0; // 0..6 damage scale at coring
    double placed_years = 0.0;
    double cored_years = 0.0;
};

// Sulfate front advance rate in m/s.
double sulfate_rate(const SulfateParams& p);
double sulfate_rate_mm_yr(const SulfateParams& p);

double freeze_thaw_life(const FreezeThawParams& p);

struct ShumanDegradation {
    double rate_per_year = 0.0;
    bool clamped = false; // raw rate was negative; reported as zero
};

ShumanDegradation freeze_thaw_degradation_shuman(const FreezeThawParams& p);

double asr_rate(const AsrObservation& o);

// Years until the rating reaches the action threshold of 5.0; nullopt when
// the rate is zero (no observed progression, open-ended life).
std::optional<double> asr_years_remaining(const AsrObservation& o);

} // namespace bridgelife::envmech
