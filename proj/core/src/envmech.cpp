#include "bridgelife/envmech.hpp"

#include <cmath>

#include "bridgelife/units.hpp"

namespace bridgelife::envmech {

double sulfate_rate(const SulfateParams& p) {
    if (p.elastic_modulus_pa <= 0.0 || p.stress_per_mole_m3_mol <= 0.0 || p.roughness <= 0.0 ||
        p.fracture_energy_j_m2 <= 0.0) {
        throw DomainError("sulfate_rate: material parameters must be positive");
    }
    if (p.solution_sulfate_mol_m3 < 0.0 || p.reacted_sulfate_mol_m3 < 0.0 ||
        p.diffusion_m2_s < 0.0) {
        throw DomainError("sulfate_rate: exposure parameters must be non-negative");
    }
    if (p.poisson_ratio < 0.0 || p.poisson_ratio >= 0.5) {
        throw DomainError("sulfate_rate: Poisson ratio must be in [0, 0.5)");
    }
    const double b = p.stress_per_mole_m3_mol;
    return p.elastic_modulus_pa * b * b * p.solution_sulfate_mol_m3 * p.reacted_sulfate_mol_m3 *
           p.diffusion_m2_s / (p.roughness * p.fracture_energy_j_m2 * (1.0 - p.poisson_ratio));
}

double sulfate_rate_mm_yr(const SulfateParams& p) {
    return sulfate_rate(p) * 1e3 * units::kSecondsPerYear;
}

double freeze_thaw_life(const FreezeThawParams& p) {
    if (p.annual_field_cycles <= 0.0) {
        throw DomainError("freeze_thaw_life: annual field cycles must be positive");
    }
    if (p.equivalence_coefficient < 0.0 || p.lab_cycles < 0.0) {
        throw DomainError("freeze_thaw_life: coefficients must be non-negative");
    }
    return p.equivalence_coefficient * p.lab_cycles / p.annual_field_cycles;
}

ShumanDegradation freeze_thaw_degradation_shuman(const FreezeThawParams& p) {
    if (p.water_content <= 0.0) {
        throw DomainError("freeze_thaw_degradation_shuman: water content must be positive");
    }
    if (p.lab_time_to_limit <= 0.0) {
        throw DomainError("freeze_thaw_degradation_shuman: lab time must be positive");
    }
    const double raw = p.cycles / p.lab_time_to_limit *
                       (0.05 / std::sqrt(p.water_content) - 0.21 * p.unsaturated_pore_content);
    if (raw < 0.0) return {0.0, true};
    return {raw, false};
}

namespace {

double asr_elapsed(const AsrObservation& o) {
    if (o.rating < 0.0 || o.rating > 6.0) {
        throw DomainError("asr: rating must be in [0, 6]");
    }
    const double dt = o.cored_years - o.placed_years;
    if (dt <= 0.0) throw DomainError("asr: coring date must follow placement");
    return dt;
}

} // namespace

double asr_rate(const AsrObservation& o) {
    return o.rating / asr_elapsed(o);
}

std::optional<double> asr_years_remaining(const AsrObservation& o) {
    const double rate = asr_rate(o);
    if (o.rating >= 5.0) return 0.0;
    if (rate == 0.0) return std::nullopt;
    return (5.0 - o.rating) / rate;
}

} // namespace bridgelife::envmech
