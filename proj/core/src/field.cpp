#include "bridgelife/field.hpp"

#include <cmath>

namespace bridgelife::field {

std::string to_string(PenetrationClass c) {
    switch (c) {
        case PenetrationClass::Low: return "Low";
        case PenetrationClass::Moderate: return "Moderate";
        case PenetrationClass::High: return "High";
        case PenetrationClass::VeryHigh: return "Very high";
        case PenetrationClass::ExtremelyHigh: return "Extremely high";
    }
    return "";
}

std::string to_string(RemainingLifeBand b) {
    switch (b) {
        case RemainingLifeBand::NoDamage: return "no corrosion damage";
        case RemainingLifeBand::TenToFifteenYears: return "10 to 15 years";
        case RemainingLifeBand::TwoToTenYears: return "2 to 10 years";
        case RemainingLifeBand::LessThanTwoYears: return "less than 2 years";
    }
    return "";
}

double resistivity(const ResistivityMeasurement& m) {
    if (m.resistance_ohm <= 0.0 || m.area_cm2 <= 0.0 || m.distance_cm <= 0.0) {
        throw DomainError("resistivity: R, A, L must be positive");
    }
    return m.resistance_ohm * m.area_cm2 / m.distance_cm;
}

double icorr_from_resistivity(double rho_ohm_cm) {
    if (rho_ohm_cm <= 0.0) throw DomainError("icorr_from_resistivity: rho must be positive");
    return 3e3 / rho_ohm_cm;
}

double icorr_from_lpr(double b_constant, double rp) {
    if (b_constant <= 0.0) throw DomainError("icorr_from_lpr: B must be positive");
    if (rp <= 0.0) throw DomainError("icorr_from_lpr: Rp must be positive");
    return b_constant / rp;
}

double rcm_coefficient(const RcmTestRecord& r) {
    if (r.voltage_v <= 2.0) throw DomainError("rcm_coefficient: U must exceed 2 V");
    if (r.duration_hours <= 0.0) throw DomainError("rcm_coefficient: t must be positive");
    if (r.penetration_mm <= 0.0 || r.penetration_mm > r.thickness_mm) {
        throw DomainError("rcm_coefficient: require 0 < x_d <= L");
    }
    const double tk = 273.0 + r.temperature_c;
    const double bracket =
        r.penetration_mm -
        0.0238 * std::sqrt(tk * r.thickness_mm * r.penetration_mm / (r.voltage_v - 2.0));
    const double d =
        0.0239 * tk * r.thickness_mm / ((r.voltage_v - 2.0) * r.duration_hours) * bracket;
    if (d < 0.0) {
        throw MeasurementError("rcm_coefficient: negative coefficient, measurement inconsistent");
    }
    return d;
}

PenetrationClass classify_penetration(double d_nssm) {
    if (d_nssm < 0.0) throw DomainError("classify_penetration: D_nssm must be non-negative");
    // Boundary values assigned to the lower-resistance (larger-D) class.
    if (d_nssm >= 15.0) return PenetrationClass::Low;
    if (d_nssm >= 10.0) return PenetrationClass::Moderate;
    if (d_nssm >= 5.0) return PenetrationClass::High;
    if (d_nssm >= 2.5) return PenetrationClass::VeryHigh;
    return PenetrationClass::ExtremelyHigh;
}

RemainingLifeBand classify_clear(double icorr) {
    if (icorr < 0.0) throw DomainError("classify_clear: i_corr must be non-negative");
    // Boundaries go to the more severe band.
    if (icorr >= 27.0) return RemainingLifeBand::LessThanTwoYears;
    if (icorr >= 2.7) return RemainingLifeBand::TwoToTenYears;
    if (icorr >= 0.5) return RemainingLifeBand::TenToFifteenYears;
    return RemainingLifeBand::NoDamage;
}

SamplingPlan sampling_plan(double deck_length_ft) {
    if (deck_length_ft <= 0.0) throw DomainError("sampling_plan: deck length must be positive");
    const double dca = 20.0 + (deck_length_ft - 150.0) / 7.0;
    const double cover = 40.0 + (deck_length_ft - 20.0) / 3.0;
    SamplingPlan plan;
    plan.n_dca = std::max(20, static_cast<int>(std::ceil(dca)));
    plan.n_cover = std::max(40, static_cast<int>(std::ceil(cover)));
    return plan;
}

double radiographic_unsharpness(double object_detector_mm, double collimation_ratio) {
    if (collimation_ratio <= 0.0) {
        throw DomainError("radiographic_unsharpness: L/D must be positive");
    }
    if (object_detector_mm < 0.0) {
        throw DomainError("radiographic_unsharpness: l2 must be non-negative");
    }
    return object_detector_mm / collimation_ratio;
}

} // namespace bridgelife::field
