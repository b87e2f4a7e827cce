#pragma once

#include <string>
#include <utility>

#include "bridgelife/errors.hpp"

namespace bridgelife::field {

/// Two-electrode resistivity measurement.
struct ResistivityMeasurement {
    double resistance_ohm; // R
    double area_cm2;       // A, cross-sectional area
    double distance_cm;    // L, electrode distance
};

/// Rapid chloride migration (RCM) test record.
struct RcmTestRecord {
    double voltage_v;          // U, applied voltage (absolute value)
    double temperature_c;      // T, mean anolyte temperature
    double thickness_mm;       // L, specimen thickness
    double penetration_mm;     // x_d, mean penetration depth
    double duration_hours;     // t
};

enum class PenetrationClass { Low, Moderate, High, VeryHigh, ExtremelyHigh };

std::string to_string(PenetrationClass c);

/// Remaining-life band from the corrosion-rate table.
enum class RemainingLifeBand { NoDamage, TenToFifteenYears, TwoToTenYears, LessThanTwoYears };

std::string to_string(RemainingLifeBand b);

/// rho = R * A / L, in Ohm-cm.
double resistivity(const ResistivityMeasurement& m);

/// Empirical corrosion rate from resistivity: i_corr = 3e3 / rho (uA/cm2).
double icorr_from_resistivity(double rho_ohm_cm);

/// Linear polarization: i_corr = B / Rp. Unit-agnostic; the result carries
/// units(B)/units(Rp).
double icorr_from_lpr(double b_constant, double rp);

/// Non-steady-state migration coefficient in 1e-12 m2/s.
/// Throws MeasurementError when the bracket goes negative (tiny x_d).
double rcm_coefficient(const RcmTestRecord& r);

/// Threshold lookup on D_nssm (1e-12 m2/s). Boundary values go to the
/// lower-resistance (larger-D) class.
PenetrationClass classify_penetration(double d_nssm);

/// Remaining-life band from i_corr (uA/cm2). Boundaries (0.5, 2.7, 27) go to
/// the more severe band.
RemainingLifeBand classify_clear(double icorr);

struct SamplingPlan {
    int n_dca;   // diffusion-coefficient samples
    int n_cover; // cover-depth measurements
};

/// Deck survey counts from deck length in feet, rounded up and floored at the
/// base counts (20, 40).
SamplingPlan sampling_plan(double deck_length_ft);

/// U_beam = l2 / (L/D).
double radiographic_unsharpness(double object_detector_mm, double collimation_ratio);

} // namespace bridgelife::field
