#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bridgelife/errors.hpp"

namespace bridgelife::units {

// Canonical units used across the library: lengths in mm, cover depth in mm,
// time in years (365-day), corrosion current density in uA/cm2, chloride
// concentration in kg/m3, diffusion coefficients in cm2/s, stress in ksi,
// temperature in degrees C. Formulas that demand seconds convert internally.
inline constexpr double kSecondsPerYear = 3.1536e7;        // 365-day year
inline constexpr double kSecondsPerYearJulian = 31557600.0; // 365.25-day year (carbonation life sum)

enum class Dimension { Length, Time, Stress, Diffusion };

enum class Unit {
    Millimeter, Centimeter, Meter, Inch, Mil, Foot,
    Second, Hour, Day, Year,
    Ksi, Psi, Pa, MPa, GPa,
    Cm2PerS, M2PerS, Mm2PerYear,
};

Dimension dimension_of(Unit u);

/// Exact linear conversion by the declared factors. Throws DomainError for
/// dimensionally incompatible units.
double convert(double value, Unit from, Unit to);

/// NBI condition rating, integer 0..9 (9 = excellent, 0 = failed).
class ConditionRating {
public:
    explicit ConditionRating(int value) : value_(value) {
        if (value < 0 || value > 9) {
            throw DomainError("ConditionRating: value " + std::to_string(value) +
                              " outside 0..9");
        }
    }
    int value() const { return value_; }
    friend bool operator==(ConditionRating a, ConditionRating b) {
        return a.value_ == b.value_;
    }

private:
    int value_;
};

/// NBI condition text for a rating.
std::string rating_label(ConditionRating r);

/// Remaining life R = T - t. May be negative; callers interpret <= 0 as expired.
inline double remaining_life(double total_life_years, double age_years) {
    return total_life_years - age_years;
}

/// Three-stage mechanistic service life. `total` is t1+t2+t3 when all stages
/// are finite; `no_initiation` marks an open-ended life (threshold never
/// reached), in which case total is unset.
struct ServiceLifeBreakdown {
    std::optional<double> t1_years;
    std::optional<double> t2_years;
    std::optional<double> t3_years;
    std::optional<double> total_years;
    std::vector<std::string> model_ids;
    bool no_initiation = false;
};

/// One bridge-inventory row.
struct BridgeRecord {
    std::string structure_id;
    std::string district;
    std::string county;
    int year_built = 0;
    double aadt = 0.0;
    std::string design_load;
    std::string span_type;
    double skew_degrees = 0.0;
    double structure_length_ft = 0.0;
    double deck_width_ft = 0.0;
    int structural_eval = 0; // NBI item 67, 0..9
    int inspection_year = 0;

    int age_at_inspection() const { return inspection_year - year_built; }
};

} // namespace bridgelife::units
