#include "bridgelife/units.hpp"

#include <array>

namespace bridgelife::units {
namespace {

struct UnitInfo {
    Dimension dim;
    double to_canonical; // multiplier into the canonical unit of the dimension
};

// Canonical units: mm, s, ksi, cm2/s.
UnitInfo info(Unit u) {
    switch (u) {
        case Unit::Millimeter: return {Dimension::Length, 1.0};
        case Unit::Centimeter: return {Dimension::Length, 10.0};
        case Unit::Meter:      return {Dimension::Length, 1000.0};
        case Unit::Inch:       return {Dimension::Length, 25.4};
        case Unit::Mil:        return {Dimension::Length, 0.0254};
        case Unit::Foot:       return {Dimension::Length, 304.8};
        case Unit::Second:     return {Dimension::Time, 1.0};
        case Unit::Hour:       return {Dimension::Time, 3600.0};
        case Unit::Day:        return {Dimension::Time, 86400.0};
        case Unit::Year:       return {Dimension::Time, kSecondsPerYear};
        case Unit::Ksi:        return {Dimension::Stress, 1.0};
        case Unit::Psi:        return {Dimension::Stress, 1e-3};
        case Unit::Pa:         return {Dimension::Stress, 1.4503773800722e-7};
        case Unit::MPa:        return {Dimension::Stress, 1.4503773800722e-1};
        case Unit::GPa:        return {Dimension::Stress, 1.4503773800722e2};
        case Unit::Cm2PerS:    return {Dimension::Diffusion, 1.0};
        case Unit::M2PerS:     return {Dimension::Diffusion, 1e4};
        case Unit::Mm2PerYear: return {Dimension::Diffusion, 0.01 / kSecondsPerYear};
    }
    throw DomainError("convert: unknown unit");
}

} // namespace

Dimension dimension_of(Unit u) { return info(u).dim; }

double convert(double value, Unit from, Unit to) {
    const UnitInfo f = info(from), t = info(to);
    if (f.dim != t.dim) {
        throw DomainError("convert: incompatible dimensions");
    }
    if (from == to) return value;
    return value * (f.to_canonical / t.to_canonical);
}

std::string rating_label(ConditionRating r) {
    static const std::array<const char*, 10> labels = {
        "FAILED",          "IMMINENT FAILURE", "CRITICAL", "SERIOUS", "POOR",
        "FAIR",            "SATISFACTORY",     "GOOD",     "VERY GOOD",
        "EXCELLENT",
    };
    return labels[static_cast<std::size_t>(r.value())];
}

} // namespace bridgelife::units
