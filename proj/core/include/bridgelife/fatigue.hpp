#pragma once

#include <string>
#include <vector>

#include "bridgelife/errors.hpp"

namespace bridgelife::fatigue {

// Stress samples in ksi, in time order.
using StressHistory = std::vector<double>;

struct RangeBin {
    double range_ksi = 0.0;
    double cycles = 0.0; // half cycles count as 0.5
};

struct StressRangeHistogram {
    std::vector<RangeBin> bins; // sorted by range, ranges unique

    double total_cycles() const;
    void add(double range_ksi, double cycles);
};

struct DetailConstant {
    double a_ksi3 = 0.0;   // S-N constant, N = A / S^3
    double cafl_ksi = 0.0; // constant-amplitude fatigue limit
    std::string category;
};

enum class CaflPolicy {
    IgnoreBelow,     // ranges below the limit cause no damage
    LineExtension,   // extend the S-N line below the limit
    BelowLimitError, // treat sub-limit ranges as a caller error
};

// Cycles to failure.
double sn_cycles(double c, double b, double stress_range_ksi);
double aashto_sn(double a_ksi3, double stress_range_ksi);

// Reduce a history to its local extrema (plateaus collapsed).
std::vector<double> reversals(const StressHistory& h);

StressRangeHistogram rainflow_count(const StressHistory& h);
StressRangeHistogram simple_range_count(const StressHistory& h);
// Optional counters sharing the histogram interface.
StressRangeHistogram level_crossing_count(const StressHistory& h, double level_spacing,
                                          double reference = 0.0);
StressRangeHistogram peak_count(const StressHistory& h, double reference = 0.0);

double miner_damage(const StressRangeHistogram& hist, const DetailConstant& detail,
                    CaflPolicy policy = CaflPolicy::IgnoreBelow);

double effective_stress_range(const StressRangeHistogram& hist);

// Years of fatigue life left for a detail under truck traffic.
double aashto_remaining_life(double resistance_factor, double a_ksi3, double cycles_per_truck,
                             double aadt_single_lane, double stress_factor,
                             double stress_range_ksi, double current_age_years);

} // namespace bridgelife::fatigue
