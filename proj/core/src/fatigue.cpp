#include "bridgelife/fatigue.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace bridgelife::fatigue {

double StressRangeHistogram::total_cycles() const {
    double n = 0.0;
    for (const auto& b : bins) n += b.cycles;
    return n;
}

void StressRangeHistogram::add(double range_ksi, double cycles) {
    if (range_ksi <= 0.0 || cycles <= 0.0) return;
    auto it = std::lower_bound(bins.begin(), bins.end(), range_ksi,
                               [](const RangeBin& b, double r) { return b.range_ksi < r; });
    if (it != bins.end() && it->range_ksi == range_ksi) {
        it->cycles += cycles;
    } else {
        bins.insert(it, {range_ksi, cycles});
    }
}

double sn_cycles(double c, double b, double stress_range_ksi) {
    if (stress_range_ksi <= 0.0) throw DomainError("sn_cycles: stress range must be positive");
    if (c <= 0.0) throw DomainError("sn_cycles: constant must be positive");
    return c * std::pow(stress_range_ksi, b);
}

double aashto_sn(double a_ksi3, double stress_range_ksi) {
    return sn_cycles(a_ksi3, -3.0, stress_range_ksi);
}

std::vector<double> reversals(const StressHistory& h) {
    if (h.size() < 2) throw DomainError("cycle counting needs at least two samples");
    std::vector<double> out;
    for (double v : h) {
        if (!std::isfinite(v)) throw DomainError("cycle counting: non-finite sample");
        if (!out.empty() && v == out.back()) continue; // plateau
        if (out.size() >= 2) {
            const double a = out[out.size() - 2];
            const double b = out.back();
            if ((b - a) * (v - b) > 0.0) out.back() = v; // still monotone: extend
            else out.push_back(v);
        } else {
            out.push_back(v);
        }
    }
    return out;
}

StressRangeHistogram rainflow_count(const StressHistory& h) {
    const std::vector<double> rev = reversals(h);
    StressRangeHistogram hist;
    if (rev.size() < 2) return hist; // constant history

    // Three-point method: closed cycles counted as full cycles, everything
    // left on the stack at the end as half cycles.
    std::vector<double> stack;
    std::size_t next = 0;
    while (next < rev.size()) {
        stack.push_back(rev[next++]);
        while (stack.size() >= 3) {
            const std::size_t k = stack.size();
            const double x = std::fabs(stack[k - 1] - stack[k - 2]);
            const double y = std::fabs(stack[k - 2] - stack[k - 3]);
            if (x < y) break;
            if (stack.size() == 3) {
                // Range Y contains the starting point: half cycle, and the
                // start moves to the second point of Y.
                hist.add(y, 0.5);
                stack.erase(stack.begin());
            } else {
                hist.add(y, 1.0);
                stack.erase(stack.end() - 3, stack.end() - 1);
            }
        }
    }
    for (std::size_t i = 0; i + 1 < stack.size(); ++i) {
        hist.add(std::fabs(stack[i + 1] - stack[i]), 0.5);
    }
    return hist;
}

StressRangeHistogram simple_range_count(const StressHistory& h) {
    const std::vector<double> rev = reversals(h);
    StressRangeHistogram hist;
    for (std::size_t i = 0; i + 1 < rev.size(); ++i) {
        hist.add(std::fabs(rev[i + 1] - rev[i]), 0.5);
    }
    return hist;
}

StressRangeHistogram level_crossing_count(const StressHistory& h, double level_spacing,
                                          double reference) {
    if (level_spacing <= 0.0) throw DomainError("level_crossing_count: spacing must be positive");
    const std::vector<double> rev = reversals(h);
    StressRangeHistogram hist;
    if (rev.size() < 2) return hist;

    // Crossing counts per level index: upward crossings at levels at or above
    // the reference, downward crossings below it.
    std::map<long, long> crossings;
    for (std::size_t i = 0; i + 1 < rev.size(); ++i) {
        const double lo = std::min(rev[i], rev[i + 1]);
        const double hi = std::max(rev[i], rev[i + 1]);
        const bool upward = rev[i + 1] > rev[i];
        const long first = static_cast<long>(std::ceil((lo - reference) / level_spacing));
        const long last = static_cast<long>(std::floor((hi - reference) / level_spacing));
        for (long lv = first; lv <= last; ++lv) {
            const bool counted = (lv >= 0) ? upward : !upward;
            if (counted) ++crossings[lv];
        }
    }
    // Build the largest possible cycles from contiguous runs of remaining
    // crossings.
    while (!crossings.empty()) {
        auto it = crossings.begin();
        long run_lo = it->first;
        long run_hi = run_lo;
        for (++it; it != crossings.end() && it->first == run_hi + 1; ++it) run_hi = it->first;
        const double range = (run_hi - run_lo + 1) * level_spacing;
        hist.add(range, 1.0);
        for (long lv = run_lo; lv <= run_hi; ++lv) {
            auto c = crossings.find(lv);
            if (--(c->second) == 0) crossings.erase(c);
        }
    }
    return hist;
}

StressRangeHistogram peak_count(const StressHistory& h, double reference) {
    const std::vector<double> rev = reversals(h);
    StressRangeHistogram hist;
    if (rev.size() < 2) return hist;

    std::vector<double> peaks;   // maxima above the reference
    std::vector<double> valleys; // minima below it
    for (std::size_t i = 1; i + 1 < rev.size(); ++i) {
        const bool is_peak = rev[i] > rev[i - 1];
        if (is_peak && rev[i] > reference) peaks.push_back(rev[i]);
        if (!is_peak && rev[i] < reference) valleys.push_back(rev[i]);
    }
    std::sort(peaks.rbegin(), peaks.rend());
    std::sort(valleys.begin(), valleys.end());
    // Largest peak pairs with the lowest valley, and so on down.
    const std::size_t paired = std::min(peaks.size(), valleys.size());
    for (std::size_t i = 0; i < paired; ++i) hist.add(peaks[i] - valleys[i], 1.0);
    for (std::size_t i = paired; i < peaks.size(); ++i) {
        hist.add(peaks[i] - reference, 0.5);
    }
    for (std::size_t i = paired; i < valleys.size(); ++i) {
        hist.add(reference - valleys[i], 0.5);
    }
    return hist;
}

double miner_damage(const StressRangeHistogram& hist, const DetailConstant& detail,
                    CaflPolicy policy) {
    if (detail.a_ksi3 <= 0.0) throw DomainError("miner_damage: detail constant must be positive");
    double d = 0.0;
    for (const auto& b : hist.bins) {
        if (b.range_ksi <= 0.0) throw DomainError("miner_damage: stress ranges must be positive");
        if (b.range_ksi < detail.cafl_ksi) {
            if (policy == CaflPolicy::IgnoreBelow) continue;
            if (policy == CaflPolicy::BelowLimitError) {
                throw DomainError("miner_damage: stress range below the fatigue limit");
            }
        }
        d += b.cycles / aashto_sn(detail.a_ksi3, b.range_ksi);
    }
    return d;
}

double effective_stress_range(const StressRangeHistogram& hist) {
    const double n_total = hist.total_cycles();
    if (n_total <= 0.0) throw DomainError("effective_stress_range: empty histogram");
    double s3 = 0.0;
    for (const auto& b : hist.bins) {
        s3 += b.cycles / n_total * b.range_ksi * b.range_ksi * b.range_ksi;
    }
    return std::cbrt(s3);
}

double aashto_remaining_life(double resistance_factor, double a_ksi3, double cycles_per_truck,
                             double aadt_single_lane, double stress_factor,
                             double stress_range_ksi, double current_age_years) {
    if (resistance_factor <= 0.0 || a_ksi3 <= 0.0 || cycles_per_truck <= 0.0 ||
        aadt_single_lane <= 0.0 || stress_factor <= 0.0 || stress_range_ksi <= 0.0) {
        throw DomainError("aashto_remaining_life: parameters must be positive");
    }
    if (current_age_years < 0.0) {
        throw DomainError("aashto_remaining_life: age must be non-negative");
    }
    const double s = stress_factor * stress_range_ksi;
    return resistance_factor * a_ksi3 / (365.0 * cycles_per_truck * aadt_single_lane * s * s * s) -
           current_age_years;
}

} // namespace bridgelife::fatigue
