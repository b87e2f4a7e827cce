#include <doctest.h>

#include <cmath>
#include <random>

#include "bridgelife/fatigue.hpp"

using namespace bridgelife;
using namespace bridgelife::fatigue;

namespace {

double bin_cycles(const StressRangeHistogram& h, double range) {
    for (const auto& b : h.bins) {
        if (std::fabs(b.range_ksi - range) < 1e-12) return b.cycles;
    }
    return 0.0;
}

double cube_sum(const StressRangeHistogram& h) {
    double s = 0.0;
    for (const auto& b : h.bins) s += b.cycles * b.range_ksi * b.range_ksi * b.range_ksi;
    return s;
}

} // namespace

TEST_CASE("S-N curve evaluation") {
    CHECK(sn_cycles(1e10, -3.0, 10.0) == doctest::Approx(1e7));
    CHECK(aashto_sn(1e10, 10.0) == doctest::Approx(1e7));
    // Cube law: halving the range gives eight times the life.
    CHECK(aashto_sn(1e10, 5.0) == doctest::Approx(8e7));
    CHECK_THROWS_AS((void)sn_cycles(1e10, -3.0, 0.0), DomainError);
    CHECK_THROWS_AS((void)sn_cycles(0.0, -3.0, 10.0), DomainError);
}

TEST_CASE("history reduction to reversals") {
    const StressHistory h{0.0, 1.0, 1.0, 2.0, 3.0, 1.0, 1.0, 4.0};
    const auto rev = reversals(h);
    CHECK(rev == std::vector<double>{0.0, 3.0, 1.0, 4.0});
    CHECK_THROWS_AS((void)reversals(StressHistory{1.0}), DomainError);
}

TEST_CASE("rainflow cycle counting") {
    // Fixture traced by hand against the three-point procedure.
    const StressHistory h{-2.0, 1.0, -3.0, 5.0, -1.0, 3.0, -4.0, 4.0, -2.0};
    const auto hist = rainflow_count(h);
    CHECK(bin_cycles(hist, 3.0) == doctest::Approx(0.5));
    CHECK(bin_cycles(hist, 4.0) == doctest::Approx(1.5));
    CHECK(bin_cycles(hist, 6.0) == doctest::Approx(0.5));
    CHECK(bin_cycles(hist, 8.0) == doctest::Approx(1.0));
    CHECK(bin_cycles(hist, 9.0) == doctest::Approx(0.5));
    CHECK(hist.total_cycles() == doctest::Approx(4.0));

    const auto closed = rainflow_count(StressHistory{0.0, 2.0, 0.0});
    CHECK(bin_cycles(closed, 2.0) == doctest::Approx(1.0));
    CHECK(closed.total_cycles() == doctest::Approx(1.0));

    const auto ramp = rainflow_count(StressHistory{0.0, 1.0, 2.0, 3.0});
    CHECK(bin_cycles(ramp, 3.0) == doctest::Approx(0.5));
    CHECK(ramp.total_cycles() == doctest::Approx(0.5));

    // Pure nested ranges: everything stays open, all half cycles.
    const auto nested = rainflow_count(StressHistory{0.0, 5.0, 1.0, 4.0, 2.0, 3.0, 2.5});
    for (double r : {0.5, 1.0, 2.0, 3.0, 4.0, 5.0}) {
        CHECK(bin_cycles(nested, r) == doctest::Approx(0.5));
    }
    CHECK(nested.total_cycles() == doctest::Approx(3.0));
}

TEST_CASE("simple range counting") {
    const auto hist = simple_range_count(StressHistory{0.0, 2.0, 0.0});
    CHECK(bin_cycles(hist, 2.0) == doctest::Approx(1.0));

    // Each pair of adjacent reversals contributes half a cycle.
    const StressHistory h{-2.0, 1.0, -3.0, 5.0, -1.0, 3.0, -4.0, 4.0, -2.0};
    const auto sr = simple_range_count(h);
    CHECK(sr.total_cycles() == doctest::Approx(0.5 * (reversals(h).size() - 1)));

    // Rainflow and simple range counting close the same total stress reversal:
    // identical cube sums are not guaranteed, but totals match.
    CHECK(rainflow_count(h).total_cycles() == doctest::Approx(sr.total_cycles()));
}

TEST_CASE("rainflow cube sum never below simple range cube sum") {
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    for (int k = 0; k < 200; ++k) {
        StressHistory h(20);
        for (auto& v : h) v = u(rng);
        const double rf = cube_sum(rainflow_count(h));
        const double sr = cube_sum(simple_range_count(h));
        CHECK(rf >= sr - 1e-9);
    }
}

TEST_CASE("level crossing and peak counting") {
    const StressHistory h{0.0, 3.0, -2.0, 2.0, -3.0, 1.0, 0.0};
    const auto lc = level_crossing_count(h, 1.0);
    // Largest cycle consumes the full contiguous run of crossed levels
    // (seven levels at unit spacing), then 5 and 2 from what remains.
    CHECK(bin_cycles(lc, 7.0) == doctest::Approx(1.0));
    CHECK(bin_cycles(lc, 5.0) == doctest::Approx(1.0));
    CHECK(bin_cycles(lc, 2.0) == doctest::Approx(1.0));
    CHECK(lc.total_cycles() == doctest::Approx(3.0));
    CHECK_THROWS_AS((void)level_crossing_count(h, 0.0), DomainError);

    const auto pk = peak_count(h);
    // Largest peak pairs with the deepest valley; the unpaired peak at 1
    // becomes a half cycle against the reference.
    CHECK(bin_cycles(pk, 6.0) == doctest::Approx(1.0));
    CHECK(bin_cycles(pk, 4.0) == doctest::Approx(1.0));
    CHECK(bin_cycles(pk, 1.0) == doctest::Approx(0.5));
    CHECK(pk.total_cycles() == doctest::Approx(2.5));
}

TEST_CASE("cumulative damage") {
    DetailConstant detail{1e10, 5.0, "test"};
    StressRangeHistogram hist;
    hist.add(10.0, 1e7); // exactly the life at 10 ksi
    CHECK(miner_damage(hist, detail) == doctest::Approx(1.0).epsilon(1e-12));
    hist.bins.clear();
    hist.add(10.0, 5e6);
    CHECK(miner_damage(hist, detail) == doctest::Approx(0.5).epsilon(1e-12));

    // Additivity over bins.
    StressRangeHistogram a, b, both;
    a.add(10.0, 1e6);
    b.add(20.0, 1e5);
    both.add(10.0, 1e6);
    both.add(20.0, 1e5);
    CHECK(miner_damage(both, detail) ==
          doctest::Approx(miner_damage(a, detail) + miner_damage(b, detail)).epsilon(1e-12));

    // Sub-limit ranges: skipped, extended, or rejected depending on policy.
    StressRangeHistogram low;
    low.add(2.0, 1e6);
    CHECK(miner_damage(low, detail, CaflPolicy::IgnoreBelow) == doctest::Approx(0.0));
    CHECK(miner_damage(low, detail, CaflPolicy::LineExtension) ==
          doctest::Approx(1e6 / aashto_sn(1e10, 2.0)).epsilon(1e-12));
    CHECK_THROWS_AS((void)miner_damage(low, detail, CaflPolicy::BelowLimitError), DomainError);
}

TEST_CASE("effective stress range") {
    StressRangeHistogram hist;
    hist.add(2.0, 100.0);
    hist.add(4.0, 100.0);
    CHECK(effective_stress_range(hist) == doctest::Approx(std::cbrt(36.0)).epsilon(1e-12));
    CHECK(effective_stress_range(hist) == doctest::Approx(3.3019272488946263).epsilon(1e-12));

    // Constant spectrum reproduces the range itself; result lies inside the
    // range bounds in general.
    StressRangeHistogram flat;
    flat.add(7.5, 123.0);
    CHECK(effective_stress_range(flat) == doctest::Approx(7.5).epsilon(1e-12));
    CHECK(effective_stress_range(hist) >= 2.0);
    CHECK(effective_stress_range(hist) <= 4.0);
    CHECK_THROWS_AS((void)effective_stress_range(StressRangeHistogram{}), DomainError);
}

TEST_CASE("truck-traffic remaining fatigue life") {
    CHECK(aashto_remaining_life(1.0, 1e10, 1.0, 1000.0, 1.0, 6.0, 0.0) ==
          doctest::Approx(126.83916793505834).epsilon(1e-12));
    // Halving traffic doubles the pre-age life.
    CHECK(aashto_remaining_life(1.0, 1e10, 1.0, 500.0, 1.0, 6.0, 0.0) ==
          doctest::Approx(2.0 * 126.83916793505834).epsilon(1e-12));
    // An old enough detail has negative remaining life.
    CHECK(aashto_remaining_life(1.0, 1e10, 1.0, 1000.0, 1.0, 6.0, 200.0) ==
          doctest::Approx(126.83916793505834 - 200.0).epsilon(1e-12));
    CHECK_THROWS_AS((void)aashto_remaining_life(1.0, 1e10, 1.0, 0.0, 1.0, 6.0, 0.0), DomainError);
}
