#include <doctest.h>

#include "bridgelife/envmech.hpp"

using namespace bridgelife;
using namespace bridgelife::envmech;

namespace {

SulfateParams sulfate_case() {
    SulfateParams p;
    p.solution_sulfate_mol_m3 = 10.0;
    p.reacted_sulfate_mol_m3 = 500.0;
    p.diffusion_m2_s = 1e-12;
    return p;
}

} // namespace

TEST_CASE("sulfate front advance rate") {
    // Frozen oracle from an independent evaluation.
    CHECK(sulfate_rate(sulfate_case()) == doctest::Approx(4.05e-11).epsilon(1e-12));
    CHECK(sulfate_rate_mm_yr(sulfate_case()) ==
          doctest::Approx(1.2772079999999997).epsilon(1e-12));

    SulfateParams p = sulfate_case();
    p.solution_sulfate_mol_m3 = 0.0;
    CHECK(sulfate_rate(p) == doctest::Approx(0.0));

    // Linear in the diffusivity.
    p = sulfate_case();
    p.diffusion_m2_s *= 3.0;
    CHECK(sulfate_rate(p) == doctest::Approx(3.0 * sulfate_rate(sulfate_case())).epsilon(1e-12));

    // Separable: scaling both sulfate terms multiplies the rate by the product.
    p = sulfate_case();
    p.solution_sulfate_mol_m3 *= 2.0;
    p.reacted_sulfate_mol_m3 *= 5.0;
    CHECK(sulfate_rate(p) == doctest::Approx(10.0 * sulfate_rate(sulfate_case())).epsilon(1e-12));

    p = sulfate_case();
    p.poisson_ratio = 0.5;
    CHECK_THROWS_AS((void)sulfate_rate(p), DomainError);
    p = sulfate_case();
    p.fracture_energy_j_m2 = 0.0;
    CHECK_THROWS_AS((void)sulfate_rate(p), DomainError);
}

TEST_CASE("freeze-thaw lab-to-field life") {
    FreezeThawParams p;
    p.lab_cycles = 300.0;
    CHECK(freeze_thaw_life(p) == doctest::Approx(9.75));
    p.lab_cycles = 0.0;
    CHECK(freeze_thaw_life(p) == doctest::Approx(0.0));
    p.lab_cycles = 300.0;
    p.annual_field_cycles = 100.0;
    CHECK(freeze_thaw_life(p) == doctest::Approx(19.5));
    p.annual_field_cycles = 0.0;
    CHECK_THROWS_AS((void)freeze_thaw_life(p), DomainError);
}

TEST_CASE("freeze-thaw annual degradation rate") {
    FreezeThawParams p;
    p.cycles = 300.0;
    p.lab_time_to_limit = 300.0;
    p.water_content = 0.25;
    p.unsaturated_pore_content = 0.2;
    const auto d = freeze_thaw_degradation_shuman(p);
    CHECK(d.rate_per_year == doctest::Approx(0.058).epsilon(1e-12));
    CHECK_FALSE(d.clamped);

    // Enough unsaturated pore volume drives the raw rate negative: clamp to 0.
    p.unsaturated_pore_content = 1.0;
    const auto c = freeze_thaw_degradation_shuman(p);
    CHECK(c.rate_per_year == 0.0);
    CHECK(c.clamped);

    p.water_content = 0.0;
    CHECK_THROWS_AS((void)freeze_thaw_degradation_shuman(p), DomainError);
}

TEST_CASE("alkali-silica damage rate and remaining life") {
    AsrObservation o;
    o.rating = 2.5;
    o.placed_years = 1990.0;
    o.cored_years = 2000.0;
    CHECK(asr_rate(o) == doctest::Approx(0.25));
    const auto rem = asr_years_remaining(o);
    REQUIRE(rem.has_value());
    CHECK(*rem == doctest::Approx(10.0));

    o.rating = 5.0;
    CHECK(*asr_years_remaining(o) == doctest::Approx(0.0));
    o.rating = 6.0;
    CHECK(*asr_years_remaining(o) == doctest::Approx(0.0));

    o.rating = 0.0;
    CHECK_FALSE(asr_years_remaining(o).has_value());

    o.cored_years = o.placed_years;
    CHECK_THROWS_AS((void)asr_rate(o), DomainError);
    o.cored_years = 2000.0;
    o.rating = 7.0;
    CHECK_THROWS_AS((void)asr_rate(o), DomainError);
}
