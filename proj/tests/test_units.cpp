#include <doctest.h>

#include "bridgelife/units.hpp"

using namespace bridgelife;
using units::Unit;

TEST_CASE("length conversions") {
    CHECK(units::convert(1.0, Unit::Meter, Unit::Millimeter) == doctest::Approx(1000.0));
    CHECK(units::convert(1.0, Unit::Inch, Unit::Millimeter) == doctest::Approx(25.4));
    CHECK(units::convert(1.0, Unit::Mil, Unit::Millimeter) == doctest::Approx(0.0254));
    CHECK(units::convert(4.9, Unit::Mil, Unit::Millimeter) == doctest::Approx(0.12446));
    CHECK(units::convert(1.0, Unit::Foot, Unit::Inch) == doctest::Approx(12.0));
}

TEST_CASE("time conversions use a 365-day year") {
    CHECK(units::convert(1.0, Unit::Year, Unit::Second) == doctest::Approx(3.1536e7));
    CHECK(units::convert(1.0, Unit::Year, Unit::Day) == doctest::Approx(365.0));
    CHECK(units::kSecondsPerYearJulian == doctest::Approx(31557600.0));
}

TEST_CASE("stress and diffusion conversions") {
    CHECK(units::convert(1.0, Unit::Ksi, Unit::Psi) == doctest::Approx(1000.0));
    CHECK(units::convert(1.0, Unit::MPa, Unit::Pa) == doctest::Approx(1e6));
    CHECK(units::convert(1.0, Unit::Ksi, Unit::MPa) == doctest::Approx(6.894757).epsilon(1e-5));
    CHECK(units::convert(1.0, Unit::M2PerS, Unit::Cm2PerS) == doctest::Approx(1e4));
    CHECK(units::convert(1.0, Unit::Cm2PerS, Unit::Mm2PerYear) ==
          doctest::Approx(100.0 * 3.1536e7));
}

TEST_CASE("incompatible dimensions are rejected") {
    CHECK_THROWS_AS((void)units::convert(1.0, Unit::Meter, Unit::Second), DomainError);
    CHECK_THROWS_AS((void)units::convert(1.0, Unit::Ksi, Unit::Cm2PerS), DomainError);
}

TEST_CASE("condition rating bounds and labels") {
    CHECK_THROWS_AS(units::ConditionRating(-1), DomainError);
    CHECK_THROWS_AS(units::ConditionRating(10), DomainError);
    CHECK(units::rating_label(units::ConditionRating(9)) == "EXCELLENT");
    CHECK(units::rating_label(units::ConditionRating(0)) == "FAILED");
    CHECK(units::rating_label(units::ConditionRating(4)) == "POOR");
}

TEST_CASE("remaining life is total minus age") {
    CHECK(units::remaining_life(75.0, 40.0) == doctest::Approx(35.0));
    CHECK(units::remaining_life(30.0, 45.0) == doctest::Approx(-15.0));
}
