#include <doctest.h>

#include <cmath>
#include <initializer_list>

#include "bridgelife/errors.hpp"
#include "bridgelife/specialfn.hpp"

using namespace bridgelife;

namespace {

// Slow, high-precision series: erf(x) = (2/sqrt(pi)) e^{-x^2}
// sum 2^n x^{2n+1} / (1*3*...*(2n+1)). All terms positive, no cancellation.
long double erf_series(long double x) {
    const long double sign = x < 0 ? -1.0L : 1.0L;
    x = std::fabs(x);
    long double term = x;
    long double sum = x;
    for (int n = 1; n < 500; ++n) {
        term *= 2.0L * x * x / (2.0L * n + 1.0L);
        sum += term;
        if (term < 1e-25L * sum) break;
    }
    const long double two_over_sqrt_pi = 1.1283791670955125738961589031L;
    return sign * two_over_sqrt_pi * std::exp(-x * x) * sum;
}

} // namespace

TEST_CASE("erf matches the series oracle on a dense grid") {
    for (int k = 0; k <= 1000; ++k) {
        const double x = 4.0 * k / 1000.0;
        const double want = static_cast<double>(erf_series(x));
        CHECK(std::fabs(specialfn::erf(x) - want) <= 1e-10);
        CHECK(std::fabs(specialfn::erf(-x) + want) <= 1e-10);
    }
}

TEST_CASE("erf anchors and erfc complement") {
    CHECK(specialfn::erf(0.0) == 0.0);
    CHECK(specialfn::erf(6.0) == doctest::Approx(1.0).epsilon(1e-12));
    for (double x : {0.1, 0.5, 1.0, 2.0, 3.5, 5.0}) {
        CHECK(specialfn::erf(x) + specialfn::erfc(x) == doctest::Approx(1.0).epsilon(1e-13));
    }
    // erfc keeps precision in the far tail where 1 - erf would not.
    CHECK(specialfn::erfc(5.0) == doctest::Approx(1.5374597944280349e-12).epsilon(1e-9));
}

TEST_CASE("erf_inv inverts erf") {
    for (int k = -99; k <= 99; ++k) {
        const double y = k / 100.0;
        const double x = specialfn::erf_inv(y);
        CHECK(specialfn::erf(x) == doctest::Approx(y).epsilon(1e-12));
    }
    CHECK(specialfn::erf_inv(0.0) == 0.0);
    CHECK_THROWS_AS((void)specialfn::erf_inv(1.0), DomainError);
    CHECK_THROWS_AS((void)specialfn::erf_inv(-1.0), DomainError);
}

TEST_CASE("gamma function") {
    CHECK(specialfn::gamma(0.5) == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-12));
    CHECK(specialfn::gamma(1.0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(specialfn::gamma(5.0) == doctest::Approx(24.0).epsilon(1e-12));
    for (double x : {0.1, 0.7, 1.3, 2.5, 7.9, 21.0, 80.0}) {
        CHECK(specialfn::gamma(x) == doctest::Approx(std::tgamma(x)).epsilon(1e-10));
        CHECK(specialfn::log_gamma(x) == doctest::Approx(std::lgamma(x)).epsilon(1e-10));
    }
    CHECK(specialfn::log_gamma(200.5) == doctest::Approx(std::lgamma(200.5)).epsilon(1e-12));
}
