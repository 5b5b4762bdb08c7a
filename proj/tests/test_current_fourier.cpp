// test_current_fourier.cpp — Fourier transform of the junction current and its angular integrals

#include <doctest.h>

#include <chrono>
#include <cmath>
#include <random>
#include <vector>

#include "tphonon/current_fourier.hpp"
#include "tphonon/errors.hpp"

using namespace tphonon;
using namespace tphonon::fourier;

TEST_CASE("closed form: frozen value and forward limit") {
    CHECK(jtilde_s1(5000.0, {M_PI / 4, 0.0}) ==
          doctest::Approx(-8.886282692661425).epsilon(1e-13));
    CHECK(jtilde_s1(300.0, {0.0, 0.4}) == doctest::Approx(-4.0 * 300.0 * std::cos(0.4)));
    CHECK(jtilde_s1(300.0, {1e-9, 0.4}) ==
          doctest::Approx(-4.0 * 300.0 * std::cos(0.4)).epsilon(1e-9));
    // Along the junction axis the in-plane transverse component vanishes.
    CHECK(std::abs(jtilde_s1(300.0, {1.0, M_PI / 2})) < 1e-12);
}

TEST_CASE("closed form and series agree with brute-force quadrature") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 6; ++i) {
        const double kR = 10.0 + 300.0 * u(rng);
        const Direction d{std::acos(2.0 * u(rng) - 1.0), 2.0 * M_PI * u(rng)};
        const auto b1 = jtilde_bruteforce(kR, d, 1);
        CHECK(std::abs(b1.imag()) < 1e-8 * kR);
        CHECK(std::abs(jtilde_s1(kR, d) - b1.real()) < 1e-6 * std::max(std::abs(b1.real()), 1e-3 * kR));
        for (int s : {2, 3}) {
            const auto bs = jtilde_bruteforce(kR, d, s);
            const double series = jtilde(kR, d, s);
            CHECK(std::abs(series - bs.real()) < 1e-6 * std::max(std::abs(bs.real()), 1e-3 * kR));
        }
    }
}

TEST_CASE("series: extension vs literal truncation") {
    const Direction d{1.0, 1.0};
    const auto extended = jtilde_s23(500.0, d, 3);
    CHECK(extended.value.real() == doctest::Approx(-0.20391828782136417).epsilon(1e-11));
    CHECK(extended.max_order > kDefaultSeriesOrder);
    const auto literal = jtilde_s23(500.0, d, 3, kDefaultSeriesOrder, false);
    CHECK(literal.max_order == kDefaultSeriesOrder);
    CHECK(literal.value.real() == doctest::Approx(-0.2080722027982994).epsilon(1e-10));
    // Inside the Bessel-transition region the literal cut is already exact.
    const auto small = jtilde_s23(100.0, d, 2, kDefaultSeriesOrder, false);
    CHECK(std::abs(small.value - jtilde_s23(100.0, d, 2).value) < 1e-13);
}

TEST_CASE("series: pole and equator limits") {
    CHECK(jtilde(400.0, {M_PI / 2, 0.3}, 2) == 0.0);
    CHECK(std::isfinite(jtilde(400.0, {0.0, 0.3}, 2)));
    CHECK(jtilde(400.0, {0.0, 0.3}, 3) == 0.0);
}

TEST_CASE("emission pattern grid") {
    const auto p = emission_pattern(5000.0, 5, 8);
    CHECK(p.size() == 40);
    CHECK(p.front().theta == 0.0);
    CHECK(p.back().theta == doctest::Approx(M_PI));
    CHECK(p[0].value == doctest::Approx(16.0 * 5000.0 * 5000.0));
    for (const auto& s : p) {
        CHECK(s.value >= 0.0);
    }
    CHECK_THROWS_AS(emission_pattern(5000.0, 1, 8), ArgumentError);
    CHECK_THROWS_AS(emission_pattern(5000.0, 8, 1), ArgumentError);
    CHECK_THROWS_AS(emission_pattern(-1.0, 8, 8), ArgumentError);
}

TEST_CASE("azimuthal quadrant reduction matches the full circle") {
    for (double kR : {50.0, 700.0}) {
        for (double theta : {0.3, 1.1, 2.0}) {
            double full = 0.0;
            const int n = 20000;
            for (int k = 0; k < n; ++k) { // periodic trapezoid: spectrally accurate
                const double j = jtilde_s1(kR, {theta, 2.0 * M_PI * k / n});
                full += j * j;
            }
            full *= 2.0 * M_PI / n;
            CHECK(azimuthal_integral(kR, theta, 1) == doctest::Approx(full).epsilon(1e-8));
        }
    }
}

TEST_CASE("orthogonality collapse for s = 2, 3 matches the direct circle") {
    const double kR = 120.0;
    for (int s : {2, 3}) {
        for (double theta : {0.4, 1.3}) {
            double full = 0.0;
            const int n = 4096;
            for (int k = 0; k < n; ++k) {
                const double j = jtilde(kR, {theta, 2.0 * M_PI * k / n}, s);
                full += j * j;
            }
            full *= 2.0 * M_PI / n;
            CHECK(azimuthal_integral(kR, theta, s) == doctest::Approx(full).epsilon(1e-10));
        }
    }
}

TEST_CASE("s = 1 angular integral: frozen values") {
    const std::vector<std::pair<double, double>> ref{
        {250.0, 2814.0881909333084},
        {1000.0, 3501.8198134063437},
        {7500.0, 4501.414642141364},
        {62831.85307, 5555.905429609319},
    };
    for (const auto& [kR, value] : ref) {
        CHECK(angular_integral(kR, 1) == doctest::Approx(value).epsilon(1e-8));
    }
}

TEST_CASE("s = 1 reduced form agrees with the full sphere") {
    for (double kR : {60.0, 250.0}) {
        CHECK(angular_integral(kR, 1) ==
              doctest::Approx(angular_integral_sphere(kR, 1)).epsilon(1e-6));
    }
}

TEST_CASE("s = 2, 3 angular integrals: frozen values") {
    CHECK(angular_integral(250.0, 2) == doctest::Approx(210.485432955991).epsilon(1e-6));
    CHECK(angular_integral(1000.0, 2) == doctest::Approx(211.22889651379035).epsilon(1e-6));
    CHECK(angular_integral(250.0, 3) == doctest::Approx(0.9815574612668752).epsilon(1e-6));
    CHECK(angular_integral(1000.0, 3) == doctest::Approx(0.24392682550347175).epsilon(1e-6));
}

TEST_CASE("angular integral domain") {
    CHECK_THROWS_AS(angular_integral(1.0, 1), ArgumentError);
    CHECK_THROWS_AS(angular_integral(1e6, 1), ArgumentError);
    CHECK_THROWS_AS(angular_integral(500.0, 4), ArgumentError);
}

TEST_CASE("log fit recovers a synthetic law exactly") {
    std::vector<FitSample> samples;
    for (double kR : log_spaced(250.0, 7500.0, 12)) {
        samples.push_back({kR, 10.0 * std::log(2.0 * kR)});
    }
    const auto fit = fit_log(samples);
    CHECK(fit.a == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(fit.b == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(fit.residual < 1e-10);
    CHECK(fit.kr_min == doctest::Approx(250.0));
    CHECK(fit.kr_max == doctest::Approx(7500.0));
    CHECK(fit.contains(1000.0));
    CHECK_FALSE(fit.contains(8000.0));
    CHECK(fit.evaluate(500.0) == doctest::Approx(10.0 * std::log(1000.0)));
}

TEST_CASE("log fit rejects degenerate inputs") {
    std::vector<FitSample> two{{250.0, 1.0}, {7500.0, 2.0}};
    CHECK_THROWS_AS(fit_log(two), ArgumentError);
    std::vector<FitSample> narrow{{250.0, 1.0}, {260.0, 2.0}, {270.0, 3.0}};
    CHECK_THROWS_AS(fit_log(narrow), ArgumentError);
    std::vector<FitSample> falling{{250.0, 3.0}, {2500.0, 2.0}, {25000.0, 1.0}};
    CHECK_THROWS_AS(fit_log(falling), ConvergenceError);
}

TEST_CASE("log_spaced endpoints and ordering") {
    const auto v = log_spaced(250.0, 7500.0, 12);
    REQUIRE(v.size() == 12);
    CHECK(v.front() == 250.0);
    CHECK(v.back() == 7500.0);
    for (std::size_t i = 1; i < v.size(); ++i) {
        CHECK(v[i] / v[i - 1] == doctest::Approx(std::pow(30.0, 1.0 / 11.0)));
    }
}

TEST_CASE("concurrent sampling preserves input order and values") {
    const std::vector<double> kRs{7500.0, 250.0, 1000.0};
    const auto out = sample_angular_integral(kRs, 1);
    REQUIRE(out.size() == 3);
    for (std::size_t i = 0; i < kRs.size(); ++i) {
        CHECK(out[i].kR == kRs[i]);
        CHECK(out[i].integral == angular_integral(kRs[i], 1));
    }
}
