// test_cpb_spectrum.cpp — charge-basis spectrum and sin φ matrix elements

#include <doctest.h>

#include <cmath>

#include "tphonon/cpb_spectrum.hpp"
#include "tphonon/errors.hpp"

using namespace tphonon;
using namespace tphonon::cpb;

TEST_CASE("3x3 charge basis matches hand diagonalization") {
    // N = 1, n_g = 0, E_J/E_C = 2: diag (4, 0, 4), off-diagonal -1.
    const auto s = solve_spectrum({2.0, 0.0, 1}, 3);
    CHECK(s.energies[0] == doctest::Approx(2.0 - std::sqrt(6.0)).epsilon(1e-14));
    CHECK(s.energies[1] == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(s.energies[2] == doctest::Approx(2.0 + std::sqrt(6.0)).epsilon(1e-14));
}

TEST_CASE("reference transmon: frozen spectrum and matrix element") {
    const TransmonParams p{49.0, 0.0, 30};
    const auto s = solve_spectrum(p, 3);
    CHECK(s.energies[1] - s.energies[0] == doctest::Approx(18.74021861652585).epsilon(1e-11));
    CHECK(relative_anharmonicity(p) == doctest::Approx(-0.0614394934005803).epsilon(1e-10));
    const auto m = sin_phi_matrix_element(s, 0, 1);
    CHECK(std::abs(m) == doctest::Approx(0.4138096593618211).epsilon(1e-10));
    // With real-positive pivots at n_g = 0 the element is purely imaginary.
    CHECK(std::abs(m.real()) < 1e-12);
    CHECK(std::abs(harmonic_matrix_element(49.0) - 0.4495) < 1e-3);
}

TEST_CASE("ladder and quadrature routes agree") {
    for (double ratio : {1.0, 9.0, 25.0, 49.0, 100.0}) {
        for (double ng : {0.0, 0.2, 0.5}) {
            const auto s = solve_spectrum({ratio, ng, 20}, 4);
            for (int i = 0; i < 4; ++i) {
                for (int j = 0; j < 4; ++j) {
                    const auto a = sin_phi_ladder(s, i, j);
                    const auto b = sin_phi_quadrature(s, i, j, 256);
                    CHECK(std::abs(a - b) < 1e-12);
                }
            }
        }
    }
}

TEST_CASE("sin phi is Hermitian and vanishes on the diagonal at symmetric n_g") {
    const auto s = solve_spectrum({49.0, 0.0, 30}, 4);
    for (int i = 0; i < 4; ++i) {
        CHECK(std::abs(sin_phi_ladder(s, i, i)) < 1e-13);
        for (int j = 0; j < 4; ++j) {
            CHECK(std::abs(sin_phi_ladder(s, i, j) - std::conj(sin_phi_ladder(s, j, i))) < 1e-13);
        }
    }
}

TEST_CASE("wavefunctions are normalized on [-pi, pi]") {
    const auto s = solve_spectrum({25.0, 0.3, 30}, 3);
    const int n = 1024;
    const double h = 2.0 * M_PI / n;
    for (int level = 0; level < 3; ++level) {
        double sum = 0.0;
        for (int k = 0; k < n; ++k) {
            sum += std::norm(wavefunction(s, level, -M_PI + k * h)) * h;
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("n_g periodicity and mirror symmetry") {
    for (double ng : {0.05, 0.17, 0.31, 0.5}) {
        const auto base = solve_spectrum({9.0, ng, 30}, 4).energies;
        const auto shifted = solve_spectrum({9.0, ng + 1.0, 30}, 4).energies;
        const auto mirror = solve_spectrum({9.0, -ng, 30}, 4).energies;
        for (int m = 0; m < 4; ++m) {
            CHECK(std::abs(base[m] - shifted[m]) < 1e-10 * std::max(1.0, std::abs(base[m])));
            CHECK(std::abs(base[m] - mirror[m]) < 1e-10 * std::max(1.0, std::abs(base[m])));
        }
    }
}

TEST_CASE("charge dispersion shrinks with E_J/E_C") {
    double previous = charge_dispersion({1.0, 0.0, 30}, 0);
    for (double ratio : {9.0, 25.0, 49.0}) {
        const double d = charge_dispersion({ratio, 0.0, 30}, 0);
        CHECK(d < previous);
        previous = d;
    }
    // Higher bands disperse more.
    CHECK(charge_dispersion({25.0, 0.0, 30}, 1) > charge_dispersion({25.0, 0.0, 30}, 0));
}

TEST_CASE("zero E_J gives pure charge parabolas") {
    const auto s = solve_spectrum({1e-300, 0.25, 10}, 3);
    CHECK(s.energies[0] == doctest::Approx(4.0 * 0.25 * 0.25));
    CHECK(s.energies[1] == doctest::Approx(4.0 * 0.75 * 0.75));
    CHECK_THROWS_AS(solve_spectrum({0.0, 0.0, 10}, 3), ArgumentError);
}

TEST_CASE("cutoff convergence N=30 vs N=35") {
    for (double ratio : {9.0, 25.0, 49.0}) {
        const auto a = solve_spectrum({ratio, 0.3, 30}, 4).energies;
        const auto b = solve_spectrum({ratio, 0.3, 35}, 4).energies;
        for (int m = 0; m < 4; ++m) {
            CHECK(std::abs(a[m] - b[m]) < 1e-10 * std::max(1.0, std::abs(a[m])));
        }
    }
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(solve_spectrum({49.0, 0.0, 0}, 1), ArgumentError);
    CHECK_THROWS_AS(solve_spectrum({49.0, 0.0, 2}, 6), ArgumentError);
    CHECK_THROWS_AS(solve_spectrum({-1.0, 0.0, 5}, 1), ArgumentError);
    const auto s = solve_spectrum({49.0, 0.0, 5}, 2);
    CHECK_THROWS_AS(sin_phi_ladder(s, 0, 2), ArgumentError);
    CHECK_THROWS_AS(charge_dispersion({49.0, 0.0, 5}, 0, 1), ArgumentError);
}
