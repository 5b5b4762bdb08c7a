// test_spectral_density.cpp — ohmic J_1(ω) in fit and direct modes

#include <doctest.h>

#include <cmath>

#include "tphonon/constants.hpp"
#include "tphonon/errors.hpp"
#include "tphonon/spectral_density.hpp"

using namespace tphonon;
using namespace tphonon::spectral;

namespace {

fourier::LogFit reference_fit() {
    return {496.09965822678436, 1.1629381914291632, 250.0, 7500.0, 0.003};
}

const double kOmega = 2.0 * constants::pi * 4e9;

} // namespace

TEST_CASE("kR and prefactor of the reference device") {
    const DeviceGeometry g{};
    const BathParams b{};
    CHECK(kr_of(kOmega, g, b) == doctest::Approx(2.0 * constants::pi * 1000.0).epsilon(1e-14));
    // 2 (m_e/e)^2 I_c^2 / ((2π)^5 c_T ρ), evaluated by hand
    const double me_e = 9.1093837015e-31 / 1.602176634e-19;
    const double expected = 2.0 * me_e * me_e * 4e-16 / (9792.629913129005 * 1600.0 * 8570.0);
    CHECK(coupling_prefactor(g, b) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("fit mode: J_1 = prefactor * ħω * a ln(b kR)") {
    const DeviceGeometry g{};
    const BathParams b{};
    const auto r = spectral_density_s1(kOmega, g, b, reference_fit());
    CHECK(r.mode == Mode::fit);
    const double kR = 2.0 * constants::pi * 1000.0;
    const double angular = 496.09965822678436 * std::log(1.1629381914291632 * kR);
    CHECK(r.angular_factor == doctest::Approx(angular).epsilon(1e-14));
    CHECK(r.J == doctest::Approx(r.prefactor * constants::hbar * kOmega * angular).epsilon(1e-14));
    CHECK(r.J == doctest::Approx(2.2529688247e-69).epsilon(1e-8));
}

TEST_CASE("direct and fit modes agree inside the fit window") {
    const DeviceGeometry g{};
    const BathParams b{};
    const auto fit = spectral_density_s1(kOmega, g, b, reference_fit());
    const auto direct = spectral_density_s1(kOmega, g, b, std::nullopt);
    CHECK(direct.mode == Mode::direct);
    CHECK(direct.angular_factor == doctest::Approx(4413.5913).epsilon(1e-6));
    CHECK(direct.J == doctest::Approx(fit.J).epsilon(1e-5));
}

TEST_CASE("scaling: I_c^2, and ω ln(kR) at fixed geometry") {
    const BathParams b{};
    DeviceGeometry g{};
    const auto base = spectral_density_s1(kOmega, g, b, reference_fit());
    g.critical_current *= 10.0;
    const auto strong = spectral_density_s1(kOmega, g, b, reference_fit());
    CHECK(strong.J / base.J == doctest::Approx(100.0).epsilon(1e-13));

    g = DeviceGeometry{};
    const auto halved = spectral_density_s1(0.5 * kOmega, g, b, reference_fit());
    const auto fit = reference_fit();
    const double ratio = 0.5 * fit.evaluate(0.5 * base.kR) / fit.evaluate(base.kR);
    CHECK(halved.J / base.J == doctest::Approx(ratio).epsilon(1e-13));
}

TEST_CASE("edges: ω = 0, I_c = 0, kR outside the fit window") {
    const BathParams b{};
    DeviceGeometry g{};
    CHECK(spectral_density_s1(0.0, g, b, reference_fit()).J == 0.0);
    CHECK_THROWS_AS(spectral_density_s1(10.0 * kOmega, g, b, reference_fit()), RangeError);
    CHECK_THROWS_AS(spectral_density_s1(-1.0, g, b, reference_fit()), ArgumentError);
    g.critical_current = 0.0;
    CHECK(spectral_density_s1(kOmega, g, b, reference_fit()).J == 0.0);
}

TEST_CASE("other polarizations are a small correction") {
    const DeviceGeometry g{};
    const BathParams b{};
    SpectralOptions opts;
    opts.include_other_polarizations = true;
    const auto r = spectral_density_s1(kOmega, g, b, reference_fit(), opts);
    CHECK(r.J_other > 0.0);
    CHECK(r.J_other < 0.1 * r.J);
}

TEST_CASE("mode strings") {
    CHECK(mode_from_string("fit") == Mode::fit);
    CHECK(mode_from_string("direct") == Mode::direct);
    CHECK(to_string(Mode::direct) == "direct");
    CHECK_THROWS_AS(mode_from_string("exact"), ArgumentError);
}
