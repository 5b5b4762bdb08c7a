// spectral_density.cpp

#include "tphonon/spectral_density.hpp"

#include <cmath>

#include "tphonon/constants.hpp"
#include "tphonon/errors.hpp"

namespace tphonon::spectral {

std::string to_string(Mode mode) {
    return mode == Mode::fit ? "fit" : "direct";
}

Mode mode_from_string(const std::string& text) {
    if (text == "fit") {
        return Mode::fit;
    }
    if (text == "direct") {
        return Mode::direct;
    }
    throw ArgumentError("unknown spectral density mode '" + text + "' (expected fit|direct)");
}

double kr_of(double omega, const DeviceGeometry& geom, const BathParams& bath) {
    if (!(omega >= 0.0)) {
        throw ArgumentError("kR needs omega >= 0");
    }
    return phonon_wavenumber(omega, 1, bath) * geom.radius;
}

double coupling_prefactor(const DeviceGeometry& geom, const BathParams& bath, int s) {
    using namespace constants;
    const double mass_over_charge = electron_mass / elementary_charge;
    const double two_pi_5 = std::pow(2.0 * pi, 5);
    return 2.0 * mass_over_charge * mass_over_charge * geom.critical_current *
           geom.critical_current / (two_pi_5 * bath.sound_speed(s) * bath.mass_density);
}

SpectralDensityResult spectral_density_s1(double omega, const DeviceGeometry& geom,
                                          const BathParams& bath,
                                          const std::optional<fourier::LogFit>& fit,
                                          const SpectralOptions& options) {
    geom.validate();
    bath.validate();
    if (!(omega >= 0.0) || !std::isfinite(omega)) {
        throw ArgumentError("spectral density needs a finite omega >= 0");
    }

    SpectralDensityResult out;
    out.omega = omega;
    out.mode = fit ? Mode::fit : Mode::direct;
    out.kR = kr_of(omega, geom, bath);
    out.prefactor = coupling_prefactor(geom, bath, 1);
    if (omega == 0.0) {
        return out;
    }

    if (fit) {
        if (!fit->contains(out.kR)) {
            throw RangeError("kR = " + std::to_string(out.kR) + " lies outside the log-fit range [" +
                             std::to_string(fit->kr_min) + ", " + std::to_string(fit->kr_max) +
                             "]; refit over a range that covers it or use direct mode");
        }
        out.angular_factor = fit->evaluate(out.kR);
    } else {
        out.angular_factor = fourier::angular_integral(out.kR, 1, options.angular);
    }
    const double hbar_omega = constants::hbar * omega;
    out.J = out.prefactor * hbar_omega * out.angular_factor;

    if (options.include_other_polarizations) {
        for (int s = 2; s <= 3; ++s) {
            const double kR_s = phonon_wavenumber(omega, s, bath) * geom.radius;
            out.J_other += coupling_prefactor(geom, bath, s) * hbar_omega *
                           fourier::angular_integral(kR_s, s, options.angular);
        }
    }
    return out;
}

} // namespace tphonon::spectral
