// spectral_density.hpp — ohmic phonon spectral density of the junction current
//
// J_1(ω) = Σ_k |g_k1|^2 δ(ω_k1 - ω)
//        = (2 m_e^2/e^2) / ((2π)^5 c_T ρ) · I_c^2 · ħω · ∫ d²Ω |j̃_k1|^2
//
// with the angular integral evaluated at kR = ωR/c_T, either live ("direct")
// or through the fitted law a ln(b kR) ("fit"). The quantization volume
// cancels between |g|^2 and the mode density and never appears.

#pragma once

#include <optional>
#include <string>

#include "tphonon/current_fourier.hpp"
#include "tphonon/geometry_bath.hpp"

namespace tphonon::spectral {

enum class Mode { fit, direct };

std::string to_string(Mode mode);
Mode mode_from_string(const std::string& text);

struct SpectralDensityResult {
    double omega{0.0};          // rad/s
    double J{0.0};              // J^2 s
    Mode mode{Mode::fit};
    double kR{0.0};
    double angular_factor{0.0}; // ∫ d²Ω |j̃_k1|^2 (or its fit)
    double prefactor{0.0};      // (2 m_e^2/e^2) I_c^2 / ((2π)^5 c_T ρ), J_1 / (ħω · angular)
    double J_other{0.0};        // s = 2, 3 contribution, only when requested
};

struct SpectralOptions {
    // Debug: add the out-of-plane transverse and longitudinal polarizations
    // by direct quadrature into J_other.
    bool include_other_polarizations{false};
    fourier::AngularOptions angular{};
};

// kR = (ω / c_T) R
double kr_of(double omega, const DeviceGeometry& geom, const BathParams& bath);

// (2 m_e^2/e^2) I_c^2 / ((2π)^5 c_s ρ)
double coupling_prefactor(const DeviceGeometry& geom, const BathParams& bath, int s = 1);

// fit given -> fit mode, with kR required inside the fit range (RangeError
// otherwise); no fit -> direct mode.
SpectralDensityResult spectral_density_s1(double omega, const DeviceGeometry& geom,
                                          const BathParams& bath,
                                          const std::optional<fourier::LogFit>& fit,
                                          const SpectralOptions& options = {});

} // namespace tphonon::spectral
