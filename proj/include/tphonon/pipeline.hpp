// pipeline.hpp — end-to-end computations behind the CLI subcommands

#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tphonon/cpb_spectrum.hpp"
#include "tphonon/current_fourier.hpp"
#include "tphonon/master_equation.hpp"
#include "tphonon/scenario.hpp"
#include "tphonon/spectral_density.hpp"

namespace tphonon::pipeline {

// kR range over which the log law was established; fits outside it are
// allowed but flagged.
inline constexpr double kValidatedKrMin = 250.0;
inline constexpr double kValidatedKrMax = 7500.0;

struct SpectrumSummary {
    cpb::TransmonParams params;
    std::vector<double> energies;    // units of E_C
    double e01{0.0};
    double anharmonicity{0.0};
    std::vector<double> dispersion;  // per band
    std::complex<double> matrix_element;
    double harmonic_estimate{0.0};
};

SpectrumSummary summarize_spectrum(const cpb::TransmonParams& params, int levels, int ng_points);

// Rows of (n_g, E_0, ..., E_{levels-1}) over a uniform grid on [0, 1].
std::vector<std::vector<double>> band_rows(const cpb::TransmonParams& params, int levels,
                                           int ng_points);

// Rows of (φ, |ψ_0|^2, ..., |ψ_{levels-1}|^2) over [-π, π].
std::vector<std::vector<double>> density_rows(const cpb::TransmonParams& params, int levels,
                                              int phi_points);

nlohmann::json to_json(const SpectrumSummary& summary);

struct FitRun {
    fourier::LogFit fit;
    std::vector<fourier::FitSample> samples;
    std::vector<std::string> warnings;
};

FitRun run_fit(const FitSettings& settings, const fourier::AngularOptions& options = {});
nlohmann::json to_json(const FitRun& run);

struct DephasingReport {
    std::string scenario;
    double omega{0.0};
    spectral::SpectralDensityResult density;
    std::optional<fourier::LogFit> fit;
    std::complex<double> matrix_element;
    double occupation{0.0};
    double coth{1.0};
    double gamma10{0.0};
    std::optional<double> dephasing_time; // empty when Γ_10 = 0
    double phonon_wavelength{0.0};
    bool thin_film_valid{false};
    master::RateSet rates;
};

// Fit mode when a fit is supplied, direct quadrature otherwise.
DephasingReport run_dephasing(const Scenario& scenario, const std::optional<fourier::LogFit>& fit,
                              const spectral::SpectralOptions& options = {});
nlohmann::json to_json(const DephasingReport& report);

// ground | excited | plus | thermal
master::QubitState named_state(const std::string& name, double occupation);

} // namespace tphonon::pipeline
