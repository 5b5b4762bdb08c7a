// pipeline.cpp

#include "tphonon/pipeline.hpp"

#include <cmath>
#include <numbers>

#include "tphonon/constants.hpp"
#include "tphonon/errors.hpp"
#include "tphonon/io.hpp"

namespace tphonon::pipeline {

SpectrumSummary summarize_spectrum(const cpb::TransmonParams& params, int levels, int ng_points) {
    if (levels < 3) {
        throw ArgumentError("spectrum summary needs at least 3 levels");
    }
    const auto spectrum = cpb::solve_spectrum(params, levels);
    SpectrumSummary out;
    out.params = params;
    out.energies = spectrum.energies;
    out.e01 = spectrum.energies[1] - spectrum.energies[0];
    out.anharmonicity = cpb::relative_anharmonicity(params);
    for (int band = 0; band < levels; ++band) {
        out.dispersion.push_back(cpb::charge_dispersion(params, band, ng_points));
    }
    out.matrix_element = cpb::sin_phi_matrix_element(spectrum, 0, 1);
    out.harmonic_estimate = cpb::harmonic_matrix_element(params.ej_over_ec);
    return out;
}

std::vector<std::vector<double>> band_rows(const cpb::TransmonParams& params, int levels,
                                           int ng_points) {
    if (ng_points < 2) {
        throw ArgumentError("n_g sweep needs at least 2 points");
    }
    std::vector<std::vector<double>> rows;
    cpb::TransmonParams p = params;
    for (int k = 0; k < ng_points; ++k) {
        p.ng = static_cast<double>(k) / (ng_points - 1);
        const auto spectrum = cpb::solve_spectrum(p, levels);
        std::vector<double> row{p.ng};
        row.insert(row.end(), spectrum.energies.begin(), spectrum.energies.end());
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<std::vector<double>> density_rows(const cpb::TransmonParams& params, int levels,
                                              int phi_points) {
    if (phi_points < 2) {
        throw ArgumentError("phi grid needs at least 2 points");
    }
    const auto spectrum = cpb::solve_spectrum(params, levels);
    std::vector<std::vector<double>> rows;
    for (int k = 0; k < phi_points; ++k) {
        const double phi = -std::numbers::pi + 2.0 * std::numbers::pi * k / (phi_points - 1);
        std::vector<double> row{phi};
        for (int level = 0; level < levels; ++level) {
            row.push_back(std::norm(cpb::wavefunction(spectrum, level, phi)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::json to_json(const SpectrumSummary& s) {
    return {
        {"schema", io::kSchemaVersion},
        {"ej_over_ec", s.params.ej_over_ec},
        {"ng", s.params.ng},
        {"cutoff", s.params.cutoff},
        {"energies", {{"value", s.energies}, {"unit", "E_C"}}},
        {"e01", io::quantity(s.e01, "E_C")},
        {"relative_anharmonicity", io::quantity(s.anharmonicity, "dimensionless")},
        {"charge_dispersion", {{"value", s.dispersion}, {"unit", "E_C"}}},
        {"sin_phi_matrix_element",
         {{"re", s.matrix_element.real()},
          {"im", s.matrix_element.imag()},
          {"abs", std::abs(s.matrix_element)},
          {"unit", "dimensionless"}}},
        {"harmonic_matrix_element", io::quantity(s.harmonic_estimate, "dimensionless")},
    };
}

FitRun run_fit(const FitSettings& settings, const fourier::AngularOptions& options) {
    if (settings.samples < 3) {
        throw ArgumentError("fit needs at least 3 samples");
    }
    const auto kRs = fourier::log_spaced(settings.kr_min, settings.kr_max, settings.samples);
    FitRun run;
    for (double kR : kRs) {
        if (kR < kValidatedKrMin || kR > kValidatedKrMax) {
            run.warnings.push_back("sample kR = " + std::to_string(kR) +
                                   " lies outside the validated range [250, 7500]");
        }
    }
    run.samples = fourier::sample_angular_integral(kRs, 1, options);
    run.fit = fourier::fit_log(run.samples);
    return run;
}

nlohmann::json to_json(const FitRun& run) {
    nlohmann::json samples = nlohmann::json::array();
    for (const auto& s : run.samples) {
        samples.push_back({{"kR", s.kR},
                           {"integral", s.integral},
                           {"fit", run.fit.evaluate(s.kR)}});
    }
    return {
        {"schema", io::kSchemaVersion},
        {"polarization", 1},
        {"model", "integral ~= a * ln(b * kR)"},
        {"fit", io::to_json(run.fit)},
        {"samples", samples},
        {"warnings", run.warnings},
    };
}

DephasingReport run_dephasing(const Scenario& scenario, const std::optional<fourier::LogFit>& fit,
                              const spectral::SpectralOptions& options) {
    scenario.validate();
    DephasingReport r;
    r.scenario = scenario.name;
    r.omega = scenario.omega();
    r.fit = fit;
    r.density = spectral::spectral_density_s1(r.omega, scenario.geometry, scenario.bath, fit, options);

    const auto spectrum = cpb::solve_spectrum(scenario.transmon, 2);
    r.matrix_element = cpb::sin_phi_matrix_element(spectrum, 0, 1);

    const double T = scenario.bath.temperature;
    r.occupation = thermal_occupation(r.omega, T);
    r.coth = thermal_coth(r.omega, T);
    r.gamma10 = master::dephasing_rate(r.matrix_element, r.density, r.omega, T);
    if (r.gamma10 > 0.0) {
        r.dephasing_time = 1.0 / r.gamma10;
    }
    r.rates = master::make_rates(r.matrix_element, r.density, r.omega, T);
    r.phonon_wavelength = 2.0 * constants::pi / phonon_wavenumber(r.omega, 1, scenario.bath);
    r.thin_film_valid = scenario.geometry.thin_film_valid(r.phonon_wavelength);
    return r;
}

nlohmann::json to_json(const DephasingReport& r) {
    nlohmann::json doc = {
        {"schema", io::kSchemaVersion},
        {"scenario", r.scenario},
        {"mode", spectral::to_string(r.density.mode)},
        {"omega", io::quantity(r.omega, "rad/s")},
        {"omega_over_2pi", io::quantity(constants::hz_from_angular(r.omega), "Hz")},
        {"kR", io::quantity(r.density.kR, "dimensionless")},
        {"angular_integral", io::quantity(r.density.angular_factor, "dimensionless")},
        {"spectral_prefactor", io::quantity(r.density.prefactor, "J s")},
        {"J1", io::quantity(r.density.J, "J^2 s")},
        {"sin_phi_matrix_element_abs", io::quantity(std::abs(r.matrix_element), "dimensionless")},
        {"thermal_occupation", io::quantity(r.occupation, "dimensionless")},
        {"coth_hbar_omega_over_2kT", io::quantity(r.coth, "dimensionless")},
        {"gamma10", io::quantity(r.gamma10, "1/s")},
        {"gamma_down", io::quantity(r.rates.gamma_down, "1/s")},
        {"gamma_up", io::quantity(r.rates.gamma_up, "1/s")},
        {"phonon_wavelength", io::quantity(r.phonon_wavelength, "m")},
        {"thin_film_valid", r.thin_film_valid},
    };
    if (r.dephasing_time) {
        doc["dephasing_time"] = io::quantity(*r.dephasing_time, "s");
        doc["infinite_dephasing_time"] = false;
    } else {
        doc["dephasing_time"] = {{"value", nullptr}, {"unit", "s"}};
        doc["infinite_dephasing_time"] = true;
    }
    if (r.density.J_other != 0.0) {
        doc["J_other_polarizations"] = io::quantity(r.density.J_other, "J^2 s");
    }
    if (r.fit) {
        doc["provenance"] = {{"source", "log fit"}, {"fit", io::to_json(*r.fit)}};
    } else {
        doc["provenance"] = {{"source", "direct angular quadrature"}};
    }
    return doc;
}

master::QubitState named_state(const std::string& name, double occupation) {
    if (name == "ground") {
        return master::QubitState::ground();
    }
    if (name == "excited") {
        return master::QubitState::excited();
    }
    if (name == "plus") {
        return master::QubitState::plus();
    }
    if (name == "thermal") {
        return master::QubitState::thermal(occupation);
    }
    throw ArgumentError("unknown initial state '" + name +
                        "' (expected ground|excited|plus|thermal)");
}

} // namespace tphonon::pipeline
