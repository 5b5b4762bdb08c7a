// tphonon.cpp — batch CLI: spectrum, pattern, fit, dephase, evolve
//
// Every command reads one scenario file and writes CSV/JSON into --out
// (default: the scenario's outputs.dir). Exit codes: 0 ok, 2 bad arguments
// or config, 3 numerical non-convergence, 4 I/O.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tphonon/constants.hpp"
#include "tphonon/errors.hpp"
#include "tphonon/io.hpp"
#include "tphonon/master_equation.hpp"
#include "tphonon/pipeline.hpp"
#include "tphonon/scenario.hpp"

namespace fs = std::filesystem;
using namespace tphonon;

namespace {

struct Common {
    std::string scenario_path;
    std::string out;
    bool seedless{false}; // nothing here draws random numbers; accepted for scripting
};

fs::path output_dir(const Common& c, const Scenario& s) {
    const fs::path dir = c.out.empty() ? fs::path(s.output_dir) : fs::path(c.out);
    io::ensure_directory(dir);
    return dir;
}

// "181x361" -> (181, 361); a bare "N" -> (N, N).
std::pair<int, int> parse_grid(const std::string& text) {
    const auto x = text.find('x');
    try {
        if (x == std::string::npos) {
            const int n = std::stoi(text);
            return {n, n};
        }
        return {std::stoi(text.substr(0, x)), std::stoi(text.substr(x + 1))};
    } catch (const std::exception&) {
        throw ArgumentError("--grid expects N or NxM, got '" + text + "'");
    }
}

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--scenario", c.scenario_path, "scenario file")->required();
    cmd->add_option("--out", c.out, "output directory (default: scenario outputs.dir)");
    cmd->add_flag("--seedless", c.seedless, "assert deterministic run (always true)");
}

// spectrum ------------------------------------------------------------------

struct SpectrumArgs {
    Common common;
    int levels{4};
    int ng_points{101};
    int phi_points{401};
    std::vector<double> ej_over_ec;
};

void run_spectrum(const SpectrumArgs& args) {
    const Scenario s = load_scenario(args.common.scenario_path);
    const fs::path dir = output_dir(args.common, s);
    std::vector<double> ratios = args.ej_over_ec;
    if (ratios.empty()) {
        ratios.push_back(s.transmon.ej_over_ec);
    }
    nlohmann::json summaries = nlohmann::json::array();
    for (double ratio : ratios) {
        cpb::TransmonParams p = s.transmon;
        p.ej_over_ec = ratio;
        p.validate();
        const std::string tag = ratios.size() == 1 ? "" : "_ej" + CLI::detail::to_string(ratio);

        std::vector<std::string> header{"ng"};
        std::vector<std::string> dheader{"phi"};
        for (int m = 0; m < args.levels; ++m) {
            header.push_back("E" + std::to_string(m));
            dheader.push_back("psi" + std::to_string(m) + "_sq");
        }
        io::write_csv(dir / ("bands" + tag + ".csv"), header,
                      pipeline::band_rows(p, args.levels, args.ng_points));
        io::write_csv(dir / ("densities" + tag + ".csv"), dheader,
                      pipeline::density_rows(p, args.levels, args.phi_points));
        summaries.push_back(pipeline::to_json(pipeline::summarize_spectrum(p, args.levels, args.ng_points)));
        const auto& last = summaries.back();
        std::printf("E_J/E_C = %g: E01 = %.6f E_C, anharmonicity = %.5f, |<0|sin phi|1>| = %.6f\n",
                    ratio, last["e01"]["value"].get<double>(),
                    last["relative_anharmonicity"]["value"].get<double>(),
                    last["sin_phi_matrix_element"]["abs"].get<double>());
    }
    nlohmann::json doc = summaries.size() == 1 ? summaries.front()
                                               : nlohmann::json{{"schema", io::kSchemaVersion},
                                                                {"runs", summaries}};
    io::write_json(dir / "spectrum.json", doc);
}

// pattern -------------------------------------------------------------------

struct PatternArgs {
    Common common;
    double kr{5000.0};
    std::string grid{"181x361"};
};

void run_pattern(const PatternArgs& args) {
    const Scenario s = load_scenario(args.common.scenario_path);
    const fs::path dir = output_dir(args.common, s);
    if (!(args.kr > 0.0)) {
        throw ArgumentError("--kr must be positive");
    }
    const auto [n_theta, n_phi] = parse_grid(args.grid);
    const auto samples = fourier::emission_pattern(args.kr, n_theta, n_phi);
    std::vector<std::vector<double>> rows;
    rows.reserve(samples.size());
    double peak = 0.0;
    for (const auto& p : samples) {
        rows.push_back({p.theta, p.phi, p.value});
        peak = std::max(peak, p.value);
    }
    io::write_csv(dir / "pattern.csv", {"theta", "phi", "value"}, rows);
    io::write_json(dir / "pattern.json",
                   {{"schema", io::kSchemaVersion},
                    {"kR", io::quantity(args.kr, "dimensionless")},
                    {"quantity", "|j1(k)|^2"},
                    {"n_theta", n_theta},
                    {"n_phi", n_phi},
                    {"peak", io::quantity(peak, "dimensionless")},
                    {"csv", "pattern.csv"}});
    std::printf("pattern at kR = %g: %zu samples, peak %.6g\n", args.kr, samples.size(), peak);
}

// fit -----------------------------------------------------------------------

struct FitArgs {
    Common common;
    std::optional<double> kr_min;
    std::optional<double> kr_max;
    std::optional<int> samples;
    double rel_tol{1e-6};
};

FitSettings fit_settings(const Scenario& s, const FitArgs& args) {
    FitSettings f = s.fit;
    if (args.kr_min) f.kr_min = *args.kr_min;
    if (args.kr_max) f.kr_max = *args.kr_max;
    if (args.samples) f.samples = *args.samples;
    if (!(f.kr_min > 0.0 && f.kr_max > f.kr_min)) {
        throw ArgumentError("fit range needs 0 < kr_min < kr_max");
    }
    return f;
}

void run_fit_cmd(const FitArgs& args) {
    const Scenario s = load_scenario(args.common.scenario_path);
    const fs::path dir = output_dir(args.common, s);
    fourier::AngularOptions opts;
    opts.rel_tol = args.rel_tol;
    const auto run = pipeline::run_fit(fit_settings(s, args), opts);
    io::write_json(dir / "fit.json", pipeline::to_json(run));
    for (const auto& w : run.warnings) {
        std::fprintf(stderr, "warning: %s\n", w.c_str());
    }
    std::printf("a = %.6f, b = %.6f over kR in [%g, %g], rms residual %.3g\n", run.fit.a,
                run.fit.b, run.fit.kr_min, run.fit.kr_max, run.fit.residual);
}

// dephase -------------------------------------------------------------------

struct DephaseArgs {
    Common common;
    std::string mode{"fit"};
    std::string fit_file;
    bool other_polarizations{false};
};

std::optional<fourier::LogFit> resolve_fit(const DephaseArgs& args, const Scenario& s,
                                           const fs::path& dir) {
    if (spectral::mode_from_string(args.mode) == spectral::Mode::direct) {
        return std::nullopt;
    }
    if (!args.fit_file.empty()) {
        return io::log_fit_from_json(io::read_json(args.fit_file));
    }
    const fs::path cached = dir / "fit.json";
    if (fs::exists(cached)) {
        auto fit = io::log_fit_from_json(io::read_json(cached));
        const double kR = spectral::kr_of(s.omega(), s.geometry, s.bath);
        if (fit.contains(kR)) {
            return fit;
        }
    }
    std::fprintf(stderr, "computing log fit over kR in [%g, %g] (%d samples)\n", s.fit.kr_min,
                 s.fit.kr_max, s.fit.samples);
    const auto run = pipeline::run_fit(s.fit);
    io::write_json(cached, pipeline::to_json(run));
    return run.fit;
}

void run_dephase(const DephaseArgs& args) {
    const Scenario s = load_scenario(args.common.scenario_path);
    const fs::path dir = output_dir(args.common, s);
    const auto fit = resolve_fit(args, s, dir);
    spectral::SpectralOptions opts;
    opts.include_other_polarizations = args.other_polarizations;
    const auto report = pipeline::run_dephasing(s, fit, opts);
    io::write_json(dir / "dephase.json", pipeline::to_json(report));
    if (report.dephasing_time) {
        std::printf("%s: kR = %.1f, J1 = %.4g J^2 s, Gamma10 = %.4g 1/s, 1/Gamma10 = %.4g s\n",
                    s.name.c_str(), report.density.kR, report.density.J, report.gamma10,
                    *report.dephasing_time);
    } else {
        std::printf("%s: Gamma10 = 0, dephasing time infinite\n", s.name.c_str());
    }
}

// evolve --------------------------------------------------------------------

struct EvolveArgs {
    Common common;
    std::string initial{"plus"};
    std::string mode{"fit"};
    std::string fit_file;
    std::optional<double> duration; // default 5 / Γ10
    std::optional<double> dt;       // default: 0.01 / max rate
    long stride{100};
};

void run_evolve(const EvolveArgs& args) {
    const Scenario s = load_scenario(args.common.scenario_path);
    const fs::path dir = output_dir(args.common, s);
    DephaseArgs d;
    d.common = args.common;
    d.mode = args.mode;
    d.fit_file = args.fit_file;
    const auto report = pipeline::run_dephasing(s, resolve_fit(d, s, dir));
    const auto& rates = report.rates;
    const double max_rate = rates.max_rate();
    if (max_rate == 0.0 && (!args.duration || !args.dt)) {
        throw ArgumentError("all rates vanish; pass explicit --duration and --dt");
    }
    const double duration = args.duration.value_or(5.0 / max_rate);
    const double dt = args.dt.value_or(0.01 / max_rate);
    if (!(duration > 0.0) || !(dt > 0.0)) {
        throw ArgumentError("--duration and --dt must be positive");
    }
    const long steps = static_cast<long>(std::ceil(duration / dt));
    master::EvolveOptions opts;
    opts.stride = args.stride;
    const auto initial = pipeline::named_state(args.initial, report.occupation);
    const auto traj = master::evolve(initial, rates, dt, steps, opts);

    std::vector<std::vector<double>> rows;
    rows.reserve(traj.size());
    for (const auto& p : traj) {
        rows.push_back({p.t, p.state.rho00, p.state.rho11, p.state.rho01.real(), p.state.rho01.imag()});
    }
    io::write_csv(dir / "trajectory.csv", {"t", "rho00", "rho11", "re_rho01", "im_rho01"}, rows);

    nlohmann::json doc = {
        {"schema", io::kSchemaVersion},
        {"scenario", s.name},
        {"initial", args.initial},
        {"dt", io::quantity(dt, "s")},
        {"steps", steps},
        {"gamma_down", io::quantity(rates.gamma_down, "1/s")},
        {"gamma_up", io::quantity(rates.gamma_up, "1/s")},
        {"gamma10", io::quantity(rates.gamma_phi, "1/s")},
        {"final", {{"rho00", traj.back().state.rho00}, {"rho11", traj.back().state.rho11}}},
    };
    if (std::abs(initial.rho01) > 0.0 && rates.gamma_phi > 0.0) {
        const double fitted = master::fit_coherence_decay(traj);
        doc["fitted_coherence_decay"] = io::quantity(fitted, "1/s");
        doc["relative_deviation_from_gamma10"] = fitted / rates.gamma_phi - 1.0;
        std::printf("fitted coherence decay %.6g 1/s vs Gamma10 %.6g 1/s\n", fitted, rates.gamma_phi);
    }
    io::write_json(dir / "evolve.json", doc);
    std::printf("%ld steps of %.4g s written to %s\n", steps, dt, (dir / "trajectory.csv").c_str());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"tphonon: phonon-induced decoherence of a transmon"};
    app.require_subcommand(1);

    SpectrumArgs spectrum;
    auto* c_spec = app.add_subcommand("spectrum", "band structure, wavefunctions, matrix element");
    add_common(c_spec, spectrum.common);
    c_spec->add_option("--levels", spectrum.levels, "number of bands")->check(CLI::Range(3, 64));
    c_spec->add_option("--grid", spectrum.ng_points, "n_g grid points on [0, 1]")->check(CLI::Range(2, 100000));
    c_spec->add_option("--phi-points", spectrum.phi_points, "phi grid points on [-pi, pi]")->check(CLI::Range(2, 100000));
    c_spec->add_option("--ej-over-ec", spectrum.ej_over_ec, "override E_J/E_C (repeatable)");

    PatternArgs pattern;
    auto* c_pat = app.add_subcommand("pattern", "|j1|^2 emission pattern on a (theta, phi) grid");
    add_common(c_pat, pattern.common);
    c_pat->add_option("--kr", pattern.kr, "kR")->capture_default_str();
    c_pat->add_option("--grid", pattern.grid, "NthetaxNphi, e.g. 181x361")->capture_default_str();

    FitArgs fit;
    auto* c_fit = app.add_subcommand("fit", "log-law fit of the s=1 angular integral");
    add_common(c_fit, fit.common);
    c_fit->add_option("--kr-min", fit.kr_min);
    c_fit->add_option("--kr-max", fit.kr_max);
    c_fit->add_option("--samples", fit.samples);
    c_fit->add_option("--rel-tol", fit.rel_tol, "angular quadrature tolerance")->capture_default_str();

    DephaseArgs dephase;
    auto* c_dep = app.add_subcommand("dephase", "spectral density and dephasing rate");
    add_common(c_dep, dephase.common);
    c_dep->add_option("--mode", dephase.mode, "fit|direct")->capture_default_str()->check(CLI::IsMember({"fit", "direct"}));
    c_dep->add_option("--fit-file", dephase.fit_file, "fit JSON from `fit`");
    c_dep->add_flag("--other-polarizations", dephase.other_polarizations,
                    "also report the s=2,3 contribution (diagnostic)");

    EvolveArgs evolve;
    auto* c_ev = app.add_subcommand("evolve", "master-equation trajectory");
    add_common(c_ev, evolve.common);
    c_ev->add_option("--initial", evolve.initial, "ground|excited|plus|thermal")->capture_default_str()
        ->check(CLI::IsMember({"ground", "excited", "plus", "thermal"}));
    c_ev->add_option("--mode", evolve.mode, "fit|direct")->capture_default_str()->check(CLI::IsMember({"fit", "direct"}));
    c_ev->add_option("--fit-file", evolve.fit_file);
    c_ev->add_option("--duration", evolve.duration, "seconds (default 5/max rate)");
    c_ev->add_option("--dt", evolve.dt, "seconds (default 0.01/max rate)");
    c_ev->add_option("--stride", evolve.stride, "record every n-th step")->capture_default_str()->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_code::argument;
    }

    try {
        if (*c_spec) run_spectrum(spectrum);
        if (*c_pat) run_pattern(pattern);
        if (*c_fit) run_fit_cmd(fit);
        if (*c_dep) run_dephase(dephase);
        if (*c_ev) run_evolve(evolve);
    } catch (const ArgumentError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code::argument;
    } catch (const ConvergenceError& e) {
        std::cerr << "convergence error: " << e.what() << '\n';
        return exit_code::convergence;
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return exit_code::io;
    }
    return 0;
}
