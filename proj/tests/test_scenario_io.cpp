// test_scenario_io.cpp — scenario parsing, CSV/JSON round trips, pipeline reports

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "tphonon/errors.hpp"
#include "tphonon/io.hpp"
#include "tphonon/pipeline.hpp"
#include "tphonon/scenario.hpp"

using namespace tphonon;
namespace fs = std::filesystem;

namespace {

const char* kMinimal = R"(
name: minimal
omega_over_2pi_hz: 4.0e9
transmon: {ej_over_ec: 49}
geometry: {radius_m: 4.0e-4, critical_current_a: 20.0e-9}
bath: {mass_density_kg_m3: 8570, c_transverse_m_s: 1600, temperature_k: 0.01}
)";

fs::path scratch_dir(const std::string& tag) {
    const auto dir = fs::temp_directory_path() / ("tphonon_test_" + tag);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

} // namespace

TEST_CASE("shipped scenarios parse") {
    const auto ibm = load_scenario(fs::path(TPHONON_SCENARIOS) / "ibm.scenario");
    CHECK(ibm.name == "ibm");
    CHECK(ibm.transmon.ej_over_ec == 49.0);
    CHECK(ibm.geometry.radius == 4e-4);
    CHECK(ibm.geometry.critical_current == 20e-9);
    CHECK(ibm.bath.temperature == 0.01);
    CHECK(ibm.omega_over_2pi == 4e9);
    CHECK(ibm.fit.samples == 12);
    const auto x10 = load_scenario(fs::path(TPHONON_SCENARIOS) / "ibm_x10.scenario");
    CHECK(x10.omega_over_2pi == 4e10);
    CHECK(x10.geometry.critical_current == 200e-9);
    CHECK(x10.fit.kr_max >= 62832.0);
}

TEST_CASE("defaults fill optional keys") {
    const auto s = parse_scenario(kMinimal);
    CHECK(s.transmon.cutoff == 30);
    CHECK(s.transmon.ng == 0.0);
    CHECK(s.geometry.thickness == 50e-9);
    CHECK(s.bath.c_longitudinal == 5100.0);
    CHECK(s.fit.kr_min == 250.0);
    CHECK(s.fit.kr_max == 7500.0);
}

TEST_CASE("malformed scenarios are argument errors") {
    CHECK_THROWS_AS(parse_scenario("name: [unclosed"), ArgumentError);
    CHECK_THROWS_AS(parse_scenario(std::string(kMinimal) + "colour: blue\n"), ArgumentError);
    CHECK_THROWS_AS(parse_scenario("omega_over_2pi_hz: 4e9\n"), ArgumentError);
    std::string bad = kMinimal;
    bad.replace(bad.find("4.0e9"), 5, "-4e9");
    CHECK_THROWS_AS(parse_scenario(bad), ArgumentError);
    std::string wrong_type = kMinimal;
    wrong_type.replace(wrong_type.find("49"), 2, "lots");
    CHECK_THROWS_AS(parse_scenario(wrong_type), ArgumentError);
    CHECK_THROWS_AS(load_scenario("/nonexistent/file.scenario"), IoError);
}

TEST_CASE("CSV layout: header, LF, round-trip precision") {
    const auto dir = scratch_dir("csv");
    io::write_csv(dir / "t.csv", {"a", "b"}, {{0.1, 1.0 / 3.0}, {-2.5e-300, 7.0}});
    std::ifstream in(dir / "t.csv", std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    CHECK(text.find('\r') == std::string::npos);
    CHECK(text.rfind("a,b\n", 0) == 0);
    double a = 0.0;
    double b = 0.0;
    CHECK(std::sscanf(text.c_str() + 4, "%lf,%lf", &a, &b) == 2);
    CHECK(a == 0.1);
    CHECK(b == 1.0 / 3.0);
    // parent "directory" is a regular file
    CHECK_THROWS_AS(io::write_csv(dir / "t.csv" / "u.csv", {"a"}, {}), IoError);
}

TEST_CASE("log fit JSON round trip, bare or embedded") {
    const fourier::LogFit fit{496.1, 1.163, 250.0, 7500.0, 0.003};
    const auto doc = io::to_json(fit);
    const auto back = io::log_fit_from_json(doc);
    CHECK(back.a == fit.a);
    CHECK(back.b == fit.b);
    CHECK(back.kr_max == fit.kr_max);
    const auto embedded = io::log_fit_from_json(nlohmann::json{{"schema", 1}, {"fit", doc}});
    CHECK(embedded.kr_min == fit.kr_min);
    CHECK_THROWS_AS(io::log_fit_from_json(nlohmann::json{{"a", 1.0}}), ArgumentError);
    CHECK_THROWS_AS(io::read_json("/nonexistent.json"), IoError);
}

TEST_CASE("dephasing report: units, provenance, null dephasing time") {
    auto s = parse_scenario(kMinimal);
    const fourier::LogFit fit{496.09965822678436, 1.1629381914291632, 250.0, 7500.0, 0.003};
    const auto report = pipeline::run_dephasing(s, fit);
    const auto doc = pipeline::to_json(report);
    CHECK(doc["schema"] == 1);
    CHECK(doc["mode"] == "fit");
    CHECK(doc["gamma10"]["unit"] == "1/s");
    CHECK(doc["dephasing_time"]["unit"] == "s");
    CHECK(doc["provenance"]["source"] == "log fit");
    CHECK(doc["thin_film_valid"] == true);
    CHECK(doc["dephasing_time"]["value"].get<double>() == doctest::Approx(9.1758).epsilon(1e-4));

    s.geometry.critical_current = 0.0;
    const auto silent = pipeline::to_json(pipeline::run_dephasing(s, fit));
    CHECK(silent["dephasing_time"]["value"].is_null());
    CHECK(silent["infinite_dephasing_time"] == true);
}

TEST_CASE("fit run flags samples outside the validated window") {
    FitSettings settings{150.0, 7500.0, 6};
    const auto run = pipeline::run_fit(settings);
    CHECK(run.warnings.size() == 1);
    const auto doc = pipeline::to_json(run);
    CHECK(doc["samples"].size() == 6);
    CHECK(doc["warnings"].size() == 1);
    CHECK(run.fit.a == doctest::Approx(496.1).epsilon(0.01));
}

TEST_CASE("spectrum summary and tables") {
    const cpb::TransmonParams p{49.0, 0.0, 30};
    const auto summary = pipeline::summarize_spectrum(p, 4, 21);
    CHECK(summary.dispersion.size() == 4);
    CHECK(std::abs(summary.matrix_element) == doctest::Approx(0.4138096593618211).epsilon(1e-10));
    const auto bands = pipeline::band_rows(p, 4, 11);
    CHECK(bands.size() == 11);
    CHECK(bands[0].size() == 5);
    const auto dens = pipeline::density_rows(p, 4, 9);
    CHECK(dens.size() == 9);
    CHECK(pipeline::named_state("thermal", 0.0).rho00 == 1.0);
    CHECK_THROWS_AS(pipeline::named_state("mixed", 0.0), ArgumentError);
}
