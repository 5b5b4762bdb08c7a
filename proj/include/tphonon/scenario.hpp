// scenario.hpp — scenario files: one YAML document per device/operating point

#pragma once

#include <filesystem>
#include <string>

#include "tphonon/cpb_spectrum.hpp"
#include "tphonon/geometry_bath.hpp"

namespace tphonon {

struct FitSettings {
    double kr_min{250.0};
    double kr_max{7500.0};
    int samples{12};
};

struct Scenario {
    std::string name{"unnamed"};
    cpb::TransmonParams transmon{};
    DeviceGeometry geometry{};
    BathParams bath{};
    double omega_over_2pi{4e9}; // Hz
    FitSettings fit{};
    std::string output_dir{"out"};

    double omega() const;
    void validate() const;
};

// Throws ArgumentError on malformed input, unknown keys or invalid values.
Scenario parse_scenario(const std::string& text, const std::string& origin = "<string>");

// As parse_scenario; IoError if the file cannot be read.
Scenario load_scenario(const std::filesystem::path& path);

} // namespace tphonon
