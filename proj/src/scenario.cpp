// scenario.cpp

#include "tphonon/scenario.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "tphonon/constants.hpp"
#include "tphonon/errors.hpp"

namespace tphonon {

namespace {

void reject_unknown(const YAML::Node& node, const std::string& where,
                    const std::set<std::string>& known) {
    for (const auto& kv : node) {
        const auto key = kv.first.as<std::string>();
        if (!known.contains(key)) {
            throw ArgumentError(where + ": unknown key '" + key + "'");
        }
    }
}

template <class T>
void read(const YAML::Node& node, const std::string& key, T& target, const std::string& where,
          bool required = false) {
    const auto value = node[key];
    if (!value) {
        if (required) {
            throw ArgumentError(where + ": missing required key '" + key + "'");
        }
        return;
    }
    try {
        target = value.as<T>();
    } catch (const YAML::Exception&) {
        throw ArgumentError(where + ": key '" + key + "' has the wrong type");
    }
}

YAML::Node section(const YAML::Node& root, const std::string& name, const std::string& origin) {
    const auto node = root[name];
    if (node && !node.IsMap()) {
        throw ArgumentError(origin + ": section '" + name + "' must be a mapping");
    }
    return node;
}

} // namespace

double Scenario::omega() const {
    return constants::angular_from_hz(omega_over_2pi);
}

void Scenario::validate() const {
    transmon.validate();
    geometry.validate();
    bath.validate();
    if (!(omega_over_2pi > 0.0)) {
        throw ArgumentError("scenario '" + name + "': omega_over_2pi_hz must be positive");
    }
    if (!(fit.kr_min > 0.0) || !(fit.kr_max > fit.kr_min) || fit.samples < 3) {
        throw ArgumentError("scenario '" + name +
                            "': fit needs 0 < kr_min < kr_max and at least 3 samples");
    }
}

Scenario parse_scenario(const std::string& text, const std::string& origin) {
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::Exception& e) {
        throw ArgumentError(origin + ": " + e.what());
    }
    if (!root.IsMap()) {
        throw ArgumentError(origin + ": scenario must be a mapping");
    }
    reject_unknown(root, origin,
                   {"name", "omega_over_2pi_hz", "transmon", "geometry", "bath", "fit", "outputs"});

    Scenario s;
    read(root, "name", s.name, origin);
    read(root, "omega_over_2pi_hz", s.omega_over_2pi, origin, true);

    const auto transmon = section(root, "transmon", origin);
    if (!transmon) {
        throw ArgumentError(origin + ": missing section 'transmon'");
    }
    reject_unknown(transmon, origin + " transmon", {"ej_over_ec", "ng", "cutoff"});
    read(transmon, "ej_over_ec", s.transmon.ej_over_ec, origin + " transmon", true);
    read(transmon, "ng", s.transmon.ng, origin + " transmon");
    read(transmon, "cutoff", s.transmon.cutoff, origin + " transmon");

    const auto geometry = section(root, "geometry", origin);
    if (!geometry) {
        throw ArgumentError(origin + ": missing section 'geometry'");
    }
    reject_unknown(geometry, origin + " geometry", {"radius_m", "thickness_m", "critical_current_a"});
    read(geometry, "radius_m", s.geometry.radius, origin + " geometry", true);
    read(geometry, "thickness_m", s.geometry.thickness, origin + " geometry");
    read(geometry, "critical_current_a", s.geometry.critical_current, origin + " geometry", true);

    const auto bath = section(root, "bath", origin);
    if (!bath) {
        throw ArgumentError(origin + ": missing section 'bath'");
    }
    reject_unknown(bath, origin + " bath",
                   {"mass_density_kg_m3", "c_transverse_m_s", "c_longitudinal_m_s", "temperature_k"});
    read(bath, "mass_density_kg_m3", s.bath.mass_density, origin + " bath", true);
    read(bath, "c_transverse_m_s", s.bath.c_transverse, origin + " bath", true);
    read(bath, "c_longitudinal_m_s", s.bath.c_longitudinal, origin + " bath");
    read(bath, "temperature_k", s.bath.temperature, origin + " bath", true);

    if (const auto fit = section(root, "fit", origin)) {
        reject_unknown(fit, origin + " fit", {"kr_min", "kr_max", "samples"});
        read(fit, "kr_min", s.fit.kr_min, origin + " fit");
        read(fit, "kr_max", s.fit.kr_max, origin + " fit");
        read(fit, "samples", s.fit.samples, origin + " fit");
    }
    if (const auto outputs = section(root, "outputs", origin)) {
        reject_unknown(outputs, origin + " outputs", {"dir"});
        read(outputs, "dir", s.output_dir, origin + " outputs");
    }

    s.validate();
    return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open scenario file " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario(buffer.str(), path.string());
}

} // namespace tphonon
