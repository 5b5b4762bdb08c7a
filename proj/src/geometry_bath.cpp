// geometry_bath.cpp

#include "tphonon/geometry_bath.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "tphonon/constants.hpp"
#include "tphonon/errors.hpp"

namespace tphonon {

double constants::reduced_energy(double omega, double temperature) {
    if (temperature == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return hbar * omega / (boltzmann * temperature);
}

void DeviceGeometry::validate() const {
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        throw ArgumentError("geometry: radius must be positive");
    }
    if (!(thickness > 0.0) || !std::isfinite(thickness)) {
        throw ArgumentError("geometry: thickness must be positive");
    }
    if (!(critical_current >= 0.0) || !std::isfinite(critical_current)) {
        throw ArgumentError("geometry: critical current must be >= 0");
    }
}

bool DeviceGeometry::thin_film_valid(double wavelength) const {
    return thickness < wavelength / (2.0 * constants::pi);
}

void BathParams::validate() const {
    if (!(mass_density > 0.0) || !std::isfinite(mass_density)) {
        throw ArgumentError("bath: mass density must be positive");
    }
    if (!(c_transverse > 0.0) || !(c_longitudinal > 0.0)) {
        throw ArgumentError("bath: sound speeds must be positive");
    }
    if (c_longitudinal < c_transverse) {
        throw ArgumentError("bath: longitudinal sound speed below transverse");
    }
    if (!(temperature >= 0.0) || !std::isfinite(temperature)) {
        throw ArgumentError("bath: temperature must be >= 0");
    }
}

double BathParams::sound_speed(int s) const {
    validate_polarization(s);
    return s == 3 ? c_longitudinal : c_transverse;
}

void Direction::validate() const {
    if (!(theta >= 0.0 && theta <= constants::pi)) {
        throw ArgumentError("direction: theta outside [0, pi]");
    }
    if (!std::isfinite(phi)) {
        throw ArgumentError("direction: phi must be finite");
    }
}

PolarizationTriad polarization_vectors(const Direction& d) {
    const double st = std::sin(d.theta);
    const double ct = std::cos(d.theta);
    const double sp = std::sin(d.phi);
    const double cp = std::cos(d.phi);
    return {
        {sp, -cp, 0.0},
        {cp * ct, sp * ct, -st},
        {cp * st, sp * st, ct},
    };
}

void validate_polarization(int s) {
    if (s < 1 || s > 3) {
        throw ArgumentError("polarization index must be 1, 2 or 3, got " + std::to_string(s));
    }
}

double phonon_dispersion(double k, int s, const BathParams& bath) {
    if (!(k >= 0.0)) {
        throw ArgumentError("wavenumber must be >= 0");
    }
    return bath.sound_speed(s) * k;
}

double phonon_wavenumber(double omega, int s, const BathParams& bath) {
    if (!(omega >= 0.0)) {
        throw ArgumentError("angular frequency must be >= 0");
    }
    return omega / bath.sound_speed(s);
}

double thermal_occupation(double omega, double temperature) {
    if (!(omega > 0.0)) {
        throw ArgumentError("thermal occupation needs omega > 0");
    }
    if (!(temperature >= 0.0)) {
        throw ArgumentError("temperature must be >= 0");
    }
    if (temperature == 0.0) {
        return 0.0;
    }
    // e^{-x} / (1 - e^{-x}) stays finite for large x.
    const double x = constants::reduced_energy(omega, temperature);
    return std::exp(-x) / -std::expm1(-x);
}

double thermal_coth(double omega, double temperature) {
    if (!(omega > 0.0)) {
        throw ArgumentError("thermal coth needs omega > 0");
    }
    if (temperature == 0.0) {
        return 1.0;
    }
    const double x = constants::reduced_energy(omega, temperature);
    return 1.0 / std::tanh(0.5 * x);
}

} // namespace tphonon
