// geometry_bath.hpp — device geometry, acoustic bath, phonon polarizations

#pragma once

#include <array>

namespace tphonon {

// Two semicircular islands of radius R joined at the origin by the junction.
struct DeviceGeometry {
    double radius{400e-6};           // R [m]
    double thickness{50e-9};         // film thickness [m]
    double critical_current{20e-9};  // I_c [A]

    void validate() const;

    // Thin-film condition thickness < λ/2π for the given phonon wavelength.
    bool thin_film_valid(double wavelength) const;
};

struct BathParams {
    double mass_density{8570.0};   // ρ [kg/m^3]
    double c_transverse{1600.0};   // [m/s]
    double c_longitudinal{5100.0}; // [m/s]
    double temperature{0.01};      // [K]

    void validate() const;

    // s = 1, 2: transverse; s = 3: longitudinal.
    double sound_speed(int s) const;
};

// Propagation direction: θ from ẑ (normal to the device), φ from x̂ (the axis
// transecting both islands).
struct Direction {
    double theta{0.0};
    double phi{0.0};

    void validate() const;
};

using Vec3 = std::array<double, 3>;

inline double dot(const Vec3& a, const Vec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// e1: transverse in-plane, e2 = e3 × e1: transverse out-of-plane, e3 = k̂.
struct PolarizationTriad {
    Vec3 e1;
    Vec3 e2;
    Vec3 e3;
};

// Component form; regular at θ = 0 where (k̂ × ẑ)/|k̂ × ẑ| is 0/0.
PolarizationTriad polarization_vectors(const Direction& d);

void validate_polarization(int s);

double phonon_dispersion(double k, int s, const BathParams& bath);

// Inverse of phonon_dispersion: k = ω / c_s.
double phonon_wavenumber(double omega, int s, const BathParams& bath);

// Bose-Einstein N_ω = 1/(e^{ħω/k_BT} - 1); exactly 0 at T = 0.
double thermal_occupation(double omega, double temperature);

// 2N_ω + 1 = coth(ħω / 2k_BT); exactly 1 at T = 0.
double thermal_coth(double omega, double temperature);

} // namespace tphonon
