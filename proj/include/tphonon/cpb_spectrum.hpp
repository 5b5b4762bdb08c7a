// cpb_spectrum.hpp — Cooper-pair-box / transmon spectrum in the charge basis
//
// H/E_C = 4 (n - n_g)^2 - (E_J/E_C) cos φ on the charge states n = -N..N.
// cos φ couples n to n±1 with amplitude 1/2, so the matrix is real symmetric
// tridiagonal. Its eigenvalues are the Mathieu characteristic values a(ν, q)
// sorted by band.

#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace tphonon::cpb {

struct TransmonParams {
    double ej_over_ec{49.0}; // E_J / E_C
    double ng{0.0};          // offset charge in units of 2e
    int cutoff{30};          // charge basis n = -cutoff..cutoff

    void validate() const;
    int dimension() const { return 2 * cutoff + 1; }
};

struct Spectrum {
    std::vector<double> energies;              // units of E_C, ascending
    std::vector<Eigen::VectorXcd> amplitudes;  // c_n, index i <-> n = i - cutoff
    int cutoff{0};
    double ng{0.0};

    int num_levels() const { return static_cast<int>(energies.size()); }
    int charge_of(int index) const { return index - cutoff; }
};

Eigen::MatrixXd build_hamiltonian(const TransmonParams& params);

// Lowest num_levels eigenpairs. Each eigenvector's largest-magnitude
// coefficient is made real and positive.
Spectrum solve_spectrum(const TransmonParams& params, int num_levels);

// max - min of the band-th level over a uniform n_g grid on [0, 1].
double charge_dispersion(const TransmonParams& params, int band, int ng_points = 101);

// (E_21 - E_10) / E_10
double relative_anharmonicity(const TransmonParams& params);

// ψ(φ) = (1/√2π) Σ_n c_n e^{inφ}
std::complex<double> wavefunction(const Spectrum& spectrum, int level, double phi);

// ⟨i| sin φ |j⟩ from the ladder action sin φ : c_n -> (c_{n-1} - c_{n+1}) / 2i.
std::complex<double> sin_phi_ladder(const Spectrum& spectrum, int i, int j);

// ⟨i| sin φ |j⟩ by trapezoid quadrature of ∫ ψ_i* sin φ ψ_j dφ over [-π, π).
// The integrand is a trigonometric polynomial, so the rule is exact once
// grid_points exceeds 2*(2*cutoff + 1).
std::complex<double> sin_phi_quadrature(const Spectrum& spectrum, int i, int j,
                                        int grid_points = 2048);

// Ladder value, cross-checked against the quadrature route. Throws
// ConvergenceError if the two disagree by more than 1e-6.
std::complex<double> sin_phi_matrix_element(const Spectrum& spectrum, int i, int j);

// 1/√(2α), α = √((E_J/E_C)/8): small-angle harmonic estimate of |⟨0|sin φ|1⟩|.
double harmonic_matrix_element(double ej_over_ec);

} // namespace tphonon::cpb
