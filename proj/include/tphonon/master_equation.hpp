// master_equation.hpp — two-level Born-Markov (Lindblad) dynamics of the transmon
//
// Tracing the double commutator -(2π/ħ^2)(1/2) Tr_B[L,[L,ρ]] over a thermal
// phonon bath leaves, in the {|0>, |1>} eigenbasis,
//
//   dρ00/dt = -Γ0 · 2 (N ρ00 - (N+1) ρ11)
//   dρ01/dt = (+iω_q) ρ01 - Γ0 (2N+1) ρ01
//
// with Γ0 = (2π/ħ^2)(1/2) |<0|sin φ|1>|^2 J_1(ω) and N the Bose occupation
// at the qubit frequency.

#pragma once

#include <complex>
#include <span>
#include <vector>

#include "tphonon/spectral_density.hpp"

namespace tphonon::master {

struct QubitState {
    double rho00{1.0};
    double rho11{0.0};
    std::complex<double> rho01{0.0, 0.0}; // rho10 = conj(rho01)

    static QubitState ground() { return {1.0, 0.0, {0.0, 0.0}}; }
    static QubitState excited() { return {0.0, 1.0, {0.0, 0.0}}; }
    static QubitState plus() { return {0.5, 0.5, {0.5, 0.0}}; }
    // Gibbs state with ρ11/ρ00 = N/(N+1).
    static QubitState thermal(double occupation);

    double trace() const { return rho00 + rho11; }
    // ρ00 ρ11 - |ρ01|^2, the 2x2 determinant; >= 0 for a physical state.
    double determinant() const { return rho00 * rho11 - std::norm(rho01); }

    // Throws ArgumentError unless trace = 1 and the state is positive, both to tol.
    void validate(double tol = 1e-12) const;
};

QubitState operator+(const QubitState& a, const QubitState& b);
QubitState operator*(double s, const QubitState& a);

struct RateSet {
    double gamma_down{0.0}; // 1 -> 0, ∝ N+1 [1/s]
    double gamma_up{0.0};   // 0 -> 1, ∝ N   [1/s]
    double gamma_phi{0.0};  // coherence decay Γ_10 [1/s]
    double omega_q{0.0};    // qubit splitting [rad/s]

    // base_rate Γ0 with the traced-matrix weights 2(N+1), 2N and 2N+1.
    static RateSet from_coupling(double base_rate, double occupation, double omega_q);

    void validate() const;
    double max_rate() const;
};

// Γ0 = (2π/ħ^2)(1/2) |m|^2 J
double coupling_rate(std::complex<double> matrix_element, double J);

// Γ_10 = (2π/ħ^2)(1/2) |<0|sin φ|1>|^2 J_1(ω) coth(ħω / 2k_BT).
// J must have been evaluated at the same ω (ArgumentError otherwise).
double dephasing_rate(std::complex<double> matrix_element,
                      const spectral::SpectralDensityResult& J, double omega,
                      double temperature);

RateSet make_rates(std::complex<double> matrix_element,
                   const spectral::SpectralDensityResult& J, double omega,
                   double temperature);

// dρ/dt for the full generator (unitary part from H_S = -(ħω_q/2) σ_z).
QubitState generator(const QubitState& state, const RateSet& rates);

struct TrajectoryPoint {
    double t{0.0};
    QubitState state;
};

struct EvolveOptions {
    long stride{1};              // record every stride-th step (the last step is always kept)
    double trace_tol{1e-10};     // per-step trace drift
    double positivity_tol{1e-10};
};

// Fixed-step classical RK4. The dissipative part is stepped in the frame
// rotating at ω_q and the phase e^{iω_q t} is restored exactly, so dt is
// limited only by the stability guard dt · max(rate) < 0.1.
std::vector<TrajectoryPoint> evolve(const QubitState& initial, const RateSet& rates, double dt,
                                    long steps, const EvolveOptions& options = {});

// Least-squares slope of -ln|ρ01(t)| over the trajectory points with
// non-negligible coherence.
double fit_coherence_decay(std::span<const TrajectoryPoint> trajectory);

// e^{-Δω^2/2ω̄^2} / (√(2π) ω̄): the squared Gaussian filter on a transition
// matrix element; unit area, tends to δ(Δω) as ω̄ -> 0.
double gaussian_delta_factor(double delta_omega, double omega_bar);

} // namespace tphonon::master
