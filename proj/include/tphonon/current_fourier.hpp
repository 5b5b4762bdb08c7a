// current_fourier.hpp — dimensionless Fourier transform of the radial current density
//
// The junction current spreads radially over two semicircular islands with
// opposite sign above and below the x-axis. Its in-plane Fourier transform,
// projected on phonon polarization s and measured in units of 1/k, is
//
//     j̃_ks = ∫_0^{kR} d(kr) ∫_{-π}^{π} dψ sgn(ψ) r̂·ê_s exp(-i kr k̂·r̂)
//
// and is real for every polarization because of the inversion symmetry.

#pragma once

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "tphonon/geometry_bath.hpp"

namespace tphonon::fourier {

inline constexpr int kDefaultSeriesOrder = 201;

// Closed form for the transverse in-plane polarization:
// j̃_k1 = -4 Si(kR cos φ sin θ) / sin θ, with the θ -> 0 limit -4 kR cos φ.
double jtilde_s1(double kR, const Direction& d);

struct SeriesValue {
    std::complex<double> value;
    double tail_estimate{0.0}; // magnitude of the last retained term
    int max_order{0};          // largest odd m actually summed
};

// Odd-multipole Bessel series for s = 2 (divided by tan θ) and s = 3:
//   Σ_{m odd} (8/m) i^{m-1} sin(mφ) J_m(kR sin θ) / {tan θ, 1}.
// max_order is the requested truncation. With extend = true it acts as a
// floor and is raised until J_m(kR sin θ) is negligible (m well above
// kR sin θ); extend = false sums exactly m = 1, 3, ..., max_order.
SeriesValue jtilde_s23(double kR, const Direction& d, int s,
                       int max_order = kDefaultSeriesOrder, bool extend = true);

struct BruteForceOptions {
    double max_kR{2000.0};  // cost guard; the work grows like kR^2
    double rel_tol{1e-8};
};

// Direct 2D quadrature of the defining integral, folded onto one island with
// the inversion symmetry. Reference for the closed form and the series.
std::complex<double> jtilde_bruteforce(double kR, const Direction& d, int s,
                                       const BruteForceOptions& options = {});

// j̃ for any polarization: closed form for s = 1, extended series otherwise.
double jtilde(double kR, const Direction& d, int s);

struct PatternSample {
    double theta;
    double phi;
    double value;
};

// |j̃_k1|^2 = 16 Si^2(kR cos φ sin θ) / sin^2 θ on θ ∈ [0, π] (inclusive,
// n_theta points) × φ ∈ [0, 2π) (n_phi points). Row-major in θ.
std::vector<PatternSample> emission_pattern(double kR, int n_theta, int n_phi);

// ∫_0^{2π} dφ |j̃_ks|^2 at fixed θ. For s = 1 the D2 symmetry of the
// integrand reduces the range to one quadrant; for s = 2, 3 orthogonality of
// sin(mφ) collapses the squared series to π Σ_m |c_m|^2.
double azimuthal_integral(double kR, double theta, int s);

struct AngularOptions {
    double rel_tol{1e-6};
    double min_kR{10.0};
    double max_kR{1e5};
};

// ∫ d²Ω |j̃_ks|^2 over the full sphere. For s = 1 the substitution
// w = sin θ cos φ has measure ∫ dθ dφ δ(w - ...)/sin θ = π/(2w) on a quadrant,
// collapsing the sphere to the 1D form
//     64π ∫_0^{kR} Si^2(y) / y dy   (-> 16π^3 ln kR + const),
// which is what this evaluates; s = 2, 3 go through angular_integral_sphere.
double angular_integral(double kR, int s, const AngularOptions& options = {});

// Reference route: polar quadrature in u = ln θ of azimuthal_integral. The
// θ integrand carries ripples of period ~1/kR, so the cost grows like kR^2.
double angular_integral_sphere(double kR, int s, const AngularOptions& options = {});

struct FitSample {
    double kR;
    double integral;
};

// y ≈ a ln(b kR)
struct LogFit {
    double a{0.0};
    double b{0.0};
    double kr_min{0.0};
    double kr_max{0.0};
    double residual{0.0}; // RMS of y - a ln(b kR) over the samples

    bool contains(double kR) const { return kR >= kr_min && kR <= kr_max; }
    double evaluate(double kR) const;
};

// Linear least squares of y = a ln kR + c, then b = exp(c / a).
LogFit fit_log(std::span<const FitSample> samples);

// n log-spaced values from lo to hi inclusive.
std::vector<double> log_spaced(double lo, double hi, int n);

// angular_integral at every kR, evaluated concurrently; output order matches input.
std::vector<FitSample> sample_angular_integral(std::span<const double> kRs, int s,
                                               const AngularOptions& options = {});

} // namespace tphonon::fourier
