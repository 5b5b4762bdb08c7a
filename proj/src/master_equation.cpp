// master_equation.cpp

#include "tphonon/master_equation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "tphonon/constants.hpp"
#include "tphonon/errors.hpp"
#include "tphonon/geometry_bath.hpp"

namespace tphonon::master {

QubitState QubitState::thermal(double occupation) {
    if (!(occupation >= 0.0)) {
        throw ArgumentError("thermal occupation must be >= 0");
    }
    const double denom = 2.0 * occupation + 1.0;
    return {(occupation + 1.0) / denom, occupation / denom, {0.0, 0.0}};
}

void QubitState::validate(double tol) const {
    if (std::abs(trace() - 1.0) > tol) {
        throw ArgumentError("density matrix trace " + std::to_string(trace()) + " != 1");
    }
    if (rho00 < -tol || rho11 < -tol || determinant() < -tol) {
        throw ArgumentError("density matrix is not positive semidefinite");
    }
}

QubitState operator+(const QubitState& a, const QubitState& b) {
    return {a.rho00 + b.rho00, a.rho11 + b.rho11, a.rho01 + b.rho01};
}

QubitState operator*(double s, const QubitState& a) {
    return {s * a.rho00, s * a.rho11, s * a.rho01};
}

RateSet RateSet::from_coupling(double base_rate, double occupation, double omega_q) {
    if (!(base_rate >= 0.0) || !(occupation >= 0.0)) {
        throw ArgumentError("rates need base_rate >= 0 and occupation >= 0");
    }
    return {2.0 * base_rate * (occupation + 1.0), 2.0 * base_rate * occupation,
            base_rate * (2.0 * occupation + 1.0), omega_q};
}

void RateSet::validate() const {
    if (!(gamma_down >= 0.0) || !(gamma_up >= 0.0) || !(gamma_phi >= 0.0)) {
        throw ArgumentError("rates must be non-negative");
    }
    if (!std::isfinite(omega_q)) {
        throw ArgumentError("qubit frequency must be finite");
    }
}

double RateSet::max_rate() const {
    return std::max({gamma_down, gamma_up, gamma_phi});
}

double coupling_rate(std::complex<double> matrix_element, double J) {
    return std::numbers::pi / (constants::hbar * constants::hbar) * std::norm(matrix_element) * J;
}

double dephasing_rate(std::complex<double> matrix_element,
                      const spectral::SpectralDensityResult& J, double omega,
                      double temperature) {
    if (!(omega > 0.0)) {
        throw ArgumentError("dephasing rate needs omega > 0");
    }
    if (std::abs(J.omega - omega) > 1e-12 * omega) {
        throw ArgumentError("spectral density was evaluated at omega=" + std::to_string(J.omega) +
                            ", not at the qubit frequency " + std::to_string(omega));
    }
    return coupling_rate(matrix_element, J.J) * thermal_coth(omega, temperature);
}

RateSet make_rates(std::complex<double> matrix_element,
                   const spectral::SpectralDensityResult& J, double omega,
                   double temperature) {
    // Same argument checks as the closed-form rate.
    dephasing_rate(matrix_element, J, omega, temperature);
    return RateSet::from_coupling(coupling_rate(matrix_element, J.J),
                                  thermal_occupation(omega, temperature), omega);
}

namespace {

// Dissipative part only; the coherence is in the frame rotating at ω_q.
QubitState dissipator(const QubitState& s, const RateSet& r) {
    const double flow = r.gamma_up * s.rho00 - r.gamma_down * s.rho11; // into |1>
    return {-flow, flow, -r.gamma_phi * s.rho01};
}

} // namespace

QubitState generator(const QubitState& state, const RateSet& rates) {
    QubitState d = dissipator(state, rates);
    d.rho01 += std::complex<double>(0.0, rates.omega_q) * state.rho01;
    return d;
}

std::vector<TrajectoryPoint> evolve(const QubitState& initial, const RateSet& rates, double dt,
                                    long steps, const EvolveOptions& options) {
    rates.validate();
    initial.validate(options.positivity_tol);
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw ArgumentError("time step must be positive");
    }
    if (steps < 1) {
        throw ArgumentError("evolve needs at least one step");
    }
    if (dt * rates.max_rate() >= 0.1) {
        throw ArgumentError("stability guard: dt * max(rate) = " +
                            std::to_string(dt * rates.max_rate()) + " must stay below 0.1");
    }
    if (options.stride < 1) {
        throw ArgumentError("trajectory stride must be >= 1");
    }

    auto to_lab = [&](QubitState s, double t) {
        s.rho01 *= std::polar(1.0, rates.omega_q * t);
        return s;
    };

    std::vector<TrajectoryPoint> out;
    out.reserve(static_cast<std::size_t>(steps / options.stride) + 2);
    out.push_back({0.0, initial});

    QubitState rot = initial;
    for (long n = 1; n <= steps; ++n) {
        const QubitState k1 = dissipator(rot, rates);
        const QubitState k2 = dissipator(rot + (0.5 * dt) * k1, rates);
        const QubitState k3 = dissipator(rot + (0.5 * dt) * k2, rates);
        const QubitState k4 = dissipator(rot + dt * k3, rates);
        const QubitState next = rot + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

        if (std::abs(next.trace() - rot.trace()) > options.trace_tol) {
            throw ConvergenceError("trace drifted by " +
                                       std::to_string(next.trace() - rot.trace()) + " at step " +
                                       std::to_string(n),
                                   next.trace() - rot.trace());
        }
        const double tol = options.positivity_tol;
        if (next.rho00 < -tol || next.rho11 < -tol || next.determinant() < -tol) {
            throw ConvergenceError("density matrix lost positivity at step " + std::to_string(n),
                                   next.determinant());
        }
        rot = next;
        if (n % options.stride == 0 || n == steps) {
            const double t = dt * static_cast<double>(n);
            out.push_back({t, to_lab(rot, t)});
        }
    }
    return out;
}

double fit_coherence_decay(std::span<const TrajectoryPoint> trajectory) {
    double n = 0.0;
    double st = 0.0;
    double sy = 0.0;
    double stt = 0.0;
    double sty = 0.0;
    for (const auto& p : trajectory) {
        const double mag = std::abs(p.state.rho01);
        if (mag < 1e-200) {
            continue;
        }
        const double y = std::log(mag);
        n += 1.0;
        st += p.t;
        sy += y;
        stt += p.t * p.t;
        sty += p.t * y;
    }
    if (n < 2.0) {
        throw ArgumentError("coherence decay fit needs at least two points with rho01 != 0");
    }
    const double denom = n * stt - st * st;
    if (denom <= 0.0) {
        throw ArgumentError("coherence decay fit needs distinct times");
    }
    return -(n * sty - st * sy) / denom;
}

double gaussian_delta_factor(double delta_omega, double omega_bar) {
    if (!(omega_bar > 0.0)) {
        throw ArgumentError("smoothing frequency must be positive");
    }
    const double z = delta_omega / omega_bar;
    return std::exp(-0.5 * z * z) / (std::sqrt(2.0 * std::numbers::pi) * omega_bar);
}

} // namespace tphonon::master
