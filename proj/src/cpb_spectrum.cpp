// cpb_spectrum.cpp — charge-basis diagonalization of the transmon Hamiltonian

#include "tphonon/cpb_spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "tphonon/errors.hpp"

namespace tphonon::cpb {

namespace {

constexpr double kMatrixElementTolerance = 1e-6;

void require_level(const Spectrum& spectrum, int level) {
    if (level < 0 || level >= spectrum.num_levels()) {
        throw ArgumentError("level " + std::to_string(level) + " outside solved range [0, " +
                            std::to_string(spectrum.num_levels()) + ")");
    }
}

} // namespace

void TransmonParams::validate() const {
    if (!(ej_over_ec > 0.0) || !std::isfinite(ej_over_ec)) {
        throw ArgumentError("ej_over_ec must be positive and finite");
    }
    if (!std::isfinite(ng)) {
        throw ArgumentError("ng must be finite");
    }
    if (cutoff < 1) {
        throw ArgumentError("charge cutoff must be >= 1");
    }
}

Eigen::MatrixXd build_hamiltonian(const TransmonParams& params) {
    params.validate();
    const int dim = params.dimension();
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) {
        const double n = static_cast<double>(i - params.cutoff);
        h(i, i) = 4.0 * (n - params.ng) * (n - params.ng);
        if (i + 1 < dim) {
            h(i, i + 1) = -0.5 * params.ej_over_ec;
            h(i + 1, i) = -0.5 * params.ej_over_ec;
        }
    }
    return h;
}

Spectrum solve_spectrum(const TransmonParams& params, int num_levels) {
    params.validate();
    if (num_levels < 1 || num_levels > params.dimension()) {
        throw ArgumentError("num_levels must lie in [1, " + std::to_string(params.dimension()) +
                            "], got " + std::to_string(num_levels));
    }

    // Tridiagonal input: hand the diagonals straight to the tridiagonal QL path.
    const int dim = params.dimension();
    Eigen::VectorXd diag(dim);
    Eigen::VectorXd sub(dim - 1);
    for (int i = 0; i < dim; ++i) {
        const double n = static_cast<double>(i - params.cutoff);
        diag(i) = 4.0 * (n - params.ng) * (n - params.ng);
    }
    sub.setConstant(-0.5 * params.ej_over_ec);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) {
        throw ConvergenceError("tridiagonal eigen-solver failed to converge for ej_over_ec=" +
                               std::to_string(params.ej_over_ec));
    }

    Spectrum out;
    out.cutoff = params.cutoff;
    out.ng = params.ng;
    out.energies.reserve(num_levels);
    out.amplitudes.reserve(num_levels);
    for (int level = 0; level < num_levels; ++level) {
        out.energies.push_back(solver.eigenvalues()(level));
        Eigen::VectorXcd v = solver.eigenvectors().col(level).cast<std::complex<double>>();
        Eigen::Index pivot = 0;
        v.cwiseAbs().maxCoeff(&pivot);
        v *= std::polar(1.0, -std::arg(v(pivot)));
        v /= v.norm();
        out.amplitudes.push_back(std::move(v));
    }
    return out;
}

double charge_dispersion(const TransmonParams& params, int band, int ng_points) {
    if (band < 0) {
        throw ArgumentError("band index must be >= 0");
    }
    if (ng_points < 2) {
        throw ArgumentError("charge dispersion needs at least 2 n_g grid points");
    }
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    TransmonParams p = params;
    for (int k = 0; k < ng_points; ++k) {
        p.ng = static_cast<double>(k) / static_cast<double>(ng_points - 1);
        const double e = solve_spectrum(p, band + 1).energies.back();
        lo = std::min(lo, e);
        hi = std::max(hi, e);
    }
    return hi - lo;
}

double relative_anharmonicity(const TransmonParams& params) {
    if (params.dimension() < 3) {
        throw ArgumentError("anharmonicity needs at least 3 levels in the basis");
    }
    const auto e = solve_spectrum(params, 3).energies;
    const double e10 = e[1] - e[0];
    if (e10 == 0.0) {
        throw ArgumentError("degenerate E_0 = E_1: relative anharmonicity undefined");
    }
    return ((e[2] - e[1]) - e10) / e10;
}

std::complex<double> wavefunction(const Spectrum& spectrum, int level, double phi) {
    require_level(spectrum, level);
    const auto& c = spectrum.amplitudes[level];
    std::complex<double> sum{0.0, 0.0};
    for (Eigen::Index i = 0; i < c.size(); ++i) {
        sum += c(i) * std::polar(1.0, spectrum.charge_of(static_cast<int>(i)) * phi);
    }
    return sum / std::sqrt(2.0 * std::numbers::pi);
}

std::complex<double> sin_phi_ladder(const Spectrum& spectrum, int i, int j) {
    require_level(spectrum, i);
    require_level(spectrum, j);
    const auto& ci = spectrum.amplitudes[i];
    const auto& cj = spectrum.amplitudes[j];
    const Eigen::Index dim = cj.size();
    // (sin φ c)_n = (c_{n-1} - c_{n+1}) / 2i, zero outside the basis window.
    Eigen::VectorXcd applied = Eigen::VectorXcd::Zero(dim);
    const std::complex<double> inv_2i{0.0, -0.5};
    for (Eigen::Index n = 0; n < dim; ++n) {
        std::complex<double> lower = n > 0 ? cj(n - 1) : 0.0;
        std::complex<double> upper = n + 1 < dim ? cj(n + 1) : 0.0;
        applied(n) = (lower - upper) * inv_2i;
    }
    return ci.dot(applied); // dot conjugates the left operand
}

std::complex<double> sin_phi_quadrature(const Spectrum& spectrum, int i, int j,
                                        int grid_points) {
    require_level(spectrum, i);
    require_level(spectrum, j);
    if (grid_points < 4) {
        throw ArgumentError("quadrature grid too small");
    }
    const double h = 2.0 * std::numbers::pi / grid_points;
    std::complex<double> sum{0.0, 0.0};
    for (int k = 0; k < grid_points; ++k) {
        const double phi = -std::numbers::pi + k * h;
        sum += std::conj(wavefunction(spectrum, i, phi)) * std::sin(phi) *
               wavefunction(spectrum, j, phi);
    }
    return sum * h;
}

std::complex<double> sin_phi_matrix_element(const Spectrum& spectrum, int i, int j) {
    const auto ladder = sin_phi_ladder(spectrum, i, j);
    const int grid = std::max(2048, 4 * (2 * spectrum.cutoff + 1));
    const auto direct = sin_phi_quadrature(spectrum, i, j, grid);
    const double gap = std::abs(ladder - direct);
    if (gap > kMatrixElementTolerance) {
        throw ConvergenceError("sin(phi) matrix element: ladder and quadrature routes disagree by " +
                                   std::to_string(gap),
                               gap);
    }
    return ladder;
}

double harmonic_matrix_element(double ej_over_ec) {
    if (!(ej_over_ec > 0.0)) {
        throw ArgumentError("ej_over_ec must be positive");
    }
    const double alpha = std::sqrt(ej_over_ec / 8.0);
    return 1.0 / std::sqrt(2.0 * alpha);
}

} // namespace tphonon::cpb
