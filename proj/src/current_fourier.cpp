// current_fourier.cpp

#include "tphonon/current_fourier.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <string>

#include "tphonon/errors.hpp"
#include "tphonon/quadrature.hpp"
#include "tphonon/special_functions.hpp"

namespace tphonon::fourier {

namespace {

constexpr double kPi = std::numbers::pi;

void require_positive_kr(double kR) {
    if (!(kR > 0.0) || !std::isfinite(kR)) {
        throw ArgumentError("kR must be positive and finite");
    }
}

// Coefficient of sin(mφ) in the s = 3 series: 8 i^{m-1} J_m / m, m odd.
double series_sign(int m) {
    return ((m - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
}

int odd_ceil(int m) {
    return m % 2 == 0 ? m + 1 : m;
}

// J_m(kR sin θ) / sin θ, including the sin θ -> 0 limit kR J_m(x)/x.
double bessel_over_sin(int m, double j_m, double kR, double sin_theta) {
    if (sin_theta == 0.0) {
        return m == 1 ? 0.5 * kR : 0.0;
    }
    return j_m / sin_theta;
}

// ∫_0^{π/2} Si^2(X sin t) dt. Gauss-Legendre panels a fraction of an
// oscillation wide in X sin t.
double quadrant_si_squared(double x) {
    if (x == 0.0) {
        return 0.0;
    }
    const auto panels = static_cast<std::size_t>(std::max(4.0, std::ceil(0.5 * kPi * x / 1.5)));
    auto f = [x](double t) {
        const double si = special::sine_integral(x * std::sin(t));
        return si * si;
    };
    return quad::gauss_panels<10>(f, 0.0, 0.5 * kPi, panels);
}

// Σ_{m odd} (8/m)^2 J_m(x)^2, summed until the Bessel tail is negligible.
double series_power(double x) {
    if (x == 0.0) {
        return 0.0;
    }
    const int top = odd_ceil(special::miller_start_order(1, x));
    const auto j = special::bessel_j_sequence(top, x);
    quad::CompensatedSum sum;
    for (int m = top; m >= 1; m -= 2) {
        const double c = 8.0 * j[static_cast<std::size_t>(m)] / m;
        sum.add(c * c);
    }
    return sum.value();
}

void check_angular_domain(double kR, int s, const AngularOptions& options) {
    validate_polarization(s);
    if (!(kR >= options.min_kR && kR <= options.max_kR)) {
        throw ArgumentError("angular integral validated for kR in [" +
                            std::to_string(options.min_kR) + ", " +
                            std::to_string(options.max_kR) + "], got " + std::to_string(kR));
    }
}

} // namespace

double jtilde_s1(double kR, const Direction& d) {
    require_positive_kr(kR);
    const double st = std::sin(d.theta);
    const double cp = std::cos(d.phi);
    if (st == 0.0) {
        return -4.0 * kR * cp;
    }
    return -4.0 * special::sine_integral(kR * cp * st) / st;
}

SeriesValue jtilde_s23(double kR, const Direction& d, int s, int max_order, bool extend) {
    require_positive_kr(kR);
    if (s != 2 && s != 3) {
        throw ArgumentError("series form covers polarizations 2 and 3 only, got " +
                            std::to_string(s));
    }
    if (max_order < 1 || max_order % 2 == 0) {
        throw ArgumentError("series truncation must be a positive odd order");
    }

    const double st = std::sin(d.theta);
    const double ct = std::cos(d.theta);
    const double x = kR * st;

    SeriesValue out;
    out.max_order = extend ? std::max(max_order, odd_ceil(special::miller_start_order(1, x)))
                           : max_order;

    // s = 2 carries cos θ / sin θ; at θ = π/2 cos θ vanishes and the value is
    // exactly zero whatever the series.
    if (s == 2 && std::abs(ct) < 1e-15) {
        out.value = 0.0;
        return out;
    }

    const auto j = special::bessel_j_sequence(out.max_order, x);
    quad::CompensatedSum sum;
    double last = 0.0;
    for (int m = 1; m <= out.max_order; m += 2) {
        const double jm = j[static_cast<std::size_t>(m)];
        const double radial = s == 3 ? jm : ct * bessel_over_sin(m, jm, kR, st);
        const double term = 8.0 * series_sign(m) * radial / m;
        sum.add(term * std::sin(m * d.phi));
        last = std::abs(term);
    }
    const double value = sum.value();
    if (!std::isfinite(value)) {
        throw ConvergenceError("non-finite multipole series value");
    }
    out.value = value;
    out.tail_estimate = last;
    return out;
}

std::complex<double> jtilde_bruteforce(double kR, const Direction& d, int s,
                                       const BruteForceOptions& options) {
    validate_polarization(s);
    if (!(kR >= 0.0)) {
        throw ArgumentError("kR must be >= 0");
    }
    if (kR > options.max_kR) {
        throw ArgumentError("brute-force quadrature limited to kR <= " +
                            std::to_string(options.max_kR) + " (raise max_kR to override)");
    }
    if (kR == 0.0) {
        return 0.0;
    }

    const double st = std::sin(d.theta);
    const double ct = std::cos(d.theta);

    // r̂·ê_s as a function of α = φ - ψ.
    auto projection = [&](double alpha) {
        switch (s) {
        case 1: return std::sin(alpha);
        case 2: return ct * std::cos(alpha);
        default: return st * std::cos(alpha);
        }
    };
    if (s == 3 && st == 0.0) {
        return 0.0;
    }

    // Folding ψ -> ψ + π maps the lower island onto the upper one with
    // sgn(ψ) r̂·ê_s unchanged and the phase conjugated, so
    //   j̃ = 2 ∫_0^π dψ ∫_0^{kR} d(kr) r̂·ê_s cos(kr sin θ cos(φ - ψ)).
    // Both directions get one Gauss-Kronrod panel per half oscillation.
    double inner_error = 0.0;
    auto radial = [&](double psi) {
        const double alpha = d.phi - psi;
        const double freq = st * std::cos(alpha);
        const double half_periods = kR * std::abs(freq) / kPi;
        const auto panels = static_cast<std::size_t>(std::ceil(half_periods)) + 1;
        auto integrand = [freq](double u) { return std::cos(freq * u); };
        const auto est = quad::kronrod_panels<15>(integrand, 0.0, kR, panels);
        inner_error = std::max(inner_error, est.error);
        return projection(alpha) * est.value;
    };

    // Absolute floor: the integrand's natural scale is kR.
    const double abs_tol = 0.1 * options.rel_tol * 1e-3 * kR;
    const auto outer_panels = static_cast<std::size_t>(std::ceil(2.0 * kR * st / kPi)) + 2;
    const auto outer = quad::refine_panels<15>(radial, 0.0, kPi, outer_panels,
                                               0.1 * options.rel_tol, abs_tol,
                                               "brute-force Fourier transform");
    const double value = 2.0 * outer.value;
    const double error = 2.0 * (outer.error + kPi * inner_error);
    if (error > options.rel_tol * std::max(std::abs(value), 1e-3 * kR)) {
        throw ConvergenceError("brute-force Fourier quadrature reached only " +
                                   std::to_string(error) + " for value " + std::to_string(value),
                               error);
    }
    return {value, 0.0};
}

double jtilde(double kR, const Direction& d, int s) {
    validate_polarization(s);
    if (s == 1) {
        return jtilde_s1(kR, d);
    }
    return jtilde_s23(kR, d, s).value.real();
}

std::vector<PatternSample> emission_pattern(double kR, int n_theta, int n_phi) {
    require_positive_kr(kR);
    if (n_theta < 2 || n_phi < 2) {
        throw ArgumentError("emission pattern grid must be at least 2x2");
    }
    std::vector<PatternSample> out;
    out.reserve(static_cast<std::size_t>(n_theta) * static_cast<std::size_t>(n_phi));
    for (int i = 0; i < n_theta; ++i) {
        const double theta = kPi * i / (n_theta - 1);
        for (int k = 0; k < n_phi; ++k) {
            const double phi = 2.0 * kPi * k / n_phi;
            const double j = jtilde_s1(kR, {theta, phi});
            out.push_back({theta, phi, j * j});
        }
    }
    return out;
}

double azimuthal_integral(double kR, double theta, int s) {
    require_positive_kr(kR);
    validate_polarization(s);
    const double st = std::sin(theta);
    const double x = kR * st;
    if (s == 1) {
        // 16 Si^2(x cos φ) / sin^2 θ is even in φ and in φ -> π - φ.
        if (st == 0.0) {
            return 16.0 * kR * kR * kPi; // 16 kR^2 ∫ cos^2 φ dφ
        }
        return 4.0 * 16.0 * quadrant_si_squared(x) / (st * st);
    }
    const double ct = std::cos(theta);
    if (s == 2) {
        if (st == 0.0) {
            return kPi * 16.0 * kR * kR; // only m = 1 survives: (8 kR/2)^2 π
        }
        return kPi * series_power(x) * (ct * ct) / (st * st);
    }
    return kPi * series_power(x);
}

double angular_integral_sphere(double kR, int s, const AngularOptions& options) {
    check_angular_domain(kR, s, options);
    // Upper and lower hemispheres contribute equally. In u = ln θ the
    // measure sin θ dθ becomes θ sin θ du.
    auto integrand = [&](double u) {
        const double theta = std::exp(u);
        return theta * std::sin(theta) * azimuthal_integral(kR, theta, s);
    };
    const double lo = std::log(1e-7 / kR);
    const double hi = std::log(0.5 * kPi);
    const auto panels = static_cast<std::size_t>(std::ceil((hi - lo) / 0.25));
    const auto est = quad::refine_panels<15>(
        integrand, lo, hi, panels, options.rel_tol, 0.0,
        "angular integral (s=" + std::to_string(s) + ", kR=" + std::to_string(kR) + ")");
    const double value = 2.0 * est.value;
    return value;
}

double angular_integral(double kR, int s, const AngularOptions& options) {
    if (s != 1) {
        return angular_integral_sphere(kR, s, options);
    }
    check_angular_domain(kR, s, options);
    // 64π ∫_0^{kR} Si^2(y)/y dy; smooth, panels well under a half period.
    auto integrand = [](double y) {
        if (y == 0.0) {
            return 0.0;
        }
        const double si = special::sine_integral(y);
        return si * si / y;
    };
    const auto panels = static_cast<std::size_t>(std::ceil(kR / 1.5)) + 2;
    const auto est = quad::refine_panels<15>(
        integrand, 0.0, kR, panels, 0.01 * options.rel_tol, 0.0,
        "angular integral (s=1, kR=" + std::to_string(kR) + ")");
    return 64.0 * kPi * est.value;
}

double LogFit::evaluate(double kR) const {
    return a * std::log(b * kR);
}

LogFit fit_log(std::span<const FitSample> samples) {
    if (samples.size() < 3) {
        throw ArgumentError("log fit needs at least 3 samples");
    }
    double kr_min = samples.front().kR;
    double kr_max = kr_min;
    for (const auto& s : samples) {
        if (!(s.kR > 0.0) || !std::isfinite(s.integral)) {
            throw ArgumentError("log fit samples need kR > 0 and finite values");
        }
        kr_min = std::min(kr_min, s.kR);
        kr_max = std::max(kr_max, s.kR);
    }
    if (kr_max == kr_min) {
        throw ArgumentError("log fit samples are degenerate (all kR equal)");
    }
    if (kr_max < 10.0 * kr_min) {
        throw ArgumentError("log fit samples must span at least a decade of kR");
    }

    const double n = static_cast<double>(samples.size());
    double mean_x = 0.0;
    double mean_y = 0.0;
    for (const auto& s : samples) {
        mean_x += std::log(s.kR);
        mean_y += s.integral;
    }
    mean_x /= n;
    mean_y /= n;
    double sxx = 0.0;
    double sxy = 0.0;
    for (const auto& s : samples) {
        const double dx = std::log(s.kR) - mean_x;
        sxx += dx * dx;
        sxy += dx * (s.integral - mean_y);
    }
    const double slope = sxy / sxx;
    const double intercept = mean_y - slope * mean_x;
    if (!(slope > 0.0)) {
        throw ConvergenceError("log fit produced a non-positive slope; samples do not follow "
                               "a ln(b kR) growth",
                               slope);
    }

    LogFit fit;
    fit.a = slope;
    fit.b = std::exp(intercept / slope);
    fit.kr_min = kr_min;
    fit.kr_max = kr_max;
    double ss = 0.0;
    for (const auto& s : samples) {
        const double r = s.integral - (slope * std::log(s.kR) + intercept);
        ss += r * r;
    }
    fit.residual = std::sqrt(ss / n);
    return fit;
}

std::vector<double> log_spaced(double lo, double hi, int n) {
    if (!(lo > 0.0) || !(hi >= lo) || n < 1) {
        throw ArgumentError("log_spaced needs 0 < lo <= hi and n >= 1");
    }
    std::vector<double> out(static_cast<std::size_t>(n));
    if (n == 1) {
        out[0] = lo;
        return out;
    }
    const double step = std::log(hi / lo) / (n - 1);
    for (int i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] = lo * std::exp(step * i);
    }
    out.back() = hi;
    return out;
}

std::vector<FitSample> sample_angular_integral(std::span<const double> kRs, int s,
                                               const AngularOptions& options) {
    std::vector<std::future<double>> jobs;
    jobs.reserve(kRs.size());
    for (double kR : kRs) {
        jobs.push_back(std::async(std::launch::async,
                                  [kR, s, options] { return angular_integral(kR, s, options); }));
    }
    std::vector<FitSample> out;
    out.reserve(kRs.size());
    for (std::size_t i = 0; i < kRs.size(); ++i) {
        out.push_back({kRs[i], jobs[i].get()});
    }
    return out;
}

} // namespace tphonon::fourier
