// special_functions.cpp

#include "tphonon/special_functions.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>

#include "tphonon/errors.hpp"

namespace tphonon::special {

namespace {

constexpr double kSeriesSwitch = 4.0;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxContinuedFractionTerms = 1000;

double sine_integral_series(double x) {
    // Σ (-1)^k x^{2k+1} / ((2k+1) (2k+1)!)
    const double x2 = x * x;
    double term = x; // x^{2k+1} / (2k+1)!, signed
    double sum = x;
    for (int k = 1; k < 60; ++k) {
        term *= -x2 / ((2.0 * k) * (2.0 * k + 1.0));
        const double contribution = term / (2.0 * k + 1.0);
        sum += contribution;
        if (std::abs(contribution) < kEps * std::abs(sum)) {
            break;
        }
    }
    return sum;
}

// Modified Lentz evaluation of E_1(ix) e^{ix} as a continued fraction; the
// real and imaginary parts are the auxiliary functions g and -f.
double sine_integral_auxiliary(double x) {
    const double tiny = std::numeric_limits<double>::min() / kEps;
    std::complex<double> b{1.0, x};
    std::complex<double> c{1.0 / tiny, 0.0};
    std::complex<double> d = 1.0 / b;
    std::complex<double> h = d;
    int i = 1;
    for (; i < kMaxContinuedFractionTerms; ++i) {
        const double a = -static_cast<double>(i) * static_cast<double>(i);
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        const std::complex<double> del = c * d;
        h *= del;
        if (std::abs(del.real() - 1.0) + std::abs(del.imag()) < kEps) {
            break;
        }
    }
    if (i == kMaxContinuedFractionTerms) {
        throw ConvergenceError("sine integral continued fraction did not converge at x=" +
                               std::to_string(x));
    }
    // h = E_1(ix) e^{ix}; E_1(ix) = -Ci(x) + i (Si(x) - π/2).
    h *= std::complex<double>(std::cos(x), -std::sin(x));
    return std::numbers::pi / 2.0 + h.imag();
}

} // namespace

double sine_integral(double x) {
    const double ax = std::abs(x);
    double value = 0.0;
    if (ax == 0.0) {
        return 0.0;
    } else if (ax <= kSeriesSwitch) {
        value = sine_integral_series(ax);
    } else if (std::isinf(ax)) {
        value = std::numbers::pi / 2.0;
    } else {
        value = sine_integral_auxiliary(ax);
    }
    return x < 0.0 ? -value : value;
}

int miller_start_order(int max_order, double x) {
    const double top = std::max(static_cast<double>(max_order), x);
    const int start = static_cast<int>(top + 20.0 + 10.0 * std::cbrt(top) + 1.0);
    return start + (start % 2); // even, so the normalization sum picks up J_start
}

std::vector<double> bessel_j_sequence(int max_order, double x) {
    if (max_order < 0) {
        throw ArgumentError("Bessel order must be >= 0");
    }
    if (!(x >= 0.0) || !std::isfinite(x)) {
        throw ArgumentError("Bessel argument must be finite and >= 0");
    }
    std::vector<double> out(static_cast<std::size_t>(max_order) + 1, 0.0);
    if (x == 0.0) {
        out[0] = 1.0;
        return out;
    }

    constexpr double big = 1e250;
    const int start = miller_start_order(max_order, x);
    const double two_over_x = 2.0 / x;

    double j_next = 0.0;  // J_{k+1}
    double j_cur = 1e-300; // J_k, arbitrary seed
    double norm = 0.0;     // J_0 + 2 Σ J_{2k}, unnormalized
    for (int k = start; k > 0; --k) {
        const double j_prev = k * two_over_x * j_cur - j_next; // J_{k-1}
        j_next = j_cur;
        j_cur = j_prev;
        // j_cur is now J_{k-1}
        const int order = k - 1;
        if (order > 0 && order % 2 == 0) {
            norm += 2.0 * j_cur;
        }
        if (order <= max_order) {
            out[static_cast<std::size_t>(order)] = j_cur;
        }
        if (std::abs(j_cur) > big) {
            const double scale = 1.0 / big;
            j_cur *= scale;
            j_next *= scale;
            norm *= scale;
            for (int m = order; m <= max_order; ++m) {
                out[static_cast<std::size_t>(m)] *= scale;
            }
        }
    }
    norm += j_cur; // J_0
    for (double& v : out) {
        v /= norm;
    }
    return out;
}

double bessel_j(int m, double x) {
    return bessel_j_sequence(m, x).back();
}

} // namespace tphonon::special
