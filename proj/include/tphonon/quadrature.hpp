// quadrature.hpp — panel quadrature helpers over Boost.Math Gauss/Gauss-Kronrod rules

#pragma once

#include <cmath>
#include <cstddef>
#include <string>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "tphonon/errors.hpp"

namespace tphonon::quad {

// Neumaier-compensated running sum. Summation order is the call order, so
// results are reproducible given a fixed evaluation sequence.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            correction_ += (sum_ - t) + x;
        } else {
            correction_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const { return sum_ + correction_; }

private:
    double sum_{0.0};
    double correction_{0.0};
};

struct Estimate {
    double value{0.0};
    double error{0.0}; // Σ |Kronrod - Gauss| over panels
    std::size_t panels{0};
};

// Fixed Gauss-Legendre rule on `panels` equal sub-intervals of [a, b].
template <unsigned Points, class F>
double gauss_panels(F&& f, double a, double b, std::size_t panels) {
    using rule = boost::math::quadrature::gauss<double, Points>;
    const double width = (b - a) / static_cast<double>(panels);
    CompensatedSum total;
    for (std::size_t p = 0; p < panels; ++p) {
        const double lo = a + width * static_cast<double>(p);
        const double hi = (p + 1 == panels) ? b : lo + width;
        total.add(rule::integrate(f, lo, hi));
    }
    return total.value();
}

// Non-adaptive Gauss-Kronrod on `panels` equal sub-intervals; the embedded
// Gauss rule supplies a (pessimistic) error estimate per panel.
template <unsigned Points = 15, class F>
Estimate kronrod_panels(F&& f, double a, double b, std::size_t panels) {
    using rule = boost::math::quadrature::gauss_kronrod<double, Points>;
    const double width = (b - a) / static_cast<double>(panels);
    CompensatedSum total;
    CompensatedSum error;
    for (std::size_t p = 0; p < panels; ++p) {
        const double lo = a + width * static_cast<double>(p);
        const double hi = (p + 1 == panels) ? b : lo + width;
        double err = 0.0;
        total.add(rule::integrate(f, lo, hi, 0, 0.0, &err));
        error.add(err);
    }
    return {total.value(), error.value(), panels};
}

// Globally adaptive: doubles the panel count until the summed error estimate
// is below max(rel_tol * |value|, abs_tol). Throws ConvergenceError carrying
// the achieved error when max_doublings is exhausted.
template <unsigned Points = 15, class F>
Estimate refine_panels(F&& f, double a, double b, std::size_t initial_panels, double rel_tol,
                       double abs_tol, const std::string& what, int max_doublings = 8) {
    std::size_t panels = initial_panels == 0 ? 1 : initial_panels;
    Estimate est;
    for (int round = 0; round <= max_doublings; ++round) {
        est = kronrod_panels<Points>(f, a, b, panels);
        if (!std::isfinite(est.value)) {
            break;
        }
        if (est.error <= std::max(rel_tol * std::abs(est.value), abs_tol)) {
            return est;
        }
        panels *= 2;
    }
    throw ConvergenceError(what + ": quadrature reached error " + std::to_string(est.error) +
                               " for value " + std::to_string(est.value),
                           est.error);
}

} // namespace tphonon::quad
