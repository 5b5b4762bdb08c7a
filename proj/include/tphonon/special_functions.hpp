// special_functions.hpp — sine integral and integer-order Bessel J

#pragma once

#include <vector>

namespace tphonon::special {

// Si(x) = ∫_0^x sin t / t dt. Power series for |x| <= 4; beyond that
// Si = π/2 - f(x) cos x - g(x) sin x with the auxiliary functions f, g taken
// from the continued fraction of E_1(ix). Absolute accuracy ~1e-15.
double sine_integral(double x);

// J_0(x) .. J_max_order(x) for x >= 0 by Miller's downward recurrence,
// normalized with J_0 + 2 Σ J_2k = 1.
std::vector<double> bessel_j_sequence(int max_order, double x);

// Single J_m(x), m >= 0, x >= 0.
double bessel_j(int m, double x);

// Starting order for the downward recurrence: far enough above max(m, x)
// that the neglected tail is below double precision.
int miller_start_order(int max_order, double x);

} // namespace tphonon::special
