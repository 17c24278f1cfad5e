// Numerical special functions for the lift and its closed forms:
// K- and J-Bessel, Gauss 2F1, and the Appell F4 double series.
#pragma once

#include <complex>

#include "ortheta/errors.hpp"

namespace ortheta {

struct SpecialValue {
    double value = 0;
    double error_estimate = 0;
};

// modified Bessel function of the second kind, nu >= 0, x > 0
SpecialValue bessel_K(double nu, double x);
// Bessel function of the first kind, nu >= 0, x >= 0
SpecialValue bessel_J(double nu, double x);
// Gauss hypergeometric series with Pfaff transformation for z < 0
SpecialValue gauss_2F1(double a, double b, double c, double z);
// Appell F4 truncated double series, sqrt|x| + sqrt|y| < 1
SpecialValue appell_F4(double a, double b, double c, double d, double x, double y,
                       int max_index_sum = 200);

double log_gamma(double x);
double gamma_fn(double x);

} // namespace ortheta
