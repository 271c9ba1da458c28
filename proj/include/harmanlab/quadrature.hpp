#pragma once

// Adaptive Gauss-Kronrod (7-15) quadrature for real and complex integrands.

#include <complex>
#include <functional>

namespace harmanlab {

// absolute-error-targeted adaptive integration on [a, b]
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, int max_depth = 40);

std::complex<double> integrate_adaptive_c(const std::function<std::complex<double>(double)>& f,
                                          double a, double b, double abs_tol,
                                          int max_depth = 40);

// single GK15 panel value (no refinement); err receives |GK15 - G7|
double gk15_panel(const std::function<double(double)>& f, double a, double b, double* err);

}  // namespace harmanlab
