#pragma once

// The lower-bound sieve constant C(theta) on [1/4, 2/7] and the exponent map
// nu(eta). Beyond 2/7 the defining regions live only in external work, so
// c_theta rejects instead of extrapolating.

#include <vector>

#include "harmanlab/buchstab.hpp"

namespace harmanlab {

struct ThetaConstant {
    double theta = 0;
    double value = 0;         // 1 - I1 - I2
    double I1 = 0, I2 = 0;
    double err_estimate = 0;  // quadrature tolerance actually requested
};

// C(theta) = 1 - int_{1-2t}^{1/2} int_{1-t-a}^{(1-a)/2} db da / (a b (1-a-b))
//          -     int_{(1-t)/3}^{t} int_{(1-t-a)/2}^{a} B((1-a-b)/b) db da / (a b^2)
// pre: 1/4 <= theta <= 2/7; absolute error <= 1e-7
ThetaConstant c_theta(double theta, const BuchstabTable& B, double abs_tol = 1e-8);

struct EnvelopeFit {
    std::vector<double> thetas, values;
    double c_fit = 0;          // least-squares constant in 1 - C = c (theta - 1/4)^2
    double max_residual = 0;   // max |(1-C) - c_fit (theta-1/4)^2|
    bool monotone_decreasing = true;
};

EnvelopeFit envelope_check(const std::vector<double>& grid, const BuchstabTable& B);

struct NuValue {
    double eta = 0;
    double branch1 = 0;  // (theta/2 - eta) / (1 + 2 eta) at theta = 7/22
    double branch2 = 0;  // (1/4 - eta/2) / (3/2 + eta)
    double nu = 0;       // min of the branches
};

// pre: 0 <= eta < 7/44 (nu > 0)
NuValue nu_of_eta(double eta);

}  // namespace harmanlab
