#include "harmanlab/constants.hpp"

#include <cmath>

#include "harmanlab/field.hpp"
#include "harmanlab/quadrature.hpp"

namespace harmanlab {

ThetaConstant c_theta(double theta, const BuchstabTable& B, double abs_tol) {
    const double two_sevenths = 2.0 / 7.0;
    if (theta < 0.25 - 1e-12 || theta > two_sevenths + 1e-12)
        throw precondition_error(
            "c_theta: theta must lie in [1/4, 2/7]; beyond 2/7 the correction "
            "regions are defined only in external work");
    theta = std::min(std::max(theta, 0.25), two_sevenths);

    ThetaConstant out;
    out.theta = theta;
    out.err_estimate = abs_tol;

    // I1: alpha in [1-2t, 1/2], beta in [1-t-a, (1-a)/2], 1/(a b (1-a-b));
    // inner integrals converge fully before the outer slice is accepted
    double a_lo = 1 - 2 * theta, a_hi = 0.5;
    if (a_hi - a_lo > 1e-14) {
        out.I1 = integrate_adaptive(
            [&](double a) {
                double b_lo = 1 - theta - a, b_hi = (1 - a) / 2;
                if (b_hi - b_lo <= 0) return 0.0;
                return integrate_adaptive(
                    [&](double b) { return 1.0 / (a * b * (1 - a - b)); }, b_lo, b_hi,
                    abs_tol / 10);
            },
            a_lo, a_hi, abs_tol / 2);
    }

    // I2: alpha in [(1-t)/3, t], beta in [(1-t-a)/2, a], B((1-a-b)/b) / (a b^2)
    a_lo = (1 - theta) / 3;
    a_hi = theta;
    if (a_hi - a_lo > 1e-14) {
        out.I2 = integrate_adaptive(
            [&](double a) {
                double b_lo = (1 - theta - a) / 2, b_hi = a;
                if (b_hi - b_lo <= 0) return 0.0;
                return integrate_adaptive(
                    [&](double b) {
                        double u = (1 - a - b) / b;
                        return B.eval(u) / (a * b * b);
                    },
                    b_lo, b_hi, abs_tol / 10);
            },
            a_lo, a_hi, abs_tol / 2);
    }

    out.value = 1.0 - out.I1 - out.I2;
    return out;
}

EnvelopeFit envelope_check(const std::vector<double>& grid, const BuchstabTable& B) {
    EnvelopeFit fit;
    double sxy = 0, sxx = 0;
    double prev = 2;
    for (double th : grid) {
        double c = c_theta(th, B).value;
        fit.thetas.push_back(th);
        fit.values.push_back(c);
        if (c > prev + 1e-12) fit.monotone_decreasing = false;
        prev = c;
        double x = (th - 0.25) * (th - 0.25);
        sxy += x * (1 - c);
        sxx += x * x;
    }
    fit.c_fit = sxx > 0 ? sxy / sxx : 0;
    for (size_t i = 0; i < grid.size(); ++i) {
        double x = (fit.thetas[i] - 0.25) * (fit.thetas[i] - 0.25);
        fit.max_residual = std::max(fit.max_residual,
                                    std::fabs((1 - fit.values[i]) - fit.c_fit * x));
    }
    return fit;
}

NuValue nu_of_eta(double eta) {
    const double theta = 7.0 / 22.0;
    if (eta < 0 || eta >= 7.0 / 44.0)
        throw precondition_error("nu_of_eta: 0 <= eta < 7/44 required (nu > 0)");
    NuValue v;
    v.eta = eta;
    v.branch1 = (theta / 2 - eta) / (1 + 2 * eta);
    v.branch2 = (0.25 - eta / 2) / (1.5 + eta);
    v.nu = std::min(v.branch1, v.branch2);
    return v;
}

}  // namespace harmanlab
