#pragma once

// The Buchstab function B(u): B(u) = 1/u on [1,2], (u B(u))' = B(u-1) beyond.
// Represented as a memoized grid driven by the integral recursion
// B(u) = (1 + int_1^{u-1} B(v) dv) / u, which is self-validating.

#include <vector>

namespace harmanlab {

class BuchstabTable {
  public:
    // h is snapped to 1/round(1/h) so that the kinks at integer u fall on grid
    // points and quadrature panels never straddle them
    explicit BuchstabTable(double u_max = 20.0, double h = 1e-4);

    // closed forms on [1,3], grid + cubic interpolation beyond; pre: 1 <= u <= u_max
    double eval(double u) const;

    // the integral-recursion route (1 + int_1^{u-1} B)/u, valid for u > 2;
    // independent of the closed form used on (2,3]
    double eval_integral_form(double u) const;

    // int_1^t B(v) dv for 1 <= t <= u_max
    double integral_to(double t) const;

    double u_max() const { return u_max_; }
    double step() const { return 1.0 / n_; }
    const std::vector<double>& grid() const { return val_; }
    double grid_u(size_t i) const { return 1.0 + (double)i / n_; }

  private:
    long long n_;        // grid points per unit interval
    double u_max_;
    std::vector<double> val_;   // B at 1 + i/n
    std::vector<double> cum_;   // int_1^{u_i} B

    double interp(double u) const;
};

}  // namespace harmanlab
