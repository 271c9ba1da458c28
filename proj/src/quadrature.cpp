#include "harmanlab/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace harmanlab {

namespace {

// 15-point Kronrod nodes on [-1,1] with the embedded 7-point Gauss rule
const double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

const double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

const double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <class T>
T gk15(const std::function<T(double)>& f, double a, double b, double* err) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    T fc = f(c);
    T resk = kWgk[7] * fc;
    T resg = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        double x = h * kXgk[j];
        T fv = f(c - x) + f(c + x);
        resk = resk + kWgk[j] * fv;
        if (j % 2 == 1) resg = resg + kWg[j / 2] * fv;
    }
    if (err) *err = std::abs(resk - resg) * std::abs(h);
    return resk * h;
}

template <class T>
T adapt(const std::function<T(double)>& f, double a, double b, double tol, int depth) {
    double err = 0;
    T whole = gk15<T>(f, a, b, &err);
    if (err <= tol || depth <= 0) return whole;
    double m = 0.5 * (a + b);
    return adapt<T>(f, a, m, tol / 2, depth - 1) + adapt<T>(f, m, b, tol / 2, depth - 1);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, int max_depth) {
    if (a == b) return 0.0;
    return adapt<double>(f, a, b, abs_tol, max_depth);
}

std::complex<double> integrate_adaptive_c(const std::function<std::complex<double>(double)>& f,
                                          double a, double b, double abs_tol, int max_depth) {
    if (a == b) return {0.0, 0.0};
    return adapt<std::complex<double>>(f, a, b, abs_tol, max_depth);
}

double gk15_panel(const std::function<double(double)>& f, double a, double b, double* err) {
    return gk15<double>(f, a, b, err);
}

}  // namespace harmanlab
