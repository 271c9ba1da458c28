#include "harmanlab/buchstab.hpp"

#include <cmath>
#include <stdexcept>

#include "harmanlab/field.hpp"

namespace harmanlab {

namespace {

// integral of the Lagrange cubic through (s_k, f_k) over [0, fr], s in panel units
double cubic_partial_integral(const double s[4], const double f[4], double fr) {
    double total = 0;
    for (int i = 0; i < 4; ++i) {
        double r[3];
        int m = 0;
        double den = 1;
        for (int k = 0; k < 4; ++k) {
            if (k == i) continue;
            r[m++] = s[k];
            den *= s[i] - s[k];
        }
        double e1 = r[0] + r[1] + r[2];
        double e2 = r[0] * r[1] + r[0] * r[2] + r[1] * r[2];
        double e3 = r[0] * r[1] * r[2];
        double F = fr * fr * fr * fr / 4 - e1 * fr * fr * fr / 3 + e2 * fr * fr / 2 - e3 * fr;
        total += f[i] * F / den;
    }
    return total;
}

}  // namespace

BuchstabTable::BuchstabTable(double u_max, double h) {
    if (u_max < 2.0 || u_max > 50.0) throw precondition_error("BuchstabTable: 2 <= u_max <= 50");
    if (h <= 0 || h > 1e-3 + 1e-12) throw precondition_error("BuchstabTable: h <= 1e-3");
    n_ = (long long)std::llround(1.0 / h);
    long long m = (long long)std::llround((u_max - 1.0) * (double)n_);
    u_max_ = 1.0 + (double)m / (double)n_;
    val_.resize(m + 1);
    cum_.assign(m + 1, 0.0);

    const double hh = 1.0 / (double)n_;
    for (long long i = 0; i <= std::min(m, 2 * n_); ++i) {
        double u = grid_u(i);
        val_[i] = (i <= n_) ? 1.0 / u : (1.0 + std::log(u - 1.0)) / u;
    }

    // one-sided 4-point interval rules at the kinks (indices multiple of n)
    auto panel = [&](long long j) -> double {  // int over [u_{j-1}, u_j]
        auto F = [&](long long k) { return val_[k]; };
        const long long last = (long long)val_.size() - 1;
        bool kink_right = (j % n_ == 0);
        bool kink_left = ((j - 1) % n_ == 0) && j - 1 > 0;
        if ((j == 1 || kink_left) && j + 2 <= last)
            return hh * (9 * F(j - 1) + 19 * F(j) - 5 * F(j + 1) + F(j + 2)) / 24.0;
        if (kink_right || j + 1 > last)
            return hh * (F(j - 3) - 5 * F(j - 2) + 19 * F(j - 1) + 9 * F(j)) / 24.0;
        return hh * (-F(j - 2) + 13 * F(j - 1) + 13 * F(j) - F(j + 1)) / 24.0;
    };

    long long cum_filled = 0;
    auto extend_cum = [&](long long upto) {
        for (long long j = cum_filled + 1; j <= upto; ++j) cum_[j] = cum_[j - 1] + panel(j);
        if (upto > cum_filled) cum_filled = upto;
    };

    if (m > 2 * n_) {
        for (long long i = 2 * n_ + 1; i <= m; ++i) {
            extend_cum(i - n_);  // needs val_ up to i-n+1 <= i-1, already known
            val_[i] = (1.0 + cum_[i - n_]) / grid_u(i);
        }
    }
    extend_cum(m);
}

double BuchstabTable::interp(double u) const {
    long long m = (long long)val_.size() - 1;
    double x = (u - 1.0) * (double)n_;
    long long j = (long long)std::floor(x);
    if (j >= m) j = m - 1;
    // clamp the stencil inside the smooth segment [seg*n, (seg+1)*n]
    long long seg_lo = (j / n_) * n_, seg_hi = std::min(seg_lo + n_, m);
    long long k0 = std::max(seg_lo, std::min(j - 1, seg_hi - 3));
    double s[4], f[4];
    for (int i = 0; i < 4; ++i) {
        s[i] = (double)(k0 + i - j);
        f[i] = val_[k0 + i];
    }
    double fr = x - (double)j;
    // Lagrange evaluation at fr
    double out = 0;
    for (int i = 0; i < 4; ++i) {
        double term = f[i];
        for (int k = 0; k < 4; ++k)
            if (k != i) term *= (fr - s[k]) / (s[i] - s[k]);
        out += term;
    }
    return out;
}

double BuchstabTable::integral_to(double t) const {
    if (t < 1.0 - 1e-12 || t > u_max_ + 1e-12)
        throw precondition_error("BuchstabTable::integral_to: t out of range");
    t = std::min(std::max(t, 1.0), u_max_);
    long long m = (long long)val_.size() - 1;
    double x = (t - 1.0) * (double)n_;
    long long j = (long long)std::floor(x);
    if (j > m) j = m;
    double fr = x - (double)j;
    double base = cum_[j];
    if (fr <= 0) return base;
    long long seg_lo = (j / n_) * n_, seg_hi = std::min(seg_lo + n_, m);
    long long k0 = std::max(seg_lo, std::min(j - 1, seg_hi - 3));
    double s[4], f[4];
    for (int i = 0; i < 4; ++i) {
        s[i] = (double)(k0 + i - j);
        f[i] = val_[k0 + i];
    }
    return base + cubic_partial_integral(s, f, fr) / (double)n_;
}

double BuchstabTable::eval(double u) const {
    if (u < 1.0 || u > u_max_ + 1e-12)
        throw precondition_error("BuchstabTable::eval: 1 <= u <= u_max required");
    if (u <= 2.0) return 1.0 / u;
    if (u <= 3.0) return (1.0 + std::log(u - 1.0)) / u;
    return interp(std::min(u, u_max_));
}

double BuchstabTable::eval_integral_form(double u) const {
    if (u <= 2.0 || u > u_max_ + 1e-12)
        throw precondition_error("eval_integral_form: 2 < u <= u_max required");
    return (1.0 + integral_to(u - 1.0)) / u;
}

}  // namespace harmanlab
