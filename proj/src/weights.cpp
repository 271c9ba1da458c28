#include "harmanlab/weights.hpp"

#include <cmath>
#include <mutex>

#include "harmanlab/quadrature.hpp"

namespace harmanlab {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kTwoPi = 2 * kPi;

double wrap01(double t) {
    t -= std::floor(t);
    return t >= 1.0 ? 0.0 : t;
}

double omega_gauss(double z, double width) {  // Omega_Delta(z) = exp(-pi z^2 / Delta^2)
    double q = z / width;
    double e = kPi * q * q;
    return e > 745 ? 0.0 : std::exp(-e);
}

// integrals over [0, xmax] by dyadic segments; a single adaptive pass on a
// wide interval can accept a near-zero first panel and miss mass sitting near 1
double integrate_dyadic(const std::function<double(double)>& f, double xmax, double tol) {
    double total = 0;
    double lo = 0, hi = std::min(1.0, xmax);
    int seg = 0;
    while (lo < xmax) {
        total += integrate_adaptive(f, lo, hi, tol);
        lo = hi;
        hi = std::min(hi * 2, xmax);
        if (++seg > 64) break;
    }
    return total;
}

std::complex<double> integrate_dyadic_c(const std::function<std::complex<double>(double)>& f,
                                        double xmax, double tol) {
    std::complex<double> total = 0;
    double lo = 0, hi = std::min(1.0, xmax);
    int seg = 0;
    while (lo < xmax) {
        total += integrate_adaptive_c(f, lo, hi, tol);
        lo = hi;
        hi = std::min(hi * 2, xmax);
        if (++seg > 64) break;
    }
    return total;
}
}  // namespace

double f_base(double x, int C) {
    double t = kPi * x * x;
    if (t <= 0) return 0.0;
    if (t > 700) return 0.0;
    double em = std::exp(-t);
    double l = -t + std::log1p(-em);  // log(e^-t - e^-2t)
    double v = C * l;
    return v < -745 ? 0.0 : std::exp(v);
}

double G_series(const FieldSpec& f, double theta, double x, int C) {
    if (!f.real()) throw precondition_error("G_series: real field required");
    if (x < 0) throw precondition_error("G_series: x >= 0 required");
    if (x == 0) return 0.0;
    double sx = std::sqrt(x);
    double total = 0;
    for (int dir = 0; dir < 2; ++dir) {
        for (int k = 0; k < 4000; ++k) {
            int n = dir == 0 ? k : -1 - k;
            double a = n + theta;
            double e1 = std::exp(a * f.log_eps);
            double term = f_base(e1 * sx, C) * f_base(sx / e1, C);
            total += term;
            // terms are unimodal in n + theta with peak at 0: only stop past it
            if (term < 1e-18 && (dir == 0 ? a >= 1 : a <= -1)) break;
        }
    }
    return total;
}

double psi_weight(const FieldSpec& f, double norm, double theta, double N, int C) {
    return 2.0 * G_series(f, theta, norm / N, C);
}

double imag_gauss_pow_constant(int C) {
    // int_0^inf (e^-pi v - e^-2pi v)^C dv; substituting t = e^{-pi v} turns the
    // alternating binomial sum into the Beta function B(C, C+1)/pi, which stays
    // stable where the literal sum cancels catastrophically
    return std::exp(std::lgamma(C) + std::lgamma(C + 1.0) - std::lgamma(2.0 * C + 1)) / kPi;
}

double real_product_constant_closed(const FieldSpec& f, int C) {
    // The alternating double sum collapses: each (a eps^2y + b eps^-2y)^-1
    // integrates to pi/(4 log eps sqrt(ab)), so the constant equals
    // S^2 / (2 log eps) with S = sum_a (-1)^a binom(C, 2C-a)/sqrt(a).
    // Resummed against 1/sqrt(t) = int u^{-1/2} e^{-tu} du / Gamma(1/2), the
    // alternating sum becomes a positive integral, stable for every C:
    // S = (1/sqrt(pi)) int_0^inf u^{-1/2} (e^{-u}(1 - e^{-u}))^C du.
    // The peak value (1/4)^C is rescaled out so adaptive refinement sees O(1).
    double shift = C * std::log(4.0);
    double S = integrate_adaptive(
                   [&](double u) {
                       if (u <= 0) return 0.0;
                       double l = C * (-u + std::log1p(-std::exp(-u))) + shift;
                       return l < -745 ? 0.0 : std::exp(l) / std::sqrt(u);
                   },
                   0.0, 60.0 / C + 40.0, 1e-13) /
               std::sqrt(kPi);
    double logS = std::log(S) - shift;
    return std::exp(2 * logS) / (2 * f.log_eps);
}

double real_product_constant(const FieldSpec& f, int C) {
    static std::map<std::pair<i64, int>, double> cache;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lk(mtx);
        auto it = cache.find({f.d, C});
        if (it != cache.end()) return it->second;
    }
    // (2/pi) sum_{a,b} coef int (a eps^2y + b eps^-2y)^-1 dy; summed against
    // the Gamma integral this is 2 int int F_y(x) dx dy with the nonnegative
    // F_y(x) = f(eps^y sqrt x) f(eps^-y sqrt x), free of the catastrophic
    // cancellation the literal alternating sum has at large C. The peak value
    // (1/16)^C is rescaled out so adaptive refinement sees O(1).
    double shift = 2.0 * C * std::log(4.0);
    auto f_log = [&](double x) {  // log f_base
        double t = kPi * x * x;
        if (t <= 0 || t > 740) return -1e30;
        return C * (-t + std::log1p(-std::exp(-t)));
    };
    double Y = ((std::log(900.0) + shift) / C + 8) / (2 * f.log_eps) + 2;
    double v = integrate_adaptive(
        [&](double y) {
            double e1 = std::exp(y * f.log_eps);
            double xmax = (900.0 + shift) / (kPi * C * std::min(e1 * e1, 1.0 / (e1 * e1)));
            return integrate_dyadic(
                [&](double x) {
                    double sx = std::sqrt(std::max(x, 0.0));
                    double l = f_log(e1 * sx) + f_log(sx / e1) + shift;
                    return l < -745 ? 0.0 : std::exp(l);
                },
                xmax, 1e-13);
        },
        -Y, Y, 1e-12);
    v = 2.0 * std::exp(std::log(v) - shift);
    std::lock_guard<std::mutex> lk(mtx);
    cache[{f.d, C}] = v;
    return v;
}

WeightSpec characteristic_weight(double N) {
    WeightSpec w;
    w.kind = WeightKind::Characteristic;
    w.N = N;
    return w;
}

WeightSpec imag_gauss_plain(const FieldSpec& f, double N) {
    if (!f.imaginary()) throw precondition_error("imag_gauss_plain: imaginary field");
    WeightSpec w;
    w.kind = WeightKind::ImagGaussPlain;
    w.field = &f;
    w.N = N;
    w.constant = kPi;
    return w;
}

WeightSpec imag_gauss_pow(const FieldSpec& f, double N, int C) {
    if (!f.imaginary()) throw precondition_error("imag_gauss_pow: imaginary field");
    WeightSpec w;
    w.kind = WeightKind::ImagGaussPow;
    w.field = &f;
    w.N = N;
    w.C = C;
    w.constant = imag_gauss_pow_constant(C);
    return w;
}

WeightSpec real_product_weight(const FieldSpec& f, double N, int C) {
    if (!f.real()) throw precondition_error("real_product_weight: real field");
    WeightSpec w;
    w.kind = WeightKind::RealProduct;
    w.field = &f;
    w.N = N;
    w.C = C;
    w.constant = real_product_constant(f, C);
    return w;
}

WeightSpec omega_tilde_imag(const FieldSpec& f, double N, int C, double delta, double alpha_re,
                            double alpha_im) {
    if (!f.imaginary()) throw precondition_error("omega_tilde_imag: imaginary field");
    WeightSpec w;
    w.kind = WeightKind::OmegaTilde;
    w.field = &f;
    w.N = N;
    w.C = C;
    w.delta = delta;
    w.alpha_re = alpha_re;
    w.alpha_im = alpha_im;
    return w;
}

WeightSpec omega_tilde_real(const FieldSpec& f, double N, int C, double delta, double x1,
                            double x2) {
    if (!f.real()) throw precondition_error("omega_tilde_real: real field");
    WeightSpec w;
    w.kind = WeightKind::OmegaTilde;
    w.field = &f;
    w.N = N;
    w.C = C;
    w.delta = delta;
    w.x1 = x1;
    w.x2 = x2;
    return w;
}

std::string WeightSpec::kind_name() const {
    switch (kind) {
        case WeightKind::Characteristic: return "characteristic";
        case WeightKind::ImagGaussPlain: return "imag_gauss_plain";
        case WeightKind::ImagGaussPow: return "imag_gauss_pow";
        case WeightKind::RealProduct: return "real_product";
        case WeightKind::OmegaTilde: return "omega_tilde";
    }
    return "?";
}

double WeightSpec::eval(double norm, double theta, const AlgInt* gen) const {
    if (norm < 1) return 0.0;
    double v = 0;
    switch (kind) {
        case WeightKind::Characteristic:
            v = norm <= N ? 1.0 : 0.0;
            break;
        case WeightKind::ImagGaussPlain: {
            double e = kPi * norm / N;
            v = e > 745 ? 0.0 : kPi * std::exp(-e);
            break;
        }
        case WeightKind::ImagGaussPow: {
            double t = kPi * norm / N;
            if (t > 700) { v = 0; break; }
            double l = -t + std::log1p(-std::exp(-t));
            double lv = C * l - std::log(constant);
            v = lv < -745 ? 0.0 : std::exp(lv);
            break;
        }
        case WeightKind::RealProduct:
            v = psi_weight(*field, norm, theta, N, C) / constant;
            break;
        case WeightKind::OmegaTilde: {
            if (!gen) throw precondition_error("omega_tilde eval needs a generator");
            double width = delta / std::sqrt(N);
            double F = 0;
            if (field->real()) {
                double s1 = gen->sigma1_real(), s2 = gen->sigma2_real();
                double t1 = x1 * s1, t2 = x2 * s2;
                double u0 = std::round((t1 + t2) / 2);
                double v0 = std::round((t1 - t2) / (2 * field->sqrt_abs_d));
                for (int du = -2; du <= 2; ++du)
                    for (int dv = -2; dv <= 2; ++dv) {
                        double pu = u0 + du, pv = v0 + dv;
                        double p1 = pu + pv * field->sqrt_abs_d;
                        double p2 = pu - pv * field->sqrt_abs_d;
                        F += omega_gauss(x1 - p1 / s1, width) * omega_gauss(x2 - p2 / s2, width);
                    }
                v = (N / norm) * psi_weight(*field, norm, theta, N, C) * F;
            } else {
                std::complex<double> q = gen->sigma1();
                std::complex<double> za = std::complex<double>(alpha_re, alpha_im);
                std::complex<double> zq = q * za;
                double wi = field->omega_im(), wr = field->omega_re();
                double yc = zq.imag() / wi, xc = zq.real() - yc * wr;
                double u0 = std::round(xc), v0 = std::round(yc);
                for (int du = -2; du <= 2; ++du)
                    for (int dv = -2; dv <= 2; ++dv) {
                        std::complex<double> a(u0 + du + (v0 + dv) * wr, (v0 + dv) * wi);
                        std::complex<double> z = za - a / q;
                        double ycz = z.imag() / wi, xcz = z.real() - ycz * wr;
                        F += omega_gauss(xcz, width) * omega_gauss(ycz, width);
                    }
                double t = kPi * norm / N;
                double psi = (t > 700 / C) ? 0.0
                                           : std::exp(C * (-t + std::log1p(-std::exp(-t))));
                v = (N / norm) * psi * F;
            }
            break;
        }
    }
    return scale * v;
}

i64 WeightSpec::support_cutoff(double tol) const {
    double lt = std::log(1.0 / tol) + std::log(std::max(N, 10.0)) + 10;
    double vstar;
    switch (kind) {
        case WeightKind::Characteristic:
            return (i64)std::floor(N);
        case WeightKind::ImagGaussPlain:
            vstar = lt / kPi;
            break;
        case WeightKind::ImagGaussPow:
            vstar = (lt + std::fabs(std::log(constant))) / (kPi * C);
            break;
        case WeightKind::RealProduct:
            vstar = (lt + std::fabs(std::log(constant))) / (2 * kPi * C);
            break;
        case WeightKind::OmegaTilde:
            vstar = (lt + std::log(std::max(N, 10.0))) / (2 * kPi * C);
            break;
        default:
            vstar = lt;
    }
    vstar = std::max(vstar, 2.0);
    double cut = N * vstar;
    if (cut > 4e9) throw budget_error("support_cutoff: weight support beyond 4e9");
    return (i64)std::ceil(cut);
}

double weight_eval_ideal(const PrimeTable& t, const WeightSpec& w, const IdealRep& a) {
    double theta = w.needs_theta() ? theta_of(t, a) : 0.0;
    if (w.needs_generator()) {
        AlgInt g = generator(t, a);
        return w.eval((double)a.norm, theta, &g);
    }
    return w.eval((double)a.norm, theta);
}

// ---------------------------------------------------------------------------
// Fourier coefficients and Hecke characters
// ---------------------------------------------------------------------------

std::vector<double> fourier_cm_batch(const FieldSpec& f, int mmax, double x, int C) {
    const int K = 4096;
    std::vector<double> g(K);
    for (int j = 0; j < K; ++j) g[j] = G_series(f, (double)j / K, x, C);
    std::vector<double> out(mmax + 1);
    for (int m = 0; m <= mmax; ++m) {
        double s = 0;
        for (int j = 0; j < K; ++j) s += g[j] * std::cos(kTwoPi * m * j / K);
        out[m] = s / K;
    }
    return out;
}

double fourier_cm(const FieldSpec& f, int m, double x, int C) {
    int am = std::abs(m);
    return fourier_cm_batch(f, am, x, C)[am];
}

double fourier_cm_unfolded(const FieldSpec& f, int m, double x, int C) {
    if (x <= 0) return 0.0;
    double sx = std::sqrt(x);
    // beyond |y| = Y both factors vanish to double precision
    double Y = std::max(4.0, (std::log(900.0 / kPi) - std::log(x)) / (4 * f.log_eps) + 4);
    auto integrand = [&](double y) {
        double e1 = std::exp(y * f.log_eps);
        return f_base(e1 * sx, C) * f_base(sx / e1, C) * std::cos(kTwoPi * m * y);
    };
    // resolve the oscillation: panels of half an oscillation period
    double L = (m == 0) ? Y : std::min(Y, 0.5 / std::abs((double)m));
    double total = 0;
    for (double a = -Y; a < Y - 1e-12; a += L) {
        double b = std::min(a + L, Y);
        total += integrate_adaptive(integrand, a, b, 1e-13);
    }
    return total;
}

std::complex<double> hecke_lambda(const FieldSpec& f, int m, const AlgInt& gen) {
    if (!f.real()) throw precondition_error("hecke_lambda: real field required");
    if (gen.is_zero()) throw precondition_error("hecke_lambda: zero ideal");
    double t = std::log(std::fabs(gen.sigma1_real() / gen.sigma2_real())) / (2 * f.log_eps);
    double ang = kTwoPi * m * t;
    return {std::cos(ang), std::sin(ang)};
}

C128 hecke_lambda_q(const FieldSpec& f, int m, const AlgInt& gen) {
    if (gen.is_zero()) throw precondition_error("hecke_lambda_q: zero ideal");
    f128 t = logq(fabsq(gen.sigma1_q() / gen.sigma2_q())) / (2 * f.log_eps_q);
    f128 ang = 2 * PI_Q * m * t;
    return {cosq(ang), sinq(ang)};
}

// ---------------------------------------------------------------------------
// Mellin transform
// ---------------------------------------------------------------------------

std::complex<double> complex_gamma(std::complex<double> s) {
    // Lanczos, g = 7, n = 9
    static const double g = 7;
    static const double c[9] = {0.99999999999980993,  676.5203681218851,   -1259.1392167224028,
                                771.32342877765313,   -176.61502916214059, 12.507343278686905,
                                -0.13857109526572012, 9.9843695780195716e-6,
                                1.5056327351493116e-7};
    if (s.real() < 0.5) {
        // reflection: Gamma(s) = pi / (sin(pi s) Gamma(1-s))
        return kPi / (std::sin(kPi * s) * complex_gamma(1.0 - s));
    }
    s -= 1.0;
    std::complex<double> x = c[0];
    for (int i = 1; i < 9; ++i) x += c[i] / (s + (double)i);
    std::complex<double> t = s + g + 0.5;
    return std::sqrt(2 * kPi) * std::pow(t, s + 0.5) * std::exp(-t) * x;
}

std::complex<double> mellin_phi(const FieldSpec& f, double y, std::complex<double> s, int C) {
    if (!f.real()) throw precondition_error("mellin_phi: real field required");
    if (s.real() <= 0) throw precondition_error("mellin_phi: Re(s) > 0 required");
    y = std::fabs(y);  // phi_y = phi_{-y} by the a<->b swap; make it bit-exact
    std::complex<double> sum = 0;
    double e2y = std::exp(2 * y * f.log_eps), e2ym = 1.0 / e2y;
    for (int a = C; a <= 2 * C; ++a)
        for (int b = C; b <= 2 * C; ++b) {
            double coef = (((a + b) % 2) ? -1.0 : 1.0) * (double)binom(C, 2 * C - a) *
                          (double)binom(C, 2 * C - b);
            double base = a * e2y + b * e2ym;
            sum += coef * std::exp(-s * std::log(base));
        }
    return std::exp(-s * std::log(kPi)) * complex_gamma(s) * sum;
}

std::complex<double> mellin_phi_quadrature(const FieldSpec& f, double y, std::complex<double> s,
                                           int C, double tol) {
    if (s.real() <= 0) throw precondition_error("mellin_phi_quadrature: Re(s) > 0 required");
    double e2y = std::exp(2 * y * f.log_eps), e2ym = 1.0 / e2y;
    auto Fy = [&](double x) {
        auto part = [&](double r) {
            double t = kPi * r * x;
            if (t > 700 || t <= 0) return 0.0;
            double l = -t + std::log1p(-std::exp(-t));
            double v = C * l;
            return v < -745 ? 0.0 : std::exp(v);
        };
        return part(e2y) * part(e2ym);
    };
    double xmax = 800.0 / (kPi * std::min(e2y, e2ym) * C) + 10;
    auto integrand = [&](double x) -> std::complex<double> {
        if (x <= 0) return {0, 0};
        // x^{s-1} = exp((s-1) log x)
        return std::exp((s - 1.0) * std::log(x)) * Fy(x);
    };
    return integrate_dyadic_c(integrand, xmax, tol);
}

// ---------------------------------------------------------------------------
// Boxed-condition audits
// ---------------------------------------------------------------------------

namespace {

// sum_{s in P} W(rs) truncated where the weight support ends
double prime_sum(const PrimeTable& t, const WeightSpec& w, i64 r_norm, double r_theta,
                 double tol) {
    if (w.needs_generator() && r_norm > 1)
        throw precondition_error("prime_sum: generator-dependent weights support r = O only");
    i64 cutoff = w.support_cutoff(tol);
    i64 max_prime = cutoff / std::max<i64>(r_norm, 1);
    double total = 0;
    if (w.needs_theta() || w.needs_generator()) {
        if (max_prime >= t.norm_bound())
            throw budget_error("prime_sum: table must cover norms up to " +
                               std::to_string(max_prime));
        for (const PrimeIdeal& P : t.ideals()) {
            if (P.norm > max_prime) break;
            double th = wrap01(r_theta + P.theta);
            if (w.needs_generator()) {
                AlgInt g = P.gen;  // generator of rs only correct for r = O; audits use r = O here
                total += w.eval((double)r_norm * P.norm, th, &g);
            } else {
                total += w.eval((double)r_norm * P.norm, th);
            }
        }
    } else {
        for_each_prime_ideal_norm(t.field(), max_prime + 1, [&](i64 nrm, int count) {
            total += count * w.eval((double)r_norm * (double)nrm);
        });
    }
    return total;
}

}  // namespace

ConditionReport audit_keycond(const PrimeTable& t, const WeightSpec& w, const IdealRep& r,
                              AuditOptions opts) {
    double N = w.N;
    if ((double)r.norm > N / 2) throw precondition_error("keycond: N(r) <= N/2 required");
    double r_theta = w.needs_theta() ? theta_of(t, r) : 0.0;
    double y = N / (double)r.norm;
    ConditionReport rep;
    rep.condition = "keycond";
    rep.lhs = prime_sum(t, w, r.norm, r_theta, opts.tail_tol);
    rep.rhs_model = y / std::log(y);
    rep.ratio = rep.lhs / rep.rhs_model;
    double tol = opts.c_audit * std::log(std::log(N)) / std::log(y);
    rep.pass = std::fabs(rep.ratio - 1.0) <= tol;
    rep.params = {{"N", N}, {"r_norm", (double)r.norm}, {"c_audit", opts.c_audit},
                  {"tolerance", tol}, {"C", (double)w.C}};
    return rep;
}

ConditionReport audit_finitecond(const PrimeTable& t, const WeightSpec& w, const IdealRep& r,
                                 double eps, AuditOptions opts) {
    double N = w.N;
    if ((double)r.norm > N / 2) throw precondition_error("finitecond: N(r) <= N/2 required");
    if (w.needs_generator() && r.norm > 1)
        throw precondition_error("finitecond: generator-dependent weights support r = O only");
    double r_theta = w.needs_theta() ? theta_of(t, r) : 0.0;
    ConditionReport rep;
    rep.condition = "finitecond";
    double worst = 0, worst_np = 0;
    // partial sums at a grid of cut primes with N(p) >= N^eps
    std::vector<double> cuts = {std::pow(N, eps), std::pow(N, 0.5), N / 2, N, 2 * N};
    for (double z : cuts) {
        if (z >= (double)t.norm_bound()) break;
        size_t qi = t.q_index(std::max(2.0, z));
        double np = (double)t[qi].norm;
        double partial = 0;
        for (size_t i = 0; i < qi; ++i) {
            double th = wrap01(r_theta + t[i].theta);
            AlgInt g = t[i].gen;
            partial += w.eval((double)r.norm * t[i].norm, th,
                              w.needs_generator() ? &g : nullptr);
        }
        double model = np / std::log(np);
        if (partial / model > worst) {
            worst = partial / model;
            worst_np = np;
        }
    }
    rep.lhs = worst;
    rep.rhs_model = 1.0;
    rep.ratio = worst;
    rep.pass = worst <= opts.c_audit;
    rep.params = {{"N", N}, {"eps", eps}, {"worst_prime_norm", worst_np},
                  {"c_audit", opts.c_audit}};
    return rep;
}

ConditionReport audit_tailcond(const PrimeTable& t, const WeightSpec& w, const IdealRep& r,
                               double xi, AuditOptions opts) {
    double N = w.N;
    if ((double)r.norm > N / 2) throw precondition_error("tailcond: N(r) <= N/2 required");
    double r_theta = w.needs_theta() ? theta_of(t, r) : 0.0;
    double Ntilde = N * std::pow(std::log(N), xi);
    i64 cutoff = w.support_cutoff(opts.tail_tol);
    i64 max_norm = cutoff / std::max<i64>(r.norm, 1);
    double lhs = 0;
    bool with_gen = w.needs_generator();
    for_each_sifted_ideal(t, 0, max_norm, with_gen,
                          [&](i64 n, double th, i64, const AlgInt* g) {
                              double nr = (double)n * (double)r.norm;
                              if (nr <= Ntilde) return;
                              lhs += w.eval(nr, wrap01(r_theta + th), g);
                          });
    double y = N / (double)r.norm;
    ConditionReport rep;
    rep.condition = "tailcond";
    rep.lhs = lhs;
    rep.rhs_model = y / (std::log(y) * std::log(y));
    rep.ratio = lhs / rep.rhs_model;
    rep.pass = rep.ratio <= opts.c_audit;
    // the imaginary Gaussian satisfies the stronger exp(-(log N)^{xi/2}) bound
    rep.params = {{"N", N}, {"xi", xi}, {"Ntilde", Ntilde},
                  {"stronger_rhs", y * std::exp(-std::pow(std::log(N), xi / 2))},
                  {"c_audit", opts.c_audit}};
    return rep;
}

ConditionReport audit_Xcond(const PrimeTable& t, const WeightSpec& w, double eps, double A,
                            AuditOptions opts) {
    double N = w.N;
    double x = std::pow(N, 1.0 / (1.0 - eps));
    i64 max_norm = w.support_cutoff(opts.tail_tol);
    double lhs = 0;
    for_each_sifted_ideal(t, 0, max_norm, w.needs_generator(),
                          [&](i64 n, double th, i64 d5, const AlgInt* g) {
                              lhs += (double)d5 * w.eval((double)n, th, g);
                          });
    ConditionReport rep;
    rep.condition = "Xcond";
    rep.lhs = lhs;
    rep.rhs_model = std::pow(x, A);
    rep.ratio = lhs / rep.rhs_model;
    rep.pass = lhs <= rep.rhs_model;
    rep.params = {{"N", N}, {"eps", eps}, {"A", A}, {"x", x}};
    return rep;
}

ConditionReport audit_newsmallandlarge(const PrimeTable& t, const WeightSpec& w, double eps,
                                       double eta, double rhs_lambda, AuditOptions opts) {
    double N = w.N;
    double x = std::pow(N, 1.0 / (1.0 - eps));
    double iota = 2 * eps;
    double lo = std::pow(x, 1.0 - iota);
    i64 max_norm = w.support_cutoff(opts.tail_tol);
    double lhs = 0;
    for_each_sifted_ideal(t, 0, max_norm, w.needs_generator(),
                          [&](i64 n, double th, i64 d5, const AlgInt* g) {
                              if ((double)n > lo && (double)n < x) return;
                              lhs += (double)d5 * w.eval((double)n, th, g);
                          });
    ConditionReport rep;
    rep.condition = "newsmallandlarge";
    rep.lhs = lhs;
    rep.rhs_model = rhs_lambda * std::pow(N, 1.0 - eta);
    rep.ratio = rep.rhs_model > 0 ? lhs / rep.rhs_model : 0;
    rep.pass = lhs <= rep.rhs_model;
    rep.params = {{"N", N}, {"eps", eps}, {"iota", iota}, {"eta", eta},
                  {"lambda", rhs_lambda}, {"x", x}};
    return rep;
}

ConditionReport audit_needed_w_bound(const PrimeTable& t, const WeightSpec& w, double eps,
                                     int samples, AuditOptions opts) {
    double N = w.N;
    double x = std::pow(N, 1.0 / (1.0 - eps));
    double bound = std::pow(x, 1.0 - 2 * eps);
    double worst = 0, worst_norm = 0;
    i64 count = 0;
    i64 stride = 1;
    // sample ideals of norm below x^{1-2eps}
    std::vector<std::pair<double, double>> probes;
    for_each_sifted_ideal(t, 0, (i64)std::min(bound, (double)t.norm_bound() - 1), w.needs_theta(),
                          [&](i64 n, double th, i64, const AlgInt*) {
                              probes.push_back({(double)n, th});
                          });
    stride = std::max<i64>(1, (i64)probes.size() / std::max(samples, 1));
    for (size_t i = 0; i < probes.size(); i += stride) {
        double v = w.eval(probes[i].first, probes[i].second) * x;
        ++count;
        if (v > worst) {
            worst = v;
            worst_norm = probes[i].first;
        }
    }
    ConditionReport rep;
    rep.condition = "neededWbound";
    rep.lhs = worst;  // fitted c in W <= c / x
    rep.rhs_model = opts.c_audit;
    rep.ratio = worst / opts.c_audit;
    rep.pass = worst <= opts.c_audit;
    rep.params = {{"N", N}, {"eps", eps}, {"x", x}, {"norm_bound", bound},
                  {"samples", (double)count}, {"worst_norm", worst_norm},
                  {"C", (double)w.C}, {"C_required", 1.0 / eps}};
    return rep;
}

}  // namespace harmanlab
