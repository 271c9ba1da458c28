#pragma once

// Weight families on ideals (characteristic, imaginary Gaussian-power,
// real product Psi) with their normalizing constants, audits of the five
// boxed sieve conditions, and the Hecke-character / Fourier / Mellin
// machinery for real quadratic fields.

#include <complex>
#include <map>
#include <string>

#include "harmanlab/ideals.hpp"

namespace harmanlab {

// (exp(-pi x^2) - exp(-2 pi x^2))^C, evaluated in log space so large C never underflows
double f_base(double x, int C);

enum class WeightKind {
    Characteristic,  // 1_{1 <= N(a) <= N}
    ImagGaussPlain,  // pi * exp(-pi N(a)/N)
    ImagGaussPow,    // (exp(-pi N/N) - exp(-2 pi N/N))^C / constant
    RealProduct,     // Psi(a) / constant
    OmegaTilde,      // approximation detector (N/N(q)) Psi(q) F(q)
};

struct WeightSpec {
    WeightKind kind = WeightKind::Characteristic;
    const FieldSpec* field = nullptr;
    double N = 1;
    int C = 1;
    double constant = 1;  // normalizer for the Gaussian-power / product families
    double scale = 1;     // extra multiplier (lambda in omega = lambda W)
    double delta = 0;     // omega_tilde width parameter
    double alpha_re = 0, alpha_im = 0;  // omega_tilde target, imaginary case
    double x1 = 0, x2 = 0;              // omega_tilde target, real case

    bool is_characteristic() const { return kind == WeightKind::Characteristic; }
    bool needs_generator() const { return kind == WeightKind::OmegaTilde; }
    bool needs_theta() const {
        return kind == WeightKind::RealProduct || (kind == WeightKind::OmegaTilde && field->real());
    }

    // weight of an ideal from its norm, direction coordinate theta (real
    // fields) and, for omega_tilde, a generator
    double eval(double norm, double theta = 0, const AlgInt* gen = nullptr) const;

    // norm beyond which every term (and the summed tail, at desk scale) is below tol
    i64 support_cutoff(double tol = 1e-15) const;

    std::string kind_name() const;
};

WeightSpec characteristic_weight(double N);
WeightSpec imag_gauss_plain(const FieldSpec& f, double N);
WeightSpec imag_gauss_pow(const FieldSpec& f, double N, int C);
WeightSpec real_product_weight(const FieldSpec& f, double N, int C);
WeightSpec omega_tilde_imag(const FieldSpec& f, double N, int C, double delta,
                            double alpha_re, double alpha_im);
WeightSpec omega_tilde_real(const FieldSpec& f, double N, int C, double delta,
                            double x1, double x2);

// weight of an ideal represented over a table (computes theta / generator as needed)
double weight_eval_ideal(const PrimeTable& t, const WeightSpec& w, const IdealRep& a);

// unnormalized Psi(n) = 2 G(theta, norm/N)
double psi_weight(const FieldSpec& f, double norm, double theta, double N, int C);

// normalizers
double imag_gauss_pow_constant(int C);                        // int_0^inf (e^-pi v - e^-2pi v)^C dv
double real_product_constant(const FieldSpec& f, int C);      // adaptive quadrature, cached per (d, C)
double real_product_constant_closed(const FieldSpec& f, int C);  // arctan closed form

// G(theta, x) = sum_n f(eps^{n+theta} sqrt x) f(eps^{-(n+theta)} sqrt x); period 1 in theta
double G_series(const FieldSpec& f, double theta, double x, int C);

// c_m(x) = int_0^1 G(theta, x) e(-m theta) d theta (real; G is even)
double fourier_cm(const FieldSpec& f, int m, double x, int C);
// the unfolded form int_{-inf}^{inf} f(eps^y sqrt x) f(eps^-y sqrt x) e(-m y) dy
double fourier_cm_unfolded(const FieldSpec& f, int m, double x, int C);
// batch of c_m for m = 0..mmax (c_{-m} = c_m)
std::vector<double> fourier_cm_batch(const FieldSpec& f, int mmax, double x, int C);

// lambda^m(n) = e(m log|sigma1(k)/sigma2(k)| / (2 log eps)); unit-invariant
std::complex<double> hecke_lambda(const FieldSpec& f, int m, const AlgInt& gen);
C128 hecke_lambda_q(const FieldSpec& f, int m, const AlgInt& gen);

// phi_y(s) = pi^-s Gamma(s) sum_{a,b=C}^{2C} (-1)^{a+b} binom(C,2C-a) binom(C,2C-b) (a e^{2y} + b e^{-2y})^-s
std::complex<double> mellin_phi(const FieldSpec& f, double y, std::complex<double> s, int C);
// direct numerical Mellin integral of F_y (oracle route)
std::complex<double> mellin_phi_quadrature(const FieldSpec& f, double y, std::complex<double> s,
                                           int C, double tol = 1e-10);
std::complex<double> complex_gamma(std::complex<double> s);

struct ConditionReport {
    std::string condition;
    double lhs = 0;
    double rhs_model = 0;
    double ratio = 0;
    bool pass = false;
    std::map<std::string, double> params;
};

struct AuditOptions {
    double c_audit = 3.0;     // tolerance multiplier on the modelled error term
    double tail_tol = 1e-9;   // absolute truncation target for smooth sums
};

// sum_{s in P} W(rs) vs (N/N(r)) / log(N/N(r)); pass iff
// |ratio - 1| <= c_audit loglog N / log(N/N(r))
ConditionReport audit_keycond(const PrimeTable& t, const WeightSpec& w, const IdealRep& r,
                              AuditOptions opts = {});
// sum_{s < p} W(rs) <= c N(p)/log N(p) for N(p) >= N^eps
ConditionReport audit_finitecond(const PrimeTable& t, const WeightSpec& w, const IdealRep& r,
                                 double eps, AuditOptions opts = {});
// sum_{N(ar) > N log^xi N} W(ar) <= c (N/N(r)) / log^2(N/N(r))
ConditionReport audit_tailcond(const PrimeTable& t, const WeightSpec& w, const IdealRep& r,
                               double xi, AuditOptions opts = {});
// sum d5(n) w(n) <= x^A with x = N^{1/(1-eps)}
ConditionReport audit_Xcond(const PrimeTable& t, const WeightSpec& w, double eps, double A,
                            AuditOptions opts = {});
// sum_{N(n) not in (x^{1-iota}, x)} d5(n) w(n) <= lambda N^{1-eta}, iota = 2 eps
ConditionReport audit_newsmallandlarge(const PrimeTable& t, const WeightSpec& w, double eps,
                                       double eta, double rhs_lambda, AuditOptions opts = {});
// W(n) <= c/x for N(n) < x^{1-2 eps} (requires C > 1/eps); reports fitted c
ConditionReport audit_needed_w_bound(const PrimeTable& t, const WeightSpec& w, double eps,
                                     int samples, AuditOptions opts = {});

}  // namespace harmanlab
