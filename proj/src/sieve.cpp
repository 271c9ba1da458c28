#include "harmanlab/sieve.hpp"

#include <cmath>

#include "harmanlab/quadrature.hpp"

namespace harmanlab {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;

double wrap01(double t) {
    t -= std::floor(t);
    return t >= 1.0 ? 0.0 : t;
}
}  // namespace

PhiResult phi_at(const PrimeTable& t, const WeightSpec& w, const IdealRep& r, size_t q_idx,
                 i64 norm_budget, double tail_tol) {
    if (q_idx > t.size()) throw precondition_error("phi_at: cutoff index out of table");
    i64 budget = norm_budget > 0 ? norm_budget : w.support_cutoff(tail_tol);
    i64 max_norm = budget / std::max<i64>(r.norm, 1);
    if (max_norm >= t.norm_bound())
        throw budget_error("phi_at: enumeration requires prime ideals up to norm " +
                           std::to_string(max_norm) + "; extend the table");
    PhiResult res;
    res.budget_used = budget;
    res.exact = w.is_characteristic() && budget >= (i64)std::floor(w.N);
    double r_theta = w.needs_theta() ? theta_of(t, r) : 0.0;
    AlgInt r_gen;
    bool with_gen = w.needs_generator();
    if (with_gen) r_gen = generator(t, r);
    double sum = 0;
    i64 terms = 0;
    for_each_sifted_ideal(t, q_idx, max_norm, with_gen,
                          [&](i64 n, double th, i64, const AlgInt* g) {
                              double nr = (double)n * (double)r.norm;
                              ++terms;
                              if (with_gen) {
                                  AlgInt full = canonical_associate(*g * r_gen);
                                  sum += w.eval(nr, wrap01(r_theta + th), &full);
                              } else {
                                  sum += w.eval(nr, wrap01(r_theta + th));
                              }
                          });
    res.value = sum;
    res.terms = terms;
    return res;
}

PhiResult S_of(const PrimeTable& t, const WeightSpec& w, const IdealRep& r, double z,
               i64 norm_budget) {
    return phi_at(t, w, r, t.q_index(z), norm_budget);
}

PhiResult phi(const PrimeTable& t, const SiftingQuery& q) {
    return q.by_z ? S_of(t, q.weight, q.r, q.z, q.norm_budget)
                  : phi_at(t, q.weight, q.r, q.q_idx, q.norm_budget);
}

double buchstab_identity_residual(const PrimeTable& t, const WeightSpec& w, const IdealRep& r,
                                  size_t p_idx, size_t q_idx, i64 norm_budget) {
    if (p_idx >= q_idx) throw precondition_error("buchstab identity: p must precede q");
    double lhs = phi_at(t, w, r, p_idx, norm_budget).value;
    double rhs = phi_at(t, w, r, q_idx, norm_budget).value;
    for (size_t s = p_idx; s < q_idx; ++s) {
        IdealRep rs = mul(r, make_ideal(t, {{(uint32_t)s, 1}}));
        rhs += phi_at(t, w, rs, s, norm_budget).value;
    }
    return lhs - rhs;
}

AsympReport rough_asymptotic_check(const PrimeTable& t, const BuchstabTable& B, double N,
                                   const IdealRep& r, size_t p_idx) {
    return genweight_asymptotic_check(t, B, characteristic_weight(N), r, p_idx);
}

AsympReport genweight_asymptotic_check(const PrimeTable& t, const BuchstabTable& B,
                                       const WeightSpec& w, const IdealRep& r, size_t p_idx) {
    double N = w.N;
    if ((double)r.norm > N / 2) throw precondition_error("asymptotic check: N(r) <= N/2 required");
    AsympReport rep;
    rep.y = N / (double)r.norm;
    rep.prime_norm = t[p_idx].norm;
    rep.u = std::log(rep.y) / std::log((double)rep.prime_norm);
    if (rep.u < 1.05 || rep.u > 6.0)
        throw precondition_error("asymptotic check: u must lie in [1.05, 6]");
    rep.exact = phi_at(t, w, r, p_idx).value;
    rep.predicted = B.eval(rep.u) * rep.y / std::log((double)rep.prime_norm);
    rep.rel_err = rep.exact / rep.predicted - 1.0;
    return rep;
}

SurgeryReport smoothed_indicator(double gamma, double rho, double T) {
    if (gamma <= 0 || rho <= 0) throw precondition_error("surgery: gamma, rho > 0 required");
    if (gamma == rho) throw precondition_error("surgery: gamma != rho required");
    if (T < 1) throw precondition_error("surgery: T >= 1 required");
    SurgeryReport rep;
    rep.gamma = gamma;
    rep.rho = rho;
    rep.T = T;
    rep.indicator = gamma < rho ? 1.0 : 0.0;
    // e^{i gamma t} sin(rho t)/t is even in its real part and odd in its
    // imaginary part, so the principal-value integral reduces to
    // (2/pi) int_0^T cos(gamma t) sin(rho t)/t dt with the t=0 limit rho.
    auto integrand = [&](double t) {
        return t == 0.0 ? rho : std::cos(gamma * t) * std::sin(rho * t) / t;
    };
    double L = kPi / (gamma + rho);  // half period of the fastest oscillation
    double total = 0;
    double a = 0;
    while (a < T) {
        double b = std::min(a + L, T);
        double err = 0;
        total += gk15_panel(integrand, a, b, &err);
        a = b;
    }
    rep.approx = 2.0 / kPi * total;
    rep.abs_err = std::fabs(rep.indicator - rep.approx);
    rep.err_scaled = rep.abs_err * T * std::fabs(gamma - rho);
    return rep;
}

}  // namespace harmanlab
