#pragma once

// Exact sifting sums Phi_r(w, q) and S_r(w, z), the Buchstab identity as a
// testable equality, brute-force verification of the rough-ideal and
// general-weight asymptotics, and the smoothed-indicator ("cosmetic surgery")
// check.

#include "harmanlab/buchstab.hpp"
#include "harmanlab/ideals.hpp"
#include "harmanlab/weights.hpp"

namespace harmanlab {

struct PhiResult {
    double value = 0;
    bool exact = false;    // characteristic weight summed over its full support
    i64 terms = 0;         // ideals visited
    i64 budget_used = 0;   // norm bound applied to N(a r)
};

// One sifting request: Phi_r(w, q) when by_z is false, S_r(w, z) otherwise.
struct SiftingQuery {
    IdealRep r;
    WeightSpec weight;
    bool by_z = false;
    size_t q_idx = 0;      // cutoff prime (table index) for Phi
    double z = 0;          // norm threshold for S
    i64 norm_budget = 0;   // 0 = derive from the weight's support
};

PhiResult phi(const PrimeTable& t, const SiftingQuery& q);

// Phi_r(w, q) = sum over ideals a with no prime factor before q (table index
// q_idx) of w(a r), truncated at norm_budget (0 = weight support cutoff).
// Summation order is the deterministic DFS order.
PhiResult phi_at(const PrimeTable& t, const WeightSpec& w, const IdealRep& r, size_t q_idx,
                 i64 norm_budget = 0, double tail_tol = 1e-9);

// S_r(w, z) = Phi_r(w, Q(z))
PhiResult S_of(const PrimeTable& t, const WeightSpec& w, const IdealRep& r, double z,
               i64 norm_budget = 0);

// Phi_r(W,p) - Phi_r(W,q) - sum_{p <= s < q} Phi_{rs}(W,s); exactly 0 for
// characteristic weights
double buchstab_identity_residual(const PrimeTable& t, const WeightSpec& w, const IdealRep& r,
                                  size_t p_idx, size_t q_idx, i64 norm_budget = 0);

struct AsympReport {
    double exact = 0;      // Phi by full enumeration
    double predicted = 0;  // B(u) y / log N(p)
    double rel_err = 0;    // exact/predicted - 1
    double u = 0, y = 0;
    i64 prime_norm = 0;
};

// characteristic weight vs B(u) y / log N(p); pre: N(r) <= N/2, u in [1.05, 6]
AsympReport rough_asymptotic_check(const PrimeTable& t, const BuchstabTable& B, double N,
                                   const IdealRep& r, size_t p_idx);

// the same comparison for smooth weights (pre: boxed conditions audited elsewhere)
AsympReport genweight_asymptotic_check(const PrimeTable& t, const BuchstabTable& B,
                                       const WeightSpec& w, const IdealRep& r, size_t p_idx);

struct SurgeryReport {
    double gamma = 0, rho = 0, T = 0;
    double approx = 0;     // (1/pi) int_{-T}^{T} e^{i gamma t} sin(rho t)/t dt (the odd part cancels)
    double indicator = 0;  // 1_{gamma < rho}
    double abs_err = 0;
    double err_scaled = 0;  // abs_err * T * |gamma - rho|, bounded by the lemma constant
};

// pre: gamma != rho, both positive, T >= 1
SurgeryReport smoothed_indicator(double gamma, double rho, double T);

}  // namespace harmanlab
