#pragma once

// Restricted Diophantine approximation searches: ||p alpha||_omega records over
// prime elements of imaginary quadratic fields, the rational-approximation
// corollary check, Dirichlet witnesses and eta-good classification for real
// pairs (x1, x2), and the real-case record search.

#include <complex>
#include <string>
#include <vector>

#include "harmanlab/hiprec.hpp"
#include "harmanlab/ideals.hpp"

namespace harmanlab {

// ||z||_omega = max distance of the omega-basis coordinates to the nearest integers
double dist_omega(const FieldSpec& f, std::complex<double> z);
f128 dist_omega_q(const FieldSpec& f, const C128& z);

struct ApproxRecord {
    AlgInt p;           // prime element (canonical associate)
    i64 norm = 0;
    double dist = 0;    // ||p alpha||_omega
    double nu_p = 0;    // -log dist / log norm
    AlgInt nearest;     // lattice point closest to p*alpha in omega coordinates
    bool verified_hiprec = false;
};

struct RecordSearchResult {
    std::vector<ApproxRecord> records;                // nu_p >= nu_target, table order
    std::vector<std::pair<i64, double>> running_max;  // (norm, best nu so far) at improvements
    i64 primes_scanned = 0;
    bool near_field_point_warning = false;
};

// Streams prime elements of norm <= nmax (both conjugates of split primes are
// separate ideals); double-precision scan with a 1e3 safety margin, candidates
// re-verified at extended precision. pre: nmax <= 1e10.
RecordSearchResult record_search(const PrimeTable& t, f128 alpha_re, f128 alpha_im, i64 nmax,
                                 double nu_target);

struct CorollaryReport {
    double lhs = 0;         // |alpha - a/p|
    double c_omega = 0;     // max(|1+omega|, |1-omega|): omega-to-Euclidean distortion
    double rhs_chain = 0;   // c_omega * dist / sqrt(norm)
    double rhs_target = 0;  // norm^{-1/2 - nu_p}
    bool chain_ok = false;
    bool target_ok = false;
};

CorollaryReport corollary_check(const FieldSpec& f, const ApproxRecord& rec, f128 alpha_re,
                                f128 alpha_im);

struct Witness {
    i64 u = 0, v = 0, f = 0, g = 0;
    i64 W = 0;        // |N(f + g sqrt d)|
    i64 gcd_fg = 0;
    double err1 = 0, err2 = 0;  // |x_i - sigma_i(u + v sqrt d)/sigma_i(f + g sqrt d)|
    bool verified_hiprec = false;
};

struct WitnessSearchResult {
    std::vector<Witness> witnesses;  // sorted by W, then (f, g)
    bool near_field_point_warning = false;
    i64 denominators_scanned = 0;
};

// Enumerates denominators f + g sqrt(d) normalized into sigma1 in [sqrt W, eps sqrt W),
// derives the forced (u, v) by rounding in sigma coordinates, and keeps pairs
// satisfying both inequalities with numerator coprime to the denominator.
// pre: wmax <= 1e7.
WitnessSearchResult dirichlet_witnesses(const FieldSpec& f, f128 x1, f128 x2, i64 wmax);

struct GoodPairReport {
    size_t witness_count = 0;
    double eta_hat = 0;   // max log(gcd)/log(W) over per-dyadic-range minimal-gcd witnesses
    double eta_grid = 0;  // smallest grid eta with envelope gcd <= W^eta over all selected
    std::string classification;  // "consistent-with-eta-good(<eta>)" or "inconclusive"
    std::vector<std::pair<i64, i64>> dyadic_min;  // (W, gcd) chosen per dyadic range
};

// pre for a classification: >= 10 witnesses spanning >= 3 decades of W
GoodPairReport classify_eta_good(const std::vector<Witness>& ws,
                                 const std::vector<double>& eta_grid);

struct RealRecord {
    AlgInt p;
    i64 norm = 0;
    AlgInt nearest;     // a minimizing max_i |x_i - sigma_i(a)/sigma_i(p)|
    double err = 0;     // that minimum
    double nu_p = 0;    // -log(err)/log(norm) - 1/2
    bool verified_hiprec = false;
};

struct RealRecordResult {
    std::vector<RealRecord> records;
    i64 primes_scanned = 0;
    bool near_field_point_warning = false;
};

// records meet err <= norm^{-1/2 - nu_target}
RealRecordResult real_record_search(const PrimeTable& t, f128 x1, f128 x2, i64 nmax,
                                    double nu_target);

}  // namespace harmanlab
