#pragma once

// Exact arithmetic in the ring of integers O of a quadratic field K = Q(sqrt(d))
// of class number one: elements in the basis {1, omega}, integer norms,
// embeddings, units, and norm-equation solving.

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "harmanlab/hiprec.hpp"

namespace harmanlab {

using i64  = long long;
using i128 = __int128_t;

// Violated operation precondition (CLI exit code 2).
struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Enumeration or summation budget exhausted (CLI exit code 3).
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// omega = sqrt(d) for d = 2,3 mod 4; omega = (1+sqrt(d))/2 for d = 1 mod 4.
enum class OmegaKind { SqrtD, HalfPlusSqrtD };

enum class SplitTag { Split, Inert, Ramified };

std::string to_string(SplitTag t);

struct AlgInt;

// A quadratic field of class number one with its integer-ring basis.
// Immutable after make_field(); AlgInt values keep a pointer into it, so the
// FieldSpec must outlive them.
struct FieldSpec {
    i64 d = 0;
    OmegaKind omega_kind = OmegaKind::SqrtD;
    i64 discriminant = 0;
    bool class_number_one = true;
    int roots_of_unity = 2;     // 4 for Q(i), 6 for Q(sqrt(-3)), else 2
    i64 eps_a = 0, eps_b = 0;   // fundamental unit eps > 1 (real case only)

    double sqrt_abs_d = 0.0;
    double log_eps = 0.0;       // log of sigma1(eps), real case
    f128 sqrt_abs_d_q = 0;
    f128 log_eps_q = 0;

    bool imaginary() const { return d < 0; }
    bool real() const { return d > 0; }
    double omega_re() const { return omega_kind == OmegaKind::SqrtD ? 0.0 : 0.5; }
    // Im sigma1(omega) for imaginary fields (> 0)
    double omega_im() const {
        return omega_kind == OmegaKind::SqrtD ? sqrt_abs_d : sqrt_abs_d / 2;
    }
    AlgInt unit() const;        // fundamental unit as an element
    AlgInt unit_inv() const;    // eps^{-1}; exact since N(eps) = 1 here
};

// Validates d against the shipped class-number-one tables:
// imaginary d in {-1,-2,-3,-7,-11,-19,-43,-67,-163}, real d in {3,7,11,19,31,43}.
FieldSpec make_field(i64 d);

// A ring element a + b*omega with exact integer arithmetic.
struct AlgInt {
    i64 a = 0, b = 0;
    const FieldSpec* field = nullptr;

    AlgInt() = default;
    AlgInt(i64 a_, i64 b_, const FieldSpec& f) : a(a_), b(b_), field(&f) {}

    bool is_zero() const { return a == 0 && b == 0; }
    i64 norm() const;   // exact; multiplicative; >= 0 for imaginary fields
    AlgInt conj() const;
    AlgInt operator*(const AlgInt& o) const;
    AlgInt operator+(const AlgInt& o) const { return {a + o.a, b + o.b, *field}; }
    AlgInt operator-(const AlgInt& o) const { return {a - o.a, b - o.b, *field}; }
    AlgInt operator-() const { return {-a, -b, *field}; }
    bool operator==(const AlgInt& o) const { return a == o.a && b == o.b; }
    bool operator!=(const AlgInt& o) const { return !(*this == o); }

    std::complex<double> sigma1() const;
    std::complex<double> sigma2() const;
    double sigma1_real() const;  // real fields only
    double sigma2_real() const;
    f128 sigma1_q() const;       // real fields
    f128 sigma2_q() const;
    C128 sigma1_cq() const;      // imaginary fields, extended precision

    std::string str() const;
};

// sigma_{1,2} embedding at double precision; sigma2 of a real field is returned
// with zero imaginary part.
std::complex<double> embed(const AlgInt& x, int which);

// exact sign of a + b*sqrt(d) for d > 0 (d not a square)
int sign_quad(i128 a, i128 b, i64 d);

// Canonical associate: unique representative of the unit orbit of x.
// Imaginary: sigma1-argument in [0, 2*pi/h). Real: sigma1 in [sqrt(|N|), eps*sqrt(|N|)).
AlgInt canonical_associate(const AlgInt& x);

// Minimal (x, y) with x, y >= 1 and |x^2 - d y^2| = 1, by the continued
// fraction of sqrt(d). Rejects perfect squares.
std::pair<i64, i64> pell_min_unit(i64 d);

// Fundamental unit of Z[sqrt(d)] as an element of Q(sqrt(d)); pre: d > 1 squarefree.
AlgInt fundamental_unit(const FieldSpec& f);

struct SearchBox {
    i64 max_abs_a = 0, max_abs_b = 0;  // 0 = use the certified bound
};

struct NormSolutions {
    std::vector<AlgInt> solutions;  // all (a,b) in the box with |N| = n
    bool complete = false;          // box certified to contain a representative of every unit orbit
};

// All x with |N(x)| = n and coordinates inside the box. Imaginary fields are
// finite automatically; real fields certify completeness against the
// fundamental-domain bound |coords| <= (eps+1)*sqrt(n)/(2*sqrt(d)) + 1.
NormSolutions solve_norm_equation(const FieldSpec& f, i64 n, SearchBox box = {});

// Canonical generators of the prime ideals above p: two for split p, one
// otherwise. Order: lexicographic on (a, b).
std::vector<AlgInt> prime_ideal_generators(const FieldSpec& f, i64 p, SplitTag tag);

// number theory helpers
i64 isqrt64(i64 n);
bool is_prime_u64(unsigned long long n);
int kronecker(i64 a, i64 n);
// square root of a mod p (p odd prime, (a/p) = 1)
i64 sqrt_mod(i64 a, i64 p);
i64 binom(int n, int k);

}  // namespace harmanlab
