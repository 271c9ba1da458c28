#include "harmanlab/field.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace harmanlab {

std::string to_string(SplitTag t) {
    switch (t) {
        case SplitTag::Split: return "split";
        case SplitTag::Inert: return "inert";
        case SplitTag::Ramified: return "ramified";
    }
    return "?";
}

i64 isqrt64(i64 n) {
    if (n < 0) throw precondition_error("isqrt64: negative argument");
    i64 x = (i64)std::llround(std::sqrt((double)n));
    while (x > 0 && (i128)x * x > n) --x;
    while ((i128)(x + 1) * (x + 1) <= n) ++x;
    return x;
}

static unsigned long long mulmod_u64(unsigned long long a, unsigned long long b,
                                     unsigned long long m) {
    return (unsigned long long)((__uint128_t)a * b % m);
}

static unsigned long long powmod_u64(unsigned long long a, unsigned long long e,
                                     unsigned long long m) {
    unsigned long long r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(unsigned long long n) {
    if (n < 2) return false;
    for (unsigned long long p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    unsigned long long d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (unsigned long long a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        unsigned long long x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

int kronecker(i64 a, i64 n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    if (a % 2 == 0 && n % 2 == 0) return 0;
    int v = 0;
    while (n % 2 == 0) { n /= 2; ++v; }
    int k = 1;
    if (v % 2 == 1) {
        i64 r = a % 8;
        if (r < 0) r += 8;
        if (r == 3 || r == 5) k = -1;
    }
    if (n < 0) {
        n = -n;
        if (a < 0) k = -k;
    }
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        v = 0;
        while (a % 2 == 0) { a /= 2; ++v; }
        if (v % 2 == 1) {
            i64 r = n % 8;
            if (r == 3 || r == 5) k = -k;
        }
        if (a % 4 == 3 && n % 4 == 3) k = -k;
        i64 t = n % a;
        n = a;
        a = t;
    }
    return n == 1 ? k : 0;
}

i64 sqrt_mod(i64 a, i64 p) {
    a %= p;
    if (a < 0) a += p;
    if (p == 2 || a == 0) return a;
    if (kronecker(a, p) != 1) throw precondition_error("sqrt_mod: not a residue");
    auto mul = [p](i64 x, i64 y) { return (i64)((i128)x * y % p); };
    auto pw = [&](i64 x, i64 e) {
        i64 r = 1;
        while (e) {
            if (e & 1) r = mul(r, x);
            x = mul(x, x);
            e >>= 1;
        }
        return r;
    };
    if (p % 4 == 3) return pw(a, (p + 1) / 4);
    // Tonelli-Shanks
    i64 q = p - 1;
    int s = 0;
    while (q % 2 == 0) { q /= 2; ++s; }
    i64 z = 2;
    while (kronecker(z, p) != -1) ++z;
    i64 m = s, c = pw(z, q), t = pw(a, q), r = pw(a, (q + 1) / 2);
    while (t != 1) {
        i64 t2 = t;
        int i = 0;
        while (t2 != 1) { t2 = mul(t2, t2); ++i; }
        i64 b = c;
        for (int j = 0; j < m - i - 1; ++j) b = mul(b, b);
        m = i;
        c = mul(b, b);
        t = mul(t, c);
        r = mul(r, b);
    }
    return r;
}

i64 binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    i64 r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::pair<i64, i64> pell_min_unit(i64 d) {
    if (d <= 1) throw precondition_error("pell: d must exceed 1");
    i64 a0 = isqrt64(d);
    if (a0 * a0 == d) throw precondition_error("pell: d is a perfect square");
    i64 m = 0, k = 1, a = a0;
    i64 pp = 1, p = a0, qp = 0, q = 1;
    while (true) {
        i128 t = (i128)p * p - (i128)d * q * q;
        if (t == 1 || t == -1) return {p, q};
        m = a * k - m;
        k = (d - m * m) / k;
        a = (a0 + m) / k;
        i64 pn = a * p + pp, qn = a * q + qp;
        pp = p; p = pn;
        qp = q; q = qn;
    }
}

FieldSpec make_field(i64 d) {
    static const std::array<i64, 9> kImag = {-1, -2, -3, -7, -11, -19, -43, -67, -163};
    static const std::array<i64, 6> kReal = {3, 7, 11, 19, 31, 43};

    FieldSpec f;
    f.d = d;
    if (d < 0) {
        if (std::find(kImag.begin(), kImag.end(), d) == kImag.end())
            throw precondition_error(
                "imaginary d must have class number one: d in {-1,-2,-3,-7,-11,-19,-43,-67,-163}");
    } else {
        if (std::find(kReal.begin(), kReal.end(), d) == kReal.end())
            throw precondition_error(
                "real d must be class-number-one with d = 3 mod 4: d in {3,7,11,19,31,43}");
    }
    i64 dm4 = ((d % 4) + 4) % 4;
    f.omega_kind = (dm4 == 1) ? OmegaKind::HalfPlusSqrtD : OmegaKind::SqrtD;
    f.discriminant = (dm4 == 1) ? d : 4 * d;
    f.roots_of_unity = (d == -1) ? 4 : (d == -3) ? 6 : 2;
    f.sqrt_abs_d = std::sqrt((double)std::llabs(d));
    f.sqrt_abs_d_q = sqrtq((f128)std::llabs(d));
    if (d > 0) {
        auto [x, y] = pell_min_unit(d);
        f.eps_a = x;
        f.eps_b = y;
        f.log_eps_q = logq((f128)x + (f128)y * f.sqrt_abs_d_q);
        f.log_eps = (double)f.log_eps_q;
    }
    return f;
}

AlgInt FieldSpec::unit() const {
    if (!real()) throw precondition_error("fundamental unit: real fields only");
    return {eps_a, eps_b, *this};
}

AlgInt FieldSpec::unit_inv() const {
    AlgInt e = unit();
    i64 n = e.norm();  // +1 for d = 3 mod 4
    if (n == 1) return e.conj();
    return -e.conj();  // N(eps) = -1: eps^{-1} = -conj(eps)
}

AlgInt fundamental_unit(const FieldSpec& f) { return f.unit(); }

i64 AlgInt::norm() const {
    i128 n;
    if (field->omega_kind == OmegaKind::SqrtD) {
        n = (i128)a * a - (i128)field->d * b * b;
    } else {
        // N(a + b*omega) = a^2 + ab + b^2 (1-d)/4
        n = (i128)a * a + (i128)a * b + (i128)b * b * ((1 - field->d) / 4);
    }
    if (n > (i128)9000000000000000000LL || n < -(i128)9000000000000000000LL)
        throw precondition_error("norm overflow");
    return (i64)n;
}

AlgInt AlgInt::conj() const {
    if (field->omega_kind == OmegaKind::SqrtD) return {a, -b, *field};
    return {a + b, -b, *field};  // conj(omega) = 1 - omega
}

AlgInt AlgInt::operator*(const AlgInt& o) const {
    i64 d = field->d;
    if (field->omega_kind == OmegaKind::SqrtD) {
        return {a * o.a + d * b * o.b, a * o.b + b * o.a, *field};
    }
    // omega^2 = (d-1)/4 + omega
    i64 c = (d - 1) / 4;
    return {a * o.a + c * b * o.b, a * o.b + b * o.a + b * o.b, *field};
}

std::complex<double> AlgInt::sigma1() const {
    if (field->imaginary())
        return {(double)a + (double)b * field->omega_re(), (double)b * field->omega_im()};
    return {sigma1_real(), 0.0};
}

std::complex<double> AlgInt::sigma2() const {
    if (field->imaginary()) return std::conj(sigma1());
    return {sigma2_real(), 0.0};
}

double AlgInt::sigma1_real() const {
    double w = field->omega_kind == OmegaKind::SqrtD ? field->sqrt_abs_d
                                                     : (1 + field->sqrt_abs_d) / 2;
    return (double)a + (double)b * w;
}

double AlgInt::sigma2_real() const {
    double w = field->omega_kind == OmegaKind::SqrtD ? -field->sqrt_abs_d
                                                     : (1 - field->sqrt_abs_d) / 2;
    return (double)a + (double)b * w;
}

f128 AlgInt::sigma1_q() const {
    f128 w = field->omega_kind == OmegaKind::SqrtD ? field->sqrt_abs_d_q
                                                   : (1 + field->sqrt_abs_d_q) / 2;
    return (f128)a + (f128)b * w;
}

f128 AlgInt::sigma2_q() const {
    f128 w = field->omega_kind == OmegaKind::SqrtD ? -field->sqrt_abs_d_q
                                                   : (1 - field->sqrt_abs_d_q) / 2;
    return (f128)a + (f128)b * w;
}

C128 AlgInt::sigma1_cq() const {
    f128 re = (f128)a + (field->omega_kind == OmegaKind::SqrtD ? (f128)0 : (f128)b / 2);
    f128 im = (f128)b * (field->omega_kind == OmegaKind::SqrtD ? field->sqrt_abs_d_q
                                                               : field->sqrt_abs_d_q / 2);
    return {re, im};
}

std::complex<double> embed(const AlgInt& x, int which) {
    if (which == 1) return x.sigma1();
    if (which == 2) return x.sigma2();
    throw precondition_error("embed: which must be 1 or 2");
}

std::string AlgInt::str() const {
    std::string w = field->omega_kind == OmegaKind::SqrtD
                        ? "sqrt(" + std::to_string(field->d) + ")"
                        : "w";  // w = (1+sqrt(d))/2
    if (b == 0) return std::to_string(a);
    std::string bs = (b == 1) ? "" : (b == -1) ? "-" : std::to_string(b);
    if (a == 0) return bs + w;
    return std::to_string(a) + (b > 0 ? "+" : "") + bs + w;
}

int sign_quad(i128 a, i128 b, i64 d) {
    if (a == 0 && b == 0) return 0;
    if (a >= 0 && b >= 0) return 1;
    if (a <= 0 && b <= 0) return -1;
    // mixed signs: compare a^2 with d b^2
    i128 lhs = a * a, rhs = (i128)d * b * b;
    if (a > 0) return lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
    return lhs < rhs ? 1 : (lhs > rhs ? -1 : 0);
}

namespace {

// sigma1(x)^2 as A + B*sqrt(d)
void sigma1_squared(const AlgInt& x, i128& A, i128& B) {
    A = (i128)x.a * x.a + (i128)x.field->d * x.b * x.b;
    B = (i128)2 * x.a * x.b;
}

// sign of sigma1(x)^2 - t for integer t
int cmp_sigma1_sq(const AlgInt& x, i128 t) {
    i128 A, B;
    sigma1_squared(x, A, B);
    return sign_quad(A - t, B, x.field->d);
}

// sign of sigma1(x)^2 - n * eps^2
int cmp_sigma1_sq_eps2(const AlgInt& x, i64 n) {
    const FieldSpec& f = *x.field;
    i128 Ea = (i128)f.eps_a * f.eps_a + (i128)f.d * f.eps_b * f.eps_b;
    i128 Eb = (i128)2 * f.eps_a * f.eps_b;
    i128 A, B;
    sigma1_squared(x, A, B);
    return sign_quad(A - (i128)n * Ea, B - (i128)n * Eb, f.d);
}

AlgInt canonical_imag(const AlgInt& x) {
    const FieldSpec& f = *x.field;
    int h = f.roots_of_unity;
    auto ok = [&](const AlgInt& z) {
        if (h == 2) return z.b > 0 || (z.b == 0 && z.a > 0);
        // h = 4 (omega = i) and h = 6 (omega = (1+sqrt(-3))/2): sector [0, 2*pi/h)
        return z.a > 0 && z.b >= 0;
    };
    AlgInt z = x;
    AlgInt rot = (f.d == -1) ? AlgInt{0, 1, f} : (f.d == -3) ? AlgInt{0, 1, f} : AlgInt{-1, 0, f};
    for (int i = 0; i < h; ++i) {
        if (ok(z)) return z;
        z = z * rot;
    }
    throw std::logic_error("canonical_imag: no sector representative");
}

AlgInt canonical_real(const AlgInt& x) {
    const FieldSpec& f = *x.field;
    if (f.omega_kind != OmegaKind::SqrtD)
        throw precondition_error("canonical_real: basis must be {1, sqrt(d)}");
    i64 n = std::llabs(x.norm());
    AlgInt z = x;
    if (sign_quad(z.a, z.b, f.d) < 0) z = -z;
    AlgInt eps = f.unit(), eps_inv = f.unit_inv();
    int guard = 0;
    while (cmp_sigma1_sq(z, n) < 0) {  // sigma1 < sqrt(n)
        z = z * eps;
        if (++guard > 256) throw std::logic_error("canonical_real: no convergence");
    }
    while (cmp_sigma1_sq_eps2(z, n) >= 0) {  // sigma1 >= eps*sqrt(n)
        z = z * eps_inv;
        if (++guard > 256) throw std::logic_error("canonical_real: no convergence");
    }
    return z;
}

}  // namespace

AlgInt canonical_associate(const AlgInt& x) {
    if (x.is_zero()) return x;
    return x.field->imaginary() ? canonical_imag(x) : canonical_real(x);
}

NormSolutions solve_norm_equation(const FieldSpec& f, i64 n, SearchBox box) {
    if (n < 1) throw precondition_error("solve_norm_equation: n >= 1 required");
    NormSolutions out;
    if (f.imaginary()) {
        out.complete = true;
        i64 ad = -f.d;
        if (f.omega_kind == OmegaKind::SqrtD) {
            // a^2 + |d| b^2 = n
            i64 bmax = isqrt64(n / ad);
            for (i64 b = -bmax; b <= bmax; ++b) {
                i64 rem = n - ad * b * b;
                i64 a = isqrt64(rem);
                if (a * a != rem) continue;
                out.solutions.push_back({a, b, f});
                if (a != 0) out.solutions.push_back({-a, b, f});
            }
        } else {
            // a^2 + ab + b^2 (1+|d|)/4 = n; discriminant in a: 4n - |d| b^2
            i64 bmax = isqrt64(4 * n / ad);
            for (i64 b = -bmax; b <= bmax; ++b) {
                i128 disc = (i128)4 * n - (i128)ad * b * b;
                if (disc < 0) continue;
                i64 s = isqrt64((i64)disc);
                if ((i128)s * s != disc) continue;
                if (((s - b) & 1) != 0) continue;  // s = b mod 2 for integrality
                for (i64 sg : {1LL, -1LL}) {
                    i64 a = (-b + sg * s) / 2;
                    AlgInt z{a, b, f};
                    if (z.norm() == n &&
                        std::find(out.solutions.begin(), out.solutions.end(), z) == out.solutions.end())
                        out.solutions.push_back(z);
                }
            }
        }
    } else {
        // certified bound for one representative per unit orbit:
        // |a|, |b sqrt d| <= (eps+1) sqrt(n) / 2
        double eps1 = f.unit().sigma1_real();
        i64 cert_b = (i64)std::ceil((eps1 + 1) * std::sqrt((double)n) / (2 * f.sqrt_abs_d)) + 1;
        i64 cert_a = (i64)std::ceil((eps1 + 1) * std::sqrt((double)n) / 2) + 1;
        i64 bmax = box.max_abs_b > 0 ? box.max_abs_b : cert_b;
        i64 amax = box.max_abs_a > 0 ? box.max_abs_a : cert_a;
        out.complete = (bmax >= cert_b && amax >= cert_a);
        for (i64 b = -bmax; b <= bmax; ++b) {
            for (i64 sg : {1LL, -1LL}) {
                i128 a2 = (i128)f.d * b * b + sg * n;
                if (a2 < 0) continue;
                if (a2 > (i128)amax * amax) continue;
                i64 a = isqrt64((i64)a2);
                if ((i128)a * a != a2) continue;
                out.solutions.push_back({a, b, f});
                if (a != 0) out.solutions.push_back({-a, b, f});
            }
        }
    }
    std::sort(out.solutions.begin(), out.solutions.end(),
              [](const AlgInt& x, const AlgInt& y) {
                  return x.a != y.a ? x.a < y.a : x.b < y.b;
              });
    out.solutions.erase(std::unique(out.solutions.begin(), out.solutions.end()),
                        out.solutions.end());
    return out;
}

std::vector<AlgInt> prime_ideal_generators(const FieldSpec& f, i64 p, SplitTag tag) {
    std::vector<AlgInt> gens;
    if (tag == SplitTag::Inert) {
        gens.push_back(canonical_associate(AlgInt{p, 0, f}));
        return gens;
    }
    if (f.imaginary()) {
        i64 ad = -f.d;
        if (f.omega_kind == OmegaKind::SqrtD) {
            i64 bmax = isqrt64(p / ad);
            for (i64 b = 0; b <= bmax && gens.size() < 2; ++b) {
                i64 rem = p - ad * b * b;
                i64 a = isqrt64(rem);
                if (a * a != rem) continue;
                for (AlgInt z : {AlgInt{a, b, f}, AlgInt{a, -b, f}}) {
                    AlgInt c = canonical_associate(z);
                    if (std::find(gens.begin(), gens.end(), c) == gens.end()) gens.push_back(c);
                }
            }
        } else {
            i64 bmax = isqrt64(4 * p / ad);
            for (i64 b = 0; b <= bmax && gens.size() < 2; ++b) {
                i128 disc = (i128)4 * p - (i128)ad * b * b;
                if (disc < 0) break;
                i64 s = isqrt64((i64)disc);
                if ((i128)s * s != disc) continue;
                if (((s - b) & 1) != 0) continue;
                for (i64 bb : {b, -b}) {
                    for (i64 sg : {1LL, -1LL}) {
                        i64 a = (-bb + sg * s) / 2;
                        AlgInt z{a, bb, f};
                        if (z.norm() != p) continue;
                        AlgInt c = canonical_associate(z);
                        if (std::find(gens.begin(), gens.end(), c) == gens.end()) gens.push_back(c);
                    }
                    if (b == 0) break;
                }
            }
        }
    } else {
        double eps1 = f.unit().sigma1_real();
        i64 bmax = (i64)std::ceil((eps1 + 1) * std::sqrt((double)p) / (2 * f.sqrt_abs_d)) + 1;
        size_t want = (tag == SplitTag::Split) ? 2 : 1;
        for (i64 b = 0; b <= bmax && gens.size() < want; ++b) {
            for (i64 sg : {1LL, -1LL}) {
                i128 a2 = (i128)f.d * b * b + sg * p;
                if (a2 < 0) continue;
                i64 a = isqrt64((i64)a2);
                if ((i128)a * a != a2) continue;
                for (AlgInt z : {AlgInt{a, b, f}, AlgInt{a, -b, f}}) {
                    AlgInt c = canonical_associate(z);
                    if (std::find(gens.begin(), gens.end(), c) == gens.end()) gens.push_back(c);
                    if (gens.size() >= want) break;
                }
                if (gens.size() >= want) break;
            }
        }
    }
    if (gens.empty()) throw std::logic_error("prime_ideal_generators: no generator found");
    std::sort(gens.begin(), gens.end(), [](const AlgInt& x, const AlgInt& y) {
        return x.a != y.a ? x.a < y.a : x.b < y.b;
    });
    return gens;
}

}  // namespace harmanlab
