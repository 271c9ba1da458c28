#pragma once

// Thin wrapper around __float128: the extended-precision mode (~34 significant
// digits) used for embeddings at large norms and for final inequality verdicts.

#include <quadmath.h>

#include <string>

namespace harmanlab {

using f128 = __float128;

inline f128 parse_f128(const std::string& s) { return strtoflt128(s.c_str(), nullptr); }

inline std::string f128_str(f128 x, int digits = 34) {
    char buf[128];
    quadmath_snprintf(buf, sizeof(buf), "%.*Qg", digits, x);
    return buf;
}

inline const f128 PI_Q = strtoflt128("3.14159265358979323846264338327950288419716939937510", nullptr);
inline const f128 E_Q  = strtoflt128("2.71828182845904523536028747135266249775724709369996", nullptr);

// distance to the nearest integer
inline f128 int_dist(f128 x) { return fabsq(x - rintq(x)); }

struct C128 {
    f128 re = 0, im = 0;
    C128() = default;
    C128(f128 r, f128 i) : re(r), im(i) {}
    C128 operator+(const C128& o) const { return {re + o.re, im + o.im}; }
    C128 operator-(const C128& o) const { return {re - o.re, im - o.im}; }
    C128 operator*(const C128& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    f128 abs() const { return sqrtq(re * re + im * im); }
};

}  // namespace harmanlab
