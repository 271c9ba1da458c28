#include <doctest.h>

#include <cmath>
#include <random>

#include "harmanlab/field.hpp"

using namespace harmanlab;

TEST_CASE("norms match hand values") {
    FieldSpec qi = make_field(-1);
    CHECK(AlgInt{1, 1, qi}.norm() == 2);  // (1+i)(1-i) = 2

    FieldSpec q7 = make_field(-7);
    CHECK(AlgInt{0, 1, q7}.norm() == 2);  // omega = (1+sqrt(-7))/2

    FieldSpec q3 = make_field(3);
    CHECK(AlgInt{3, 1, q3}.norm() == 6);  // 9 - 3
}

TEST_CASE("norm is multiplicative on random pairs, exactly") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<i64> coord(-3000, 3000);
    for (i64 d : {-1LL, -7LL, -11LL, 3LL, 11LL}) {
        FieldSpec f = make_field(d);
        for (int it = 0; it < 2000; ++it) {
            AlgInt x{coord(rng), coord(rng), f};
            AlgInt y{coord(rng), coord(rng), f};
            CHECK((x * y).norm() == x.norm() * y.norm());
        }
    }
}

TEST_CASE("embeddings") {
    FieldSpec q3 = make_field(3);
    AlgInt x{2, 1, q3};
    CHECK(embed(x, 2).real() == doctest::Approx(2 - std::sqrt(3.0)).epsilon(1e-12));
    CHECK(embed(x, 2).real() == doctest::Approx(0.2679).epsilon(1e-3));

    FieldSpec qi = make_field(-1);
    AlgInt z{3, 4, qi};
    CHECK(embed(z, 1) == std::complex<double>(3, 4));

    AlgInt r{5, 0, q3};
    CHECK(embed(r, 1).real() == 5);
    CHECK(embed(r, 2).real() == 5);
}

TEST_CASE("sigma1*sigma2 equals the norm at double precision") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<i64> coord(-1000000, 1000000);
    for (i64 d : {-1LL, -3LL, -163LL, 3LL, 43LL}) {
        FieldSpec f = make_field(d);
        for (int it = 0; it < 500; ++it) {
            AlgInt x{coord(rng), coord(rng), f};
            if (x.is_zero()) continue;
            double prod = std::abs(x.sigma1() * x.sigma2());
            double n = std::fabs((double)x.norm());
            CHECK(std::fabs(prod - n) <= 1e-10 * n);
        }
    }
}

TEST_CASE("fundamental units from the continued fraction match the Pell oracle") {
    // oracle: scan y upward for the least solution of |x^2 - d y^2| = 1
    auto oracle = [](i64 d) -> std::pair<i64, i64> {
        for (i64 y = 1;; ++y) {
            for (i64 s : {1LL, -1LL}) {
                i64 x2 = d * y * y + s;
                if (x2 < 0) continue;
                i64 x = isqrt64(x2);
                if (x * x == x2 && x >= 1) return {x, y};
            }
        }
    };
    for (i64 d : {3LL, 7LL, 11LL, 19LL, 31LL, 43LL}) {
        auto [px, py] = pell_min_unit(d);
        auto [ox, oy] = oracle(d);
        CHECK(px == ox);
        CHECK(py == oy);
    }
    auto [a3, b3] = pell_min_unit(3);
    CHECK(a3 == 2);
    CHECK(b3 == 1);
    auto [a7, b7] = pell_min_unit(7);
    CHECK(a7 == 8);
    CHECK(b7 == 3);
    auto [a11, b11] = pell_min_unit(11);
    CHECK(a11 == 10);
    CHECK(b11 == 3);
    CHECK_THROWS_AS(pell_min_unit(16), precondition_error);
}

TEST_CASE("unit identities hold exactly in ring coordinates") {
    for (i64 d : {3LL, 7LL, 11LL, 19LL, 31LL, 43LL}) {
        FieldSpec f = make_field(d);
        AlgInt eps = f.unit();
        AlgInt prod = eps * eps.conj();
        CHECK(prod.b == 0);
        CHECK((prod.a == 1 || prod.a == -1));
        CHECK(eps.sigma1_real() > 1.0);
    }
}

TEST_CASE("unit powers eps^n keep |N| = 1 for |n| <= 20") {
    // coordinates of eps^20 overflow machine words for the larger d, so the
    // norm residue a^2 - d b^2 is checked modulo three large primes; any
    // value other than +-1 is caught with overwhelming probability
    const i64 mods[3] = {(i64)1e18 + 9, (i64)1e18 + 31, 999999999999999989LL};
    for (i64 d : {3LL, 7LL, 11LL, 19LL, 31LL, 43LL}) {
        FieldSpec f = make_field(d);
        for (i64 m : mods) {
            auto mulmod = [m](i64 x, i64 y) { return (i64)((i128)x % m * ((i128)y % m) % m); };
            for (int dir = 0; dir < 2; ++dir) {
                AlgInt u = dir == 0 ? f.unit() : f.unit_inv();
                i64 a = 1 % m, b = 0;
                for (int n = 1; n <= 20; ++n) {
                    i64 na = (mulmod(a, u.a) + mulmod(mulmod(b, u.b), d % m)) % m;
                    i64 nb = (mulmod(a, u.b) + mulmod(b, u.a)) % m;
                    a = na;
                    b = nb;
                    i64 res = ((mulmod(a, a) - mulmod(mulmod(b, b), d % m)) % m + m) % m;
                    CHECK((res == 1 || res == m - 1));
                }
            }
        }
        // fully exact in machine integers while the coordinates fit
        AlgInt p{1, 0, f};
        for (int n = 1; n <= 20; ++n) {
            double growth = std::pow(f.unit().sigma1_real(), n + 1);
            if (growth > 4e17) break;
            p = p * f.unit();
            CHECK(std::llabs(p.norm()) == 1);
        }
    }
}

TEST_CASE("norm equation solutions") {
    FieldSpec qi = make_field(-1);
    auto s5 = solve_norm_equation(qi, 5);
    CHECK(s5.complete);
    CHECK(s5.solutions.size() == 8);  // (+-1,+-2), (+-2,+-1)
    bool has21 = false, has12 = false;
    for (const AlgInt& z : s5.solutions) {
        CHECK(z.norm() == 5);
        if (z.a == 2 && z.b == 1) has21 = true;
        if (z.a == 1 && z.b == 2) has12 = true;
    }
    CHECK(has21);
    CHECK(has12);

    CHECK(solve_norm_equation(qi, 3).solutions.empty());  // 3 inert

    FieldSpec q3 = make_field(3);
    auto s2 = solve_norm_equation(q3, 2);
    CHECK(s2.complete);
    bool has = false;
    for (const AlgInt& z : s2.solutions) {
        CHECK(std::llabs(z.norm()) == 2);
        if (z.a == 1 && z.b == 1) has = true;
    }
    CHECK(has);  // 1 + sqrt(3), |1 - 3| = 2

    auto partial = solve_norm_equation(q3, 2, SearchBox{1, 1});
    CHECK(!partial.complete);
}

TEST_CASE("canonical associates are unique per unit orbit") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<i64> coord(-50, 50);
    for (i64 d : {-1LL, -2LL, -3LL, -7LL, 3LL, 7LL}) {
        FieldSpec f = make_field(d);
        std::vector<AlgInt> units;
        if (d == -1) units = {{0, 1, f}, {-1, 0, f}, {0, -1, f}};
        else if (d == -3) units = {{0, 1, f}, {-1, 1, f}, {-1, 0, f}, {0, -1, f}, {1, -1, f}};
        else if (d < 0) units = {{-1, 0, f}};
        else units = {f.unit(), f.unit_inv(), -f.unit(), {-1, 0, f}};
        for (int it = 0; it < 300; ++it) {
            AlgInt x{coord(rng), coord(rng), f};
            if (x.is_zero()) continue;
            AlgInt c = canonical_associate(x);
            CHECK(std::llabs(c.norm()) == std::llabs(x.norm()));
            for (const AlgInt& u : units) {
                AlgInt c2 = canonical_associate(x * u);
                CHECK(c2 == c);
            }
        }
    }
}

TEST_CASE("field table rejections") {
    CHECK_THROWS_AS(make_field(5), precondition_error);    // 1 mod 4 real
    CHECK_THROWS_AS(make_field(23), precondition_error);   // outside the shipped table
    CHECK_THROWS_AS(make_field(-5), precondition_error);   // class number 2
    CHECK_THROWS_AS(make_field(0), precondition_error);
    CHECK_THROWS_AS(make_field(1), precondition_error);
    CHECK_NOTHROW(make_field(-163));
    CHECK_NOTHROW(make_field(43));
}

TEST_CASE("kronecker symbol agrees with Euler's criterion") {
    std::mt19937_64 rng(5);
    auto primes = std::vector<i64>{3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 101, 997};
    std::uniform_int_distribution<i64> as(-500, 500);
    for (i64 p : primes) {
        for (int it = 0; it < 50; ++it) {
            i64 a = as(rng);
            i64 am = ((a % p) + p) % p;
            int expected;
            if (am == 0) expected = 0;
            else {
                i64 e = 1;
                for (i64 k = 0; k < (p - 1) / 2; ++k) e = e * am % p;
                expected = (e == 1) ? 1 : -1;
            }
            CHECK(kronecker(a, p) == expected);
        }
    }
}

TEST_CASE("sqrt_mod returns a square root") {
    for (i64 p : {5LL, 13LL, 17LL, 97LL, 1009LL, 65537LL}) {
        for (i64 a = 1; a < 20; ++a) {
            if (kronecker(a, p) != 1) continue;
            i64 s = sqrt_mod(a, p);
            CHECK((i128)s * s % p == a % p);
        }
    }
}

TEST_CASE("extended-precision embeddings carry ~34 digits") {
    for (i64 d : {-7LL, 3LL, 43LL}) {
        FieldSpec f = make_field(d);
        AlgInt x{123456, -7891, f};
        f128 n = (f128)x.norm();
        f128 prod;
        if (f.real()) prod = x.sigma1_q() * x.sigma2_q();
        else {
            C128 s = x.sigma1_cq();
            prod = s.re * s.re + s.im * s.im;  // sigma1 * conj(sigma1) = N for d < 0
        }
        CHECK((double)fabsq(prod - n) <= 1e-28 * (double)fabsq(n));
    }
}
