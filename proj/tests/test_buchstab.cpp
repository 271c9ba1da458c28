#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <vector>

#include "harmanlab/buchstab.hpp"
#include "harmanlab/field.hpp"

using namespace harmanlab;

namespace {

// Independent oracle: march (u B(u))' = B(u-1) with classical RK4 at step h.
// The lag midpoint u - 1 + h/2 is interpolated cubically from the stored
// grid, which is already complete one unit interval behind the front.
double buchstab_rk4_oracle(double target, double h = 1e-5) {
    long long n = (long long)std::llround(1.0 / h);
    long long total = (long long)std::llround((target - 1.0) * (double)n);
    std::vector<double> B(total + 1);
    auto u_of = [&](long long i) { return 1.0 + (double)i / (double)n; };
    for (long long i = 0; i <= std::min(n, total); ++i) B[i] = 1.0 / u_of(i);
    if (total <= n) return B[total];
    auto lag_mid = [&](long long i) {  // B at u_of(i) + h/2 by 4-point interpolation
        long long k0 = std::max(0LL, i - 1);
        double f0 = B[k0], f1 = B[k0 + 1], f2 = B[k0 + 2], f3 = B[k0 + 3];
        double s = (double)(i - k0) + 0.5;  // in units of h from k0
        double c0 = (s - 1) * (s - 2) * (s - 3) / -6.0;
        double c1 = s * (s - 2) * (s - 3) / 2.0;
        double c2 = s * (s - 1) * (s - 3) / -2.0;
        double c3 = s * (s - 1) * (s - 2) / 6.0;
        return c0 * f0 + c1 * f1 + c2 * f2 + c3 * f3;
    };
    double P = 2.0 * B[n];
    for (long long i = n; i + 1 <= total; ++i) {
        double k1 = B[i - n];
        double k23 = lag_mid(i - n);
        double k4 = B[i + 1 - n];
        P += h / 6.0 * (k1 + 4 * k23 + k4);
        B[i + 1] = P / u_of(i + 1);
    }
    return B[total];
}

}  // namespace

TEST_CASE("closed forms on [1,3]") {
    BuchstabTable T(6.0, 1e-4);
    CHECK(T.eval(2.0) == 0.5);
    CHECK(T.eval(1.0) == 1.0);
    CHECK(T.eval(2.5) == doctest::Approx((1 + std::log(1.5)) / 2.5).epsilon(1e-15));
    CHECK(T.eval(2.5) == doctest::Approx(0.56219).epsilon(1e-4));
    CHECK(T.eval(3.0) == doctest::Approx((1 + std::log(2.0)) / 3.0).epsilon(1e-15));
    CHECK(T.eval(3.0) == doctest::Approx(0.56438).epsilon(1e-4));
}

TEST_CASE("integral recursion agrees with the closed form on (2,3]") {
    BuchstabTable T(6.0, 1e-4);
    double worst = 0;
    for (int i = 1; i <= 1000; ++i) {
        double u = 2.0 + i / 1000.0;
        worst = std::max(worst, std::fabs(T.eval_integral_form(u) - T.eval(u)));
    }
    CHECK(worst <= 1e-8);
}

TEST_CASE("join continuity") {
    BuchstabTable T(6.0, 1e-4);
    CHECK(std::fabs(T.eval(2.0) - T.eval(2.0 + 1e-12)) <= 1e-10);
    CHECK(std::fabs(T.eval(3.0) - T.eval_integral_form(3.0 + 1e-9)) <= 1e-7);
    CHECK(std::fabs(T.eval(3.0 - 1e-9) - T.eval(3.0 + 1e-9)) <= 1e-7);
}

TEST_CASE("value at u = 10 against the RK4 marching oracle") {
    double oracle = buchstab_rk4_oracle(10.0, 1e-5);
    printf("    [oracle] B(10) via DDE march = %.12f\n", oracle);
    BuchstabTable T(12.0, 1e-4);
    double got = T.eval(10.0);
    printf("    [table ] B(10)              = %.12f\n", got);
    CHECK(std::fabs(got - oracle) <= 1e-9);
    CHECK(got == doctest::Approx(0.5615).epsilon(2e-3));
}

TEST_CASE("grid self-consistency: eval_integral_form reproduces grid values") {
    BuchstabTable T(8.0, 5e-4);
    for (double u : {3.2, 3.7, 4.0, 4.9, 5.5, 6.25, 7.5}) {
        CHECK(std::fabs(T.eval(u) - T.eval_integral_form(u)) <= 1e-8);
    }
}

TEST_CASE("u B(u) is nondecreasing beyond 2 and B stays positive") {
    BuchstabTable T(20.0, 1e-3);
    double prev = 0;
    for (size_t i = 0; i < T.grid().size(); ++i) {
        double u = T.grid_u(i);
        double p = u * T.grid()[i];
        CHECK(T.grid()[i] > 0.0);
        if (u >= 2.0) CHECK(p >= prev - 1e-12);
        prev = p;
    }
}

TEST_CASE("asymptotic flattening on [15,20]") {
    BuchstabTable T(20.0, 1e-3);
    double lo = 1e9, hi = -1e9;
    for (double u = 15.0; u <= 20.0; u += 0.01) {
        double v = T.eval(u);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    CHECK(hi - lo < 1e-3);
    // the flat level is the well-known e^-gamma = 0.5614594836 neighbourhood
    CHECK(T.eval(18.0) == doctest::Approx(0.56146).epsilon(1e-4));
}

TEST_CASE("halving h moves values by at most 4x the error target") {
    BuchstabTable A(8.0, 2e-4), B(8.0, 1e-4);
    for (double u : {3.5, 4.4, 5.3, 6.6, 7.7}) {
        CHECK(std::fabs(A.eval(u) - B.eval(u)) <= 4e-9);
    }
}

TEST_CASE("u_max = 2 degenerates to the pure closed form") {
    BuchstabTable T(2.0, 1e-3);
    CHECK(T.eval(1.5) == 1.0 / 1.5);
    CHECK(T.eval(2.0) == 0.5);
}

TEST_CASE("domain errors") {
    BuchstabTable T(6.0, 1e-3);
    CHECK_THROWS_AS(T.eval(0.5), precondition_error);
    CHECK_THROWS_AS(T.eval(7.0), precondition_error);
    CHECK_THROWS_AS(BuchstabTable(60.0, 1e-3), precondition_error);
    CHECK_THROWS_AS(BuchstabTable(6.0, 1e-2), precondition_error);
}
