#include "harmanlab/approx.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace harmanlab {

namespace {

double nearest_dist(double x) { return std::fabs(x - std::round(x)); }

// omega coordinates of a complex number: z = xc + yc * omega
void omega_coords(const FieldSpec& f, std::complex<double> z, double& xc, double& yc) {
    yc = z.imag() / f.omega_im();
    xc = z.real() - yc * f.omega_re();
}

void omega_coords_q(const FieldSpec& f, const C128& z, f128& xc, f128& yc) {
    f128 wi = f.omega_kind == OmegaKind::SqrtD ? f.sqrt_abs_d_q : f.sqrt_abs_d_q / 2;
    f128 wr = f.omega_kind == OmegaKind::SqrtD ? (f128)0 : (f128)0.5;
    yc = z.im / wi;
    xc = z.re - yc * wr;
}

}  // namespace

double dist_omega(const FieldSpec& f, std::complex<double> z) {
    if (!f.imaginary()) throw precondition_error("dist_omega: imaginary field required");
    double xc, yc;
    omega_coords(f, z, xc, yc);
    return std::max(nearest_dist(xc), nearest_dist(yc));
}

f128 dist_omega_q(const FieldSpec& f, const C128& z) {
    f128 xc, yc;
    omega_coords_q(f, z, xc, yc);
    f128 dx = int_dist(xc), dy = int_dist(yc);
    return dx > dy ? dx : dy;
}

namespace {

// smallest ||q alpha||_omega over 1 <= q <= qmax; a tiny value means alpha is
// indistinguishable from a small-height field element at working precision
bool near_field_point_imag(const FieldSpec& f, f128 are, f128 aim, int qmax = 1000) {
    C128 alpha{are, aim};
    for (int q = 1; q <= qmax; ++q) {
        C128 z{alpha.re * q, alpha.im * q};
        if (dist_omega_q(f, z) < (f128)1e-20) return true;
    }
    return false;
}

bool near_field_point_real(const FieldSpec& f, f128 x1, f128 x2, int qmax = 60) {
    // x_i ~ sigma_i((u + v sqrt d)/q) for small u, v, q
    for (int q = 1; q <= qmax; ++q) {
        f128 t1 = x1 * q, t2 = x2 * q;
        f128 u = rintq((t1 + t2) / 2);
        f128 v = rintq((t1 - t2) / (2 * f.sqrt_abs_d_q));
        f128 r1 = fabsq(t1 - (u + v * f.sqrt_abs_d_q));
        f128 r2 = fabsq(t2 - (u - v * f.sqrt_abs_d_q));
        if (r1 < (f128)1e-20 && r2 < (f128)1e-20) return true;
    }
    return false;
}

}  // namespace

RecordSearchResult record_search(const PrimeTable& t, f128 alpha_re, f128 alpha_im, i64 nmax,
                                 double nu_target) {
    const FieldSpec& f = t.field();
    if (!f.imaginary()) throw precondition_error("record_search: imaginary field required");
    if (nmax > 10'000'000'000LL) throw precondition_error("record_search: nmax <= 1e10");
    if (!t.has_generators()) throw precondition_error("record_search: generator table required");
    if ((double)nmax >= (double)t.norm_bound())
        throw budget_error("record_search: table must cover norms through nmax");

    RecordSearchResult out;
    out.near_field_point_warning = near_field_point_imag(f, alpha_re, alpha_im);

    std::complex<double> alpha((double)alpha_re, (double)alpha_im);
    C128 alpha_q{alpha_re, alpha_im};
    double best_nu = -1;
    for (const PrimeIdeal& P : t.ideals()) {
        if (P.norm > nmax) break;
        ++out.primes_scanned;
        std::complex<double> z = P.gen.sigma1() * alpha;
        double d = dist_omega(f, z);
        double nu = d > 0 ? -std::log(d) / std::log((double)P.norm) : 1e30;
        if (nu > best_nu) {
            best_nu = nu;
            out.running_max.push_back({P.norm, nu});
        }
        double threshold = std::pow((double)P.norm, -nu_target);
        if (d > std::min(0.5, 1e3 * threshold)) continue;  // scan margin
        // re-verify at extended precision
        C128 zq = P.gen.sigma1_cq() * alpha_q;
        f128 dq = dist_omega_q(f, zq);
        f128 thq = expq((f128)(-nu_target) * logq((f128)P.norm));
        if (dq <= thq) {
            ApproxRecord rec;
            rec.p = P.gen;
            rec.norm = P.norm;
            rec.dist = (double)dq;
            rec.nu_p = dq > 0 ? (double)(-logq(dq) / logq((f128)P.norm)) : 1e30;
            double xc, yc;
            omega_coords(f, z, xc, yc);
            rec.nearest = AlgInt{(i64)std::llround(xc), (i64)std::llround(yc), f};
            rec.verified_hiprec = true;
            out.records.push_back(rec);
        }
    }
    return out;
}

CorollaryReport corollary_check(const FieldSpec& f, const ApproxRecord& rec, f128 alpha_re,
                                f128 alpha_im) {
    CorollaryReport rep;
    std::complex<double> omega(f.omega_re(), f.omega_im());
    rep.c_omega = std::max(std::abs(1.0 + omega), std::abs(1.0 - omega));
    C128 alpha{alpha_re, alpha_im};
    C128 p = rec.p.sigma1_cq();
    C128 a = rec.nearest.sigma1_cq();
    C128 pa = p * alpha;
    C128 diff = pa - a;
    f128 lhs = diff.abs() / p.abs();  // |alpha - a/p|
    rep.lhs = (double)lhs;
    rep.rhs_chain = rep.c_omega * rec.dist / std::sqrt((double)rec.norm);
    rep.rhs_target = std::pow((double)rec.norm, -0.5 - rec.nu_p);
    rep.chain_ok = rep.lhs <= rep.rhs_chain * (1 + 1e-9);
    rep.target_ok = rep.lhs <= rep.rhs_target * rep.c_omega * (1 + 1e-9);
    return rep;
}

WitnessSearchResult dirichlet_witnesses(const FieldSpec& fld, f128 x1, f128 x2, i64 wmax) {
    if (!fld.real()) throw precondition_error("dirichlet_witnesses: real field required");
    if (wmax > 10'000'000LL) throw precondition_error("dirichlet_witnesses: wmax <= 1e7");

    WitnessSearchResult out;
    out.near_field_point_warning = near_field_point_real(fld, x1, x2);

    double eps1 = fld.unit().sigma1_real();
    double sw = std::sqrt((double)wmax);
    i64 fmax = (i64)std::ceil((eps1 + 1) * sw / 2) + 1;
    i64 gmax = (i64)std::ceil((eps1 + 1) * sw / (2 * fld.sqrt_abs_d)) + 1;
    double x1d = (double)x1, x2d = (double)x2;

    for (i64 g = -gmax; g <= gmax; ++g) {
        for (i64 fc = 0; fc <= fmax; ++fc) {
            if (fc == 0 && g <= 0) continue;
            AlgInt q{fc, g, fld};
            i64 W = std::llabs(q.norm());
            if (W == 0 || W > wmax) continue;
            ++out.denominators_scanned;
            if (canonical_associate(q) != q) continue;  // one representative per unit orbit
            double s1 = q.sigma1_real(), s2 = q.sigma2_real();
            double t1 = x1d * s1, t2 = x2d * s2;
            i64 u0 = (i64)std::llround((t1 + t2) / 2);
            i64 v0 = (i64)std::llround((t1 - t2) / (2 * fld.sqrt_abs_d));
            bool found = false;
            for (i64 du = -1; du <= 1 && !found; ++du)
                for (i64 dv = -1; dv <= 1 && !found; ++dv) {
                    AlgInt p{u0 + du, v0 + dv, fld};
                    // verify both inequalities at extended precision
                    f128 s1q = q.sigma1_q(), s2q = q.sigma2_q();
                    f128 e1 = fabsq(x1 - p.sigma1_q() / s1q);
                    f128 e2 = fabsq(x2 - p.sigma2_q() / s2q);
                    f128 bound = (f128)1 / W;
                    if (e1 > bound || e2 > bound) continue;
                    if (!coprime_elements(p, q)) continue;
                    Witness wit;
                    wit.u = p.a;
                    wit.v = p.b;
                    wit.f = q.a;
                    wit.g = q.b;
                    wit.W = W;
                    wit.gcd_fg = std::gcd(std::llabs(q.a), std::llabs(q.b));
                    wit.err1 = (double)e1;
                    wit.err2 = (double)e2;
                    wit.verified_hiprec = true;
                    out.witnesses.push_back(wit);
                    found = true;
                    if (e1 < (f128)1e-25 && e2 < (f128)1e-25)
                        out.near_field_point_warning = true;
                }
        }
    }
    std::sort(out.witnesses.begin(), out.witnesses.end(), [](const Witness& a, const Witness& b) {
        if (a.W != b.W) return a.W < b.W;
        if (a.f != b.f) return a.f < b.f;
        return a.g < b.g;
    });
    return out;
}

GoodPairReport classify_eta_good(const std::vector<Witness>& ws,
                                 const std::vector<double>& eta_grid) {
    GoodPairReport rep;
    rep.witness_count = ws.size();
    if (ws.size() < 10) {
        rep.classification = "inconclusive";
        return rep;
    }
    i64 wmin = ws.front().W, wmaxv = ws.front().W;
    for (const Witness& w : ws) {
        wmin = std::min(wmin, w.W);
        wmaxv = std::max(wmaxv, w.W);
    }
    if ((double)wmaxv / (double)wmin < 1000.0) {
        rep.classification = "inconclusive";
        return rep;
    }
    // per dyadic W-range, the witness minimizing gcd(f, g)
    std::map<int, Witness> best;
    for (const Witness& w : ws) {
        int k = 0;
        i64 v = w.W;
        while (v > 1) { v >>= 1; ++k; }
        auto it = best.find(k);
        if (it == best.end() || w.gcd_fg < it->second.gcd_fg) best[k] = w;
    }
    double eta_hat = 0;
    for (auto& [k, w] : best) {
        rep.dyadic_min.push_back({w.W, w.gcd_fg});
        if (w.gcd_fg >= 2 && w.W >= 2)
            eta_hat = std::max(eta_hat, std::log((double)w.gcd_fg) / std::log((double)w.W));
    }
    rep.eta_hat = eta_hat;
    rep.eta_grid = -1;
    for (double e : eta_grid)
        if (e >= eta_hat - 1e-12 && (rep.eta_grid < 0 || e < rep.eta_grid)) rep.eta_grid = e;
    if (rep.eta_grid < 0) {
        rep.classification = "inconclusive";  // grid does not reach the observed envelope
        return rep;
    }
    rep.classification = "consistent-with-eta-good(" + std::to_string(rep.eta_grid) + ")";
    return rep;
}

RealRecordResult real_record_search(const PrimeTable& t, f128 x1, f128 x2, i64 nmax,
                                    double nu_target) {
    const FieldSpec& f = t.field();
    if (!f.real()) throw precondition_error("real_record_search: real field required");
    if (nmax > 10'000'000'000LL) throw precondition_error("real_record_search: nmax <= 1e10");
    if (!t.has_generators()) throw precondition_error("real_record_search: generator table required");
    if ((double)nmax >= (double)t.norm_bound())
        throw budget_error("real_record_search: table must cover norms through nmax");

    RealRecordResult out;
    out.near_field_point_warning = near_field_point_real(f, x1, x2);
    double x1d = (double)x1, x2d = (double)x2;

    for (const PrimeIdeal& P : t.ideals()) {
        if (P.norm > nmax) break;
        ++out.primes_scanned;
        double s1 = P.gen.sigma1_real(), s2 = P.gen.sigma2_real();
        double t1 = x1d * s1, t2 = x2d * s2;
        i64 u0 = (i64)std::llround((t1 + t2) / 2);
        i64 v0 = (i64)std::llround((t1 - t2) / (2 * f.sqrt_abs_d));
        double best = 1e300;
        AlgInt best_a;
        for (i64 du = -1; du <= 1; ++du)
            for (i64 dv = -1; dv <= 1; ++dv) {
                AlgInt a{u0 + du, v0 + dv, f};
                double e = std::max(std::fabs(x1d - a.sigma1_real() / s1),
                                    std::fabs(x2d - a.sigma2_real() / s2));
                if (e < best) {
                    best = e;
                    best_a = a;
                }
            }
        double threshold = std::pow((double)P.norm, -0.5 - nu_target);
        if (best > std::min(0.5, 1e3 * threshold)) continue;
        // extended-precision verdict
        f128 s1q = P.gen.sigma1_q(), s2q = P.gen.sigma2_q();
        f128 e1 = fabsq(x1 - best_a.sigma1_q() / s1q);
        f128 e2 = fabsq(x2 - best_a.sigma2_q() / s2q);
        f128 eq = e1 > e2 ? e1 : e2;
        f128 thq = expq((f128)(-0.5 - nu_target) * logq((f128)P.norm));
        if (eq <= thq) {
            RealRecord rec;
            rec.p = P.gen;
            rec.norm = P.norm;
            rec.nearest = best_a;
            rec.err = (double)eq;
            rec.nu_p = eq > 0 ? (double)(-logq(eq) / logq((f128)P.norm)) - 0.5 : 1e30;
            rec.verified_hiprec = true;
            out.records.push_back(rec);
        }
    }
    return out;
}

}  // namespace harmanlab
