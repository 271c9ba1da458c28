// harmanlab: command-line front door for the quadratic-field sieve laboratory.
//
// Subcommands: primes, ideals, buchstab, ctheta, nu, sieve, weights, approx,
// goodpair, selftest. JSON is the canonical machine format; CSV only for
// tabular dumps. Exit codes: 0 ok, 1 usage, 2 precondition violation,
// 3 budget exhaustion.

#include <CLI11.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <iostream>
#include <random>
#include <string>

#include "harmanlab/approx.hpp"
#include "harmanlab/buchstab.hpp"
#include "harmanlab/constants.hpp"
#include "harmanlab/ideals.hpp"
#include "harmanlab/report.hpp"
#include "harmanlab/sieve.hpp"
#include "harmanlab/weights.hpp"

using namespace harmanlab;

namespace {

void emit(const RunConfig& cfg, ojson result) {
    ojson out;
    out["config"] = cfg.header();
    out["result"] = std::move(result);
    std::cout << out.dump(2) << "\n";
}

i64 parse_field_arg(const std::string& field_str, i64 d_flag) {
    if (!field_str.empty()) {
        // accepts "d=-1" or a bare integer
        auto pos = field_str.find('=');
        return std::stoll(pos == std::string::npos ? field_str : field_str.substr(pos + 1));
    }
    return d_flag;
}

WeightSpec build_weight(const FieldSpec& f, const std::string& kind, double N, int C,
                        double delta, double x1, double x2, double are, double aim,
                        double scale, double eps = 0.3) {
    if (C <= 0) C = std::min(64, (int)std::ceil(100.0 / eps));  // the default power
    WeightSpec w;
    if (kind == "characteristic") w = characteristic_weight(N);
    else if (kind == "imag_gauss_plain") w = imag_gauss_plain(f, N);
    else if (kind == "imag_gauss_pow") w = imag_gauss_pow(f, N, C);
    else if (kind == "real_product") w = real_product_weight(f, N, C);
    else if (kind == "omega_tilde")
        w = f.real() ? omega_tilde_real(f, N, C, delta, x1, x2)
                     : omega_tilde_imag(f, N, C, delta, are, aim);
    else throw precondition_error("unknown weight kind: " + kind);
    w.scale = scale;
    return w;
}

ojson condition_report_json(const ConditionReport& r) {
    ojson j;
    j["condition"] = r.condition;
    j["lhs"] = r.lhs;
    j["rhs_model"] = r.rhs_model;
    j["ratio"] = r.ratio;
    j["pass"] = r.pass;
    j["params"] = r.params;
    return j;
}

ojson alg_json(const AlgInt& x) { return ojson{{"a", x.a}, {"b", x.b}}; }

int run_selftest(bool quick, unsigned long long seed) {
    int failures = 0;
    auto report = [&](const char* name, bool ok) {
        printf("  [%s] %s\n", ok ? "ok" : "FAIL", name);
        if (!ok) ++failures;
    };
    std::mt19937_64 rng(seed);

    {
        FieldSpec qi = make_field(-1);
        std::uniform_int_distribution<i64> c(-2000, 2000);
        bool ok = true;
        for (int i = 0; i < (quick ? 1000 : 10000); ++i) {
            AlgInt x{c(rng), c(rng), qi}, y{c(rng), c(rng), qi};
            if ((x * y).norm() != x.norm() * y.norm()) ok = false;
        }
        report("norm multiplicativity (Q(i))", ok);
    }
    {
        FieldSpec q3 = make_field(3);
        AlgInt eps = q3.unit();
        AlgInt p = eps * eps.conj();
        report("fundamental unit eps*conj(eps) = +-1 (d=3)", p.b == 0 && std::llabs(p.a) == 1);
    }
    {
        BuchstabTable B(6.0, 1e-3);
        bool ok = std::fabs(B.eval(2.0) - 0.5) == 0.0;
        double worst = 0;
        for (int i = 1; i <= 100; ++i) {
            double u = 2 + i / 100.0;
            worst = std::max(worst, std::fabs(B.eval_integral_form(u) - B.eval(u)));
        }
        report("Buchstab closed form vs recursion", ok && worst < 1e-8);
    }
    {
        FieldSpec qi = make_field(-1);
        PrimeTable t = PrimeTable::build(qi, 5000);
        WeightSpec w = characteristic_weight(3000);
        bool ok = true;
        std::uniform_int_distribution<size_t> pq(0, t.q_index(100));
        for (int i = 0; i < (quick ? 5 : 25); ++i) {
            size_t a = pq(rng), b = pq(rng);
            if (a == b) continue;
            if (a > b) std::swap(a, b);
            if (buchstab_identity_residual(t, w, unit_ideal(), a, b) != 0.0) ok = false;
        }
        report("Buchstab identity exact (characteristic weights)", ok);
    }
    {
        bool ok = nu_of_eta(0).nu == 7.0 / 44.0;
        report("nu(0) = 7/44", ok);
    }
    {
        BuchstabTable B(8.0, 1e-3);
        ThetaConstant c = c_theta(0.25, B);
        report("C(1/4) = 1", c.value == 1.0);
    }
    {
        FieldSpec qi = make_field(-1);
        std::uniform_real_distribution<double> z(-5, 5);
        std::uniform_int_distribution<i64> l(-20, 20);
        bool ok = true;
        for (int i = 0; i < (quick ? 500 : 5000); ++i) {
            std::complex<double> v(z(rng), z(rng));
            AlgInt q{l(rng), l(rng), qi};
            if (std::fabs(dist_omega(qi, v) - dist_omega(qi, v + q.sigma1())) > 1e-12) ok = false;
        }
        report("||.||_omega lattice periodicity", ok);
    }
    {
        FieldSpec q3 = make_field(3);
        bool ok = true;
        std::uniform_real_distribution<double> th(-2, 2);
        for (int i = 0; i < 20; ++i) {
            double t0 = th(rng);
            if (std::fabs(G_series(q3, t0, 1.0, 2) - G_series(q3, t0 + 1, 1.0, 2)) > 1e-14)
                ok = false;
        }
        report("G(theta, x) periodicity", ok);
    }
    {
        FieldSpec q3 = make_field(3);
        auto v = mellin_phi(q3, 0.0, {1.0, 0.0}, 1);
        report("phi_0(1) = 1/(12 pi) at C=1",
               std::fabs(v.real() - 1.0 / (12 * 3.14159265358979323846)) < 1e-14);
    }
    {
        FieldSpec q3 = make_field(3);
        double a = real_product_constant(q3, 2), b = real_product_constant_closed(q3, 2);
        report("real-product normalizer: two routes agree", std::fabs(a - b) < 1e-9 * b);
    }
    printf("selftest: %s\n", failures == 0 ? "all checks passed" : "FAILURES present");
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"harmanlab: sieve machinery for quadratic fields of class number one"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    unsigned long long seed = 42;
    app.add_option("--seed", seed, "seed for randomized audit sampling");
    app.set_config("--config", "", "config file with the same keys as the flags");

    // ---- primes ----
    auto* sc_primes = app.add_subcommand("primes", "enumerate prime ideals; CSV (norm,p,tag,a,b)");
    i64 pr_d = -1, pr_xmax = 100;
    bool pr_csv = false;
    sc_primes->add_option("--d", pr_d, "field discriminant parameter d");
    sc_primes->add_option("--xmax", pr_xmax, "strict norm bound");
    sc_primes->add_flag("--csv", pr_csv, "emit CSV instead of JSON");

    // ---- ideals ----
    auto* sc_ideals = app.add_subcommand("ideals", "count/enumerate ideals up to a norm bound");
    i64 id_d = -1, id_bound = 100;
    bool id_list = false;
    sc_ideals->add_option("--d", id_d, "field d");
    sc_ideals->add_option("--norm-bound", id_bound, "inclusive norm bound");
    sc_ideals->add_flag("--list", id_list, "list (norm, d2, d3, mobius) per ideal");

    // ---- buchstab ----
    auto* sc_buch = app.add_subcommand("buchstab", "evaluate the Buchstab function");
    double bu_u = -1, bu_umax = 20.0, bu_h = 1e-4;
    std::vector<double> bu_dump;
    sc_buch->add_option("--u", bu_u, "single evaluation point");
    sc_buch->add_option("--umax", bu_umax, "table upper end");
    sc_buch->add_option("--step", bu_h, "grid step (<= 1e-3)");
    sc_buch->add_option("--dump", bu_dump, "u0 u1 step: CSV dump (u, B(u))")->expected(3);

    // ---- ctheta ----
    auto* sc_ct = app.add_subcommand("ctheta", "lower-bound sieve constant C(theta)");
    double ct_theta = -1;
    std::vector<double> ct_sweep;
    bool ct_csv = false;
    sc_ct->add_option("--theta", ct_theta, "theta in [1/4, 2/7]");
    sc_ct->add_option("--sweep", ct_sweep, "lo hi step")->expected(3);
    sc_ct->add_flag("--csv", ct_csv, "CSV output for sweeps");

    // ---- nu ----
    auto* sc_nu = app.add_subcommand("nu", "exponent map nu(eta)");
    double nu_eta = 0.0;
    sc_nu->add_option("--eta", nu_eta, "eta in [0, 7/44)");

    // ---- sieve ----
    auto* sc_sieve = app.add_subcommand("sieve", "sifting sums and checks");
    sc_sieve->require_subcommand(1);
    i64 sv_d = -1;
    double sv_N = 1e4;
    std::string sv_weight = "characteristic";
    int sv_C = 0;
    double sv_z = 0, sv_p = 2, sv_q = 0, sv_u = 2.0;
    i64 sv_rnorm = 1;
    double sv_gamma = 1, sv_rho = 2, sv_T = 10;
    for (auto* s : {sc_sieve->add_subcommand("phi", "Phi_r(w, Q(z)) by exact enumeration"),
                    sc_sieve->add_subcommand("identity", "Buchstab identity residual"),
                    sc_sieve->add_subcommand("rough-check", "characteristic-weight asymptotic"),
                    sc_sieve->add_subcommand("genweight-check", "smooth-weight asymptotic"),
                    sc_sieve->add_subcommand("surgery", "smoothed indicator error")}) {
        s->add_option("--d", sv_d);
        s->add_option("--N", sv_N);
        s->add_option("--weight", sv_weight,
                      "characteristic|imag_gauss_plain|imag_gauss_pow|real_product");
        s->add_option("--C", sv_C);
        s->add_option("--r-norm", sv_rnorm, "use the first prime ideal of norm >= this as r");
        s->add_option("--z", sv_z, "sifting threshold (phi)");
        s->add_option("--p", sv_p, "norm threshold selecting p = Q(p)");
        s->add_option("--q", sv_q, "norm threshold selecting q = Q(q)");
        s->add_option("--u", sv_u, "target u (rough/genweight checks)");
        s->add_option("--gamma", sv_gamma);
        s->add_option("--rho", sv_rho);
        s->add_option("--T", sv_T);
    }

    // ---- weights ----
    auto* sc_w = app.add_subcommand("weights", "weight families and condition audits");
    auto* sc_audit = sc_w->add_subcommand("audit", "audit one boxed condition");
    std::string au_cond = "keycond", au_field, au_kind = "imag_gauss_plain";
    i64 au_d = -1;
    double au_N = 1e5, au_eps = 0.3, au_xi = 0.5, au_A = 2.0, au_eta = 0.01;
    double au_delta = 0.05, au_x1 = 0, au_x2 = 0, au_are = 0, au_aim = 0, au_lambda = 1.0;
    double au_caudit = 3.0;
    i64 au_rnorm = 1;
    int au_C = 0, au_samples = 1000;
    sc_audit->add_option("--cond", au_cond,
                         "keycond|finitecond|tailcond|Xcond|newsmallandlarge|neededWbound");
    sc_audit->add_option("--field", au_field, "field as d=<int>");
    sc_audit->add_option("--d", au_d);
    sc_audit->add_option("--N", au_N);
    sc_audit->add_option("--weight", au_kind);
    sc_audit->add_option("--C", au_C, "power in the weight family; 0 = min(64, ceil(100/eps))");
    sc_audit->add_option("--eps", au_eps);
    sc_audit->add_option("--xi", au_xi);
    sc_audit->add_option("--A", au_A);
    sc_audit->add_option("--eta", au_eta);
    sc_audit->add_option("--lambda", au_lambda, "scale factor (omega = lambda W)");
    sc_audit->add_option("--delta", au_delta);
    sc_audit->add_option("--x1", au_x1);
    sc_audit->add_option("--x2", au_x2);
    sc_audit->add_option("--alpha-re", au_are);
    sc_audit->add_option("--alpha-im", au_aim);
    sc_audit->add_option("--r-norm", au_rnorm, "first prime ideal of norm >= this as r");
    sc_audit->add_option("--c-audit", au_caudit);
    sc_audit->add_option("--samples", au_samples);

    // ---- approx ----
    auto* sc_ap = app.add_subcommand("approx", "Diophantine approximation searches");
    sc_ap->require_subcommand(1);
    auto* sc_rec = sc_ap->add_subcommand("records", "||p alpha||_omega record search");
    auto* sc_rrec = sc_ap->add_subcommand("real-records", "two-embedding record search");
    auto* sc_gp1 = sc_ap->add_subcommand("goodpair", "Dirichlet witnesses + eta classification");
    i64 ap_d = -1;
    std::string ap_are = "3.14159265358979323846264338327950288",
                ap_aim = "2.71828182845904523536028747135266250";
    std::string ap_x1 = "3.14159265358979323846264338327950288",
                ap_x2 = "2.71828182845904523536028747135266250";
    double ap_nmax = 1e6, ap_wmax = 1e5, ap_nu = 7.0 / 44.0;
    bool ap_json = true;
    int ap_maxout = 25;
    for (auto* s : {sc_rec, sc_rrec, sc_gp1}) {
        s->add_option("--d", ap_d);
        s->add_option("--nmax", ap_nmax);
        s->add_option("--wmax", ap_wmax);
        s->add_option("--nu", ap_nu);
        s->add_option("--alpha-re", ap_are, "decimal string, used at extended precision");
        s->add_option("--alpha-im", ap_aim);
        s->add_option("--x1", ap_x1);
        s->add_option("--x2", ap_x2);
        s->add_option("--max-output", ap_maxout, "cap on records echoed into the report");
        s->add_flag("--json,!--no-json", ap_json);
    }
    auto* sc_gp2 = app.add_subcommand("goodpair", "alias for approx goodpair");
    sc_gp2->add_option("--d", ap_d);
    sc_gp2->add_option("--wmax", ap_wmax);
    sc_gp2->add_option("--x1", ap_x1);
    sc_gp2->add_option("--x2", ap_x2);
    sc_gp2->add_option("--max-output", ap_maxout);

    // ---- selftest ----
    auto* sc_self = app.add_subcommand("selftest", "run the invariant battery");
    bool st_quick = false;
    sc_self->add_flag("--quick", st_quick);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    RunConfig cfg;
    cfg.seed = seed;
    cfg.threads = env_thread_cap();

    try {
        if (*sc_primes) {
            cfg.subcommand = "primes";
            cfg.flags = {{"d", pr_d}, {"xmax", pr_xmax}};
            FieldSpec f = make_field(pr_d);
            PrimeTable t = PrimeTable::build(f, pr_xmax);
            if (pr_csv) {
                printf("norm,p,tag,a,b\n");
                for (const PrimeIdeal& P : t.ideals())
                    printf("%lld,%lld,%s,%lld,%lld\n", P.norm, P.p, to_string(P.tag).c_str(),
                           P.gen.a, P.gen.b);
            } else {
                ojson r;
                r["count"] = t.size();
                PiKReport pik = pi_K(t, (double)pr_xmax);
                r["li"] = pik.li;
                r["ratio_pnt"] = pik.ratio_pnt;
                r["normalized_error"] = pik.normalized_error;
                ojson list = ojson::array();
                for (const PrimeIdeal& P : t.ideals())
                    list.push_back({{"norm", P.norm}, {"p", P.p}, {"tag", to_string(P.tag)},
                                    {"a", P.gen.a}, {"b", P.gen.b}});
                r["ideals"] = std::move(list);
                emit(cfg, r);
            }
        } else if (*sc_ideals) {
            cfg.subcommand = "ideals";
            cfg.flags = {{"d", id_d}, {"norm_bound", id_bound}};
            FieldSpec f = make_field(id_d);
            PrimeTable t = PrimeTable::build(f, id_bound + 1);
            i64 count = 0;
            ojson list = ojson::array();
            for_each_sifted_ideal(t, 0, id_bound, false,
                                  [&](i64 n, double, i64, const AlgInt*) {
                                      ++count;
                                      if (id_list && (i64)list.size() < 1000)
                                          list.push_back({{"norm", n}});
                                  });
            ojson r;
            r["count"] = count;
            if (id_list) r["ideals"] = std::move(list);
            emit(cfg, r);
        } else if (*sc_buch) {
            cfg.subcommand = "buchstab";
            BuchstabTable T(bu_umax, bu_h);
            if (!bu_dump.empty()) {
                printf("u,B\n");
                for (double u = bu_dump[0]; u <= bu_dump[1] + 1e-12; u += bu_dump[2])
                    printf("%.12g,%.12g\n", u, T.eval(u));
            } else if (bu_u >= 1.0) {
                cfg.flags = {{"u", bu_u}, {"umax", bu_umax}, {"h", bu_h}};
                ojson r;
                r["u"] = bu_u;
                r["B"] = T.eval(bu_u);
                emit(cfg, r);
            } else {
                throw precondition_error("buchstab: provide --u or --dump");
            }
        } else if (*sc_ct) {
            cfg.subcommand = "ctheta";
            BuchstabTable B(20.0, 1e-4);
            if (!ct_sweep.empty()) {
                if (ct_csv) {
                    printf("theta,C,I1,I2\n");
                    for (double th = ct_sweep[0]; th <= ct_sweep[1] + 1e-12; th += ct_sweep[2]) {
                        ThetaConstant c = c_theta(th, B);
                        printf("%.10g,%.12g,%.12g,%.12g\n", th, c.value, c.I1, c.I2);
                    }
                } else {
                    ojson arr = ojson::array();
                    for (double th = ct_sweep[0]; th <= ct_sweep[1] + 1e-12; th += ct_sweep[2]) {
                        ThetaConstant c = c_theta(th, B);
                        arr.push_back({{"theta", th}, {"C", c.value}, {"I1", c.I1}, {"I2", c.I2}});
                    }
                    cfg.flags = {{"sweep", ct_sweep}};
                    emit(cfg, arr);
                }
            } else {
                cfg.flags = {{"theta", ct_theta}};
                ThetaConstant c = c_theta(ct_theta, B);
                emit(cfg, {{"theta", c.theta}, {"C", c.value}, {"I1", c.I1}, {"I2", c.I2},
                           {"err_estimate", c.err_estimate}});
            }
        } else if (*sc_nu) {
            cfg.subcommand = "nu";
            cfg.flags = {{"eta", nu_eta}};
            NuValue v = nu_of_eta(nu_eta);
            emit(cfg, {{"eta", v.eta}, {"nu", v.nu}, {"branch1", v.branch1},
                       {"branch2", v.branch2}});
        } else if (*sc_sieve) {
            cfg.subcommand = "sieve";
            CLI::App* sub = sc_sieve->get_subcommands().front();
            std::string op = sub->get_name();
            cfg.flags = {{"op", op}, {"d", sv_d}, {"N", sv_N}, {"weight", sv_weight},
                         {"C", sv_C}};
            if (op == "surgery") {
                SurgeryReport r = smoothed_indicator(sv_gamma, sv_rho, sv_T);
                emit(cfg, {{"gamma", r.gamma}, {"rho", r.rho}, {"T", r.T},
                           {"approx", r.approx}, {"indicator", r.indicator},
                           {"abs_err", r.abs_err}, {"err_scaled", r.err_scaled}});
                return 0;
            }
            FieldSpec f = make_field(sv_d);
            if (sv_weight == "omega_tilde")
                throw precondition_error("sieve: use 'weights audit' for omega_tilde");
            WeightSpec w = build_weight(f, sv_weight, sv_N, sv_C, 0, 0, 0, 0, 0, 1.0);
            i64 bound = std::max<i64>(w.support_cutoff() + 1, 100);
            PrimeTable t = PrimeTable::build(f, bound,
                                             TableOptions{12000000, f.real()});
            IdealRep r = unit_ideal();
            if (sv_rnorm > 1) r = make_ideal(t, {{(uint32_t)t.q_index((double)sv_rnorm), 1}});
            if (op == "phi") {
                PhiResult pr = sv_z >= 2 ? S_of(t, w, r, sv_z)
                                         : phi_at(t, w, r, t.q_index(std::max(2.0, sv_p)));
                emit(cfg, {{"value", pr.value}, {"exact", pr.exact}, {"terms", pr.terms},
                           {"budget", pr.budget_used}});
            } else if (op == "identity") {
                double res = buchstab_identity_residual(t, w, r, t.q_index(std::max(2.0, sv_p)),
                                                        t.q_index(std::max(2.0, sv_q)));
                emit(cfg, {{"residual", res}});
            } else {
                BuchstabTable B(8.0, 1e-4);
                double y = sv_N / (double)r.norm;
                size_t pidx = t.q_index(std::pow(y, 1.0 / sv_u));
                AsympReport rep = (op == "rough-check")
                                      ? rough_asymptotic_check(t, B, sv_N, r, pidx)
                                      : genweight_asymptotic_check(t, B, w, r, pidx);
                emit(cfg, {{"exact", rep.exact}, {"predicted", rep.predicted},
                           {"rel_err", rep.rel_err}, {"u", rep.u}, {"y", rep.y},
                           {"prime_norm", rep.prime_norm}});
            }
        } else if (*sc_w) {
            cfg.subcommand = "weights audit";
            i64 d = parse_field_arg(au_field, au_d);
            FieldSpec f = make_field(d);
            WeightSpec w =
                build_weight(f, au_kind, au_N, au_C, au_delta, au_x1, au_x2, au_are, au_aim,
                             au_lambda, au_eps);
            cfg.flags = {{"cond", au_cond}, {"d", d}, {"N", au_N}, {"weight", au_kind},
                         {"C", au_C}, {"eps", au_eps}, {"xi", au_xi}, {"A", au_A},
                         {"eta", au_eta}, {"lambda", au_lambda}, {"c_audit", au_caudit}};
            AuditOptions opts;
            opts.c_audit = au_caudit;
            i64 bound = w.support_cutoff() + 1;
            bool need_gen = f.real() || w.needs_generator();
            PrimeTable t = PrimeTable::build(f, need_gen ? bound : std::min<i64>(bound, 4000),
                                             TableOptions{12000000, need_gen});
            IdealRep r = unit_ideal();
            if (au_rnorm > 1) r = make_ideal(t, {{(uint32_t)t.q_index((double)au_rnorm), 1}});
            ConditionReport rep;
            if (au_cond == "keycond") rep = audit_keycond(t, w, r, opts);
            else if (au_cond == "finitecond") rep = audit_finitecond(t, w, r, au_eps, opts);
            else if (au_cond == "tailcond") {
                PrimeTable tg = PrimeTable::build(f, bound, TableOptions{12000000, need_gen});
                rep = audit_tailcond(tg, w, r, au_xi, opts);
            } else if (au_cond == "Xcond") {
                PrimeTable tg = PrimeTable::build(f, bound, TableOptions{12000000, need_gen});
                rep = audit_Xcond(tg, w, au_eps, au_A, opts);
            } else if (au_cond == "newsmallandlarge") {
                PrimeTable tg = PrimeTable::build(f, bound, TableOptions{12000000, need_gen});
                rep = audit_newsmallandlarge(tg, w, au_eps, au_eta, au_lambda, opts);
            } else if (au_cond == "neededWbound") {
                PrimeTable tg = PrimeTable::build(f, bound, TableOptions{12000000, need_gen});
                rep = audit_needed_w_bound(tg, w, au_eps, au_samples, opts);
            } else {
                throw precondition_error("unknown condition: " + au_cond);
            }
            emit(cfg, condition_report_json(rep));
        } else if (*sc_ap || *sc_gp2) {
            bool is_records = *sc_ap && *sc_rec;
            bool is_rrec = *sc_ap && *sc_rrec;
            FieldSpec f = make_field(ap_d);
            if (is_records) {
                cfg.subcommand = "approx records";
                cfg.flags = {{"d", ap_d}, {"alpha_re", ap_are}, {"alpha_im", ap_aim},
                             {"nmax", ap_nmax}, {"nu", ap_nu}};
                PrimeTable t = PrimeTable::build(f, (i64)ap_nmax + 100);
                RecordSearchResult res =
                    record_search(t, parse_f128(ap_are), parse_f128(ap_aim), (i64)ap_nmax, ap_nu);
                ojson recs = ojson::array();
                for (const ApproxRecord& rr : res.records) {
                    if ((int)recs.size() >= ap_maxout) break;
                    recs.push_back({{"p", alg_json(rr.p)}, {"norm", rr.norm}, {"dist", rr.dist},
                                    {"nu_p", rr.nu_p}, {"nearest", alg_json(rr.nearest)},
                                    {"verified_hiprec", rr.verified_hiprec}});
                }
                ojson rm = ojson::array();
                for (auto [n, nu] : res.running_max) rm.push_back({{"norm", n}, {"nu", nu}});
                emit(cfg, {{"record_count", res.records.size()},
                           {"primes_scanned", res.primes_scanned},
                           {"near_field_point_warning", res.near_field_point_warning},
                           {"records", recs}, {"running_max", rm}});
            } else if (is_rrec) {
                cfg.subcommand = "approx real-records";
                cfg.flags = {{"d", ap_d}, {"x1", ap_x1}, {"x2", ap_x2}, {"nmax", ap_nmax},
                             {"nu", ap_nu}};
                PrimeTable t = PrimeTable::build(f, (i64)ap_nmax + 100);
                RealRecordResult res =
                    real_record_search(t, parse_f128(ap_x1), parse_f128(ap_x2), (i64)ap_nmax, ap_nu);
                ojson recs = ojson::array();
                for (const RealRecord& rr : res.records) {
                    if ((int)recs.size() >= ap_maxout) break;
                    recs.push_back({{"p", alg_json(rr.p)}, {"norm", rr.norm}, {"err", rr.err},
                                    {"nu_p", rr.nu_p}, {"nearest", alg_json(rr.nearest)},
                                    {"verified_hiprec", rr.verified_hiprec}});
                }
                emit(cfg, {{"record_count", res.records.size()},
                           {"primes_scanned", res.primes_scanned},
                           {"near_field_point_warning", res.near_field_point_warning},
                           {"records", recs}});
            } else {
                cfg.subcommand = "goodpair";
                cfg.flags = {{"d", ap_d}, {"x1", ap_x1}, {"x2", ap_x2}, {"wmax", ap_wmax}};
                WitnessSearchResult res =
                    dirichlet_witnesses(f, parse_f128(ap_x1), parse_f128(ap_x2), (i64)ap_wmax);
                std::vector<double> grid;
                for (int i = 0; i <= 60; ++i) grid.push_back(i * 0.01);
                GoodPairReport rep = classify_eta_good(res.witnesses, grid);
                ojson wits = ojson::array();
                for (const Witness& wv : res.witnesses) {
                    if ((int)wits.size() >= ap_maxout) break;
                    wits.push_back({{"u", wv.u}, {"v", wv.v}, {"f", wv.f}, {"g", wv.g},
                                    {"W", wv.W}, {"gcd", wv.gcd_fg}, {"err1", wv.err1},
                                    {"err2", wv.err2}});
                }
                ojson dy = ojson::array();
                for (auto [W, g] : rep.dyadic_min) dy.push_back({{"W", W}, {"gcd", g}});
                emit(cfg, {{"witness_count", res.witnesses.size()},
                           {"near_field_point_warning", res.near_field_point_warning},
                           {"eta_hat", rep.eta_hat}, {"eta_grid", rep.eta_grid},
                           {"classification", rep.classification}, {"dyadic_min", dy},
                           {"witnesses", wits}});
            }
        } else if (*sc_self) {
            return run_selftest(st_quick, seed);
        }
    } catch (const precondition_error& e) {
        fprintf(stderr, "precondition violated: %s\n", e.what());
        return 2;
    } catch (const budget_error& e) {
        fprintf(stderr, "budget exhausted: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
