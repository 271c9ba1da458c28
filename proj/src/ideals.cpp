#include "harmanlab/ideals.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "harmanlab/quadrature.hpp"

namespace harmanlab {

SplitTag splitting_type(const FieldSpec& f, i64 p) {
    if (p < 2 || !is_prime_u64((unsigned long long)p))
        throw precondition_error("splitting_type: p must be prime");
    if (f.discriminant % p == 0) return SplitTag::Ramified;
    int k = kronecker(f.discriminant, p);
    return k == 1 ? SplitTag::Split : SplitTag::Inert;
}

std::vector<i64> sieve_primes(i64 bound) {
    if (bound <= 2) return {};
    std::vector<uint8_t> comp(bound, 0);
    std::vector<i64> primes;
    for (i64 i = 2; i < bound; ++i) {
        if (comp[i]) continue;
        primes.push_back(i);
        for (i64 j = i * i; j < bound; j += i) comp[j] = 1;
    }
    return primes;
}

static double theta_of_gen(const FieldSpec& f, const AlgInt& g) {
    if (!f.real()) return 0.0;
    double t = std::log(std::fabs(g.sigma1_real() / g.sigma2_real())) / (2 * f.log_eps);
    t -= std::floor(t);
    if (t >= 1.0) t = 0.0;
    return t;
}

PrimeTable PrimeTable::build(const FieldSpec& f, i64 norm_bound, TableOptions opts) {
    if (norm_bound < 2) throw precondition_error("PrimeTable: norm bound must be >= 2");
    PrimeTable t;
    t.field_ = &f;
    t.norm_bound_ = norm_bound;
    t.with_generators_ = opts.with_generators;
    auto primes = sieve_primes(norm_bound);
    for (i64 p : primes) {
        SplitTag tag = (f.discriminant % p == 0)
                           ? SplitTag::Ramified
                           : (kronecker(f.discriminant, p) == 1 ? SplitTag::Split
                                                                : SplitTag::Inert);
        i64 nrm = (tag == SplitTag::Inert) ? p * p : p;
        if (nrm >= norm_bound) continue;
        if (opts.with_generators) {
            for (const AlgInt& g : prime_ideal_generators(f, p, tag))
                t.ideals_.push_back({nrm, p, tag, g, theta_of_gen(f, g)});
        } else {
            int copies = (tag == SplitTag::Split) ? 2 : 1;
            for (int c = 0; c < copies; ++c)
                t.ideals_.push_back({nrm, p, tag, AlgInt{}, (double)c});
        }
        if ((i64)t.ideals_.size() > opts.max_ideals)
            throw budget_error("PrimeTable: max_ideals cap exceeded");
    }
    std::sort(t.ideals_.begin(), t.ideals_.end(), [](const PrimeIdeal& x, const PrimeIdeal& y) {
        if (x.norm != y.norm) return x.norm < y.norm;
        if (x.gen.a != y.gen.a) return x.gen.a < y.gen.a;
        if (x.gen.b != y.gen.b) return x.gen.b < y.gen.b;
        return x.theta < y.theta;  // generator-free split pair
    });
    return t;
}

size_t PrimeTable::q_index(double z) const {
    if (z < 2) throw precondition_error("Q(z): z >= 2 required");
    auto it = std::lower_bound(ideals_.begin(), ideals_.end(), z,
                               [](const PrimeIdeal& pi, double v) { return pi.norm < v; });
    if (it == ideals_.end())
        throw budget_error("Q(z): extend enumeration past " + std::to_string(norm_bound_));
    return (size_t)(it - ideals_.begin());
}

i64 PrimeTable::count_below(double z) const {
    auto it = std::lower_bound(ideals_.begin(), ideals_.end(), z,
                               [](const PrimeIdeal& pi, double v) { return pi.norm < v; });
    return (i64)(it - ideals_.begin());
}

IdealRep unit_ideal() { return {}; }

IdealRep make_ideal(const PrimeTable& t, const std::vector<std::pair<uint32_t, int>>& fac) {
    IdealRep r;
    for (auto [idx, e] : fac) {
        if (e <= 0 || idx >= t.size()) throw precondition_error("make_ideal: bad factor");
        r.factors.push_back({idx, (uint8_t)e});
    }
    std::sort(r.factors.begin(), r.factors.end());
    for (size_t i = 1; i < r.factors.size(); ++i)
        if (r.factors[i].first == r.factors[i - 1].first)
            throw precondition_error("make_ideal: repeated prime index");
    i128 n = 1;
    for (auto [idx, e] : r.factors)
        for (int i = 0; i < e; ++i) n *= t[idx].norm;
    if (n > (i128)9000000000000000000LL) throw precondition_error("make_ideal: norm overflow");
    r.norm = (i64)n;
    return r;
}

IdealRep mul(const IdealRep& x, const IdealRep& y) {
    IdealRep r;
    size_t i = 0, j = 0;
    while (i < x.factors.size() || j < y.factors.size()) {
        if (j == y.factors.size() || (i < x.factors.size() && x.factors[i].first < y.factors[j].first))
            r.factors.push_back(x.factors[i++]);
        else if (i == x.factors.size() || y.factors[j].first < x.factors[i].first)
            r.factors.push_back(y.factors[j++]);
        else {
            r.factors.push_back({x.factors[i].first,
                                 (uint8_t)(x.factors[i].second + y.factors[j].second)});
            ++i, ++j;
        }
    }
    r.norm = x.norm * y.norm;
    return r;
}

int mobius(const IdealRep& a) {
    for (auto [idx, e] : a.factors)
        if (e > 1) return 0;
    return (a.factors.size() % 2 == 0) ? 1 : -1;
}

i64 dk(int k, const IdealRep& a) {
    if (k < 1 || k > 5) throw precondition_error("dk: 1 <= k <= 5");
    i64 r = 1;
    for (auto [idx, e] : a.factors) r *= binom(e + k - 1, k - 1);
    return r;
}

AlgInt generator(const PrimeTable& t, const IdealRep& a) {
    if (!t.has_generators()) throw precondition_error("generator: table built without generators");
    AlgInt g{1, 0, t.field()};
    for (auto [idx, e] : a.factors)
        for (int i = 0; i < e; ++i) g = g * t[idx].gen;
    return canonical_associate(g);
}

double theta_of(const PrimeTable& t, const IdealRep& a) {
    double th = 0;
    for (auto [idx, e] : a.factors) {
        th += e * t[idx].theta;
        th -= std::floor(th);
    }
    return th;
}

IdealRep factor_principal(const PrimeTable& t, const AlgInt& x) {
    if (x.is_zero()) throw precondition_error("factor_principal: zero element");
    i64 n = std::llabs(x.norm());
    IdealRep r;
    r.norm = n;
    AlgInt cur = x;
    for (size_t i = 0; i < t.size() && n > 1; ++i) {
        const PrimeIdeal& P = t[i];
        if (n % P.p != 0) continue;
        // valuation of (x) at P: divide by the generator while it stays integral
        int e = 0;
        while (true) {
            // cur / gen = cur * conj(gen) / N(gen)
            AlgInt num = cur * P.gen.conj();
            i64 gn = P.gen.norm();
            if (num.a % gn != 0 || num.b % gn != 0) break;
            cur = {num.a / gn, num.b / gn, t.field()};
            ++e;
        }
        if (e > 0) {
            r.factors.push_back({(uint32_t)i, (uint8_t)e});
            for (int j = 0; j < e; ++j) n /= P.norm;
        }
    }
    if (n != 1) throw budget_error("factor_principal: prime factor beyond table");
    return r;
}

namespace {

// residues of omega modulo the two prime ideals above a split p
std::pair<i64, i64> omega_roots_mod(const FieldSpec& f, i64 p) {
    if (p == 2) {
        // enumerate roots of the minimal polynomial directly
        i64 c = f.omega_kind == OmegaKind::SqrtD ? ((-f.d % 2) + 2) % 2
                                                 : (((1 - f.d) / 4 % 2) + 2) % 2;
        std::vector<i64> roots;
        for (i64 r = 0; r < 2; ++r) {
            i64 v = f.omega_kind == OmegaKind::SqrtD ? (r * r + c) % 2 : (r * r + r + c) % 2;
            if (v == 0) roots.push_back(r);
        }
        return {roots.at(0), roots.at(1)};
    }
    i64 s = sqrt_mod(((f.d % p) + p) % p, p);
    if (f.omega_kind == OmegaKind::SqrtD) return {s, p - s};
    i64 inv2 = (p + 1) / 2;
    i64 r1 = (i128)(1 + s) % p * inv2 % p;
    i64 r2 = (i128)(1 + p - s) % p * inv2 % p;
    return {r1, r2};
}

// does any prime ideal above p divide both (x) and (y)?
bool share_ideal_above(const FieldSpec& f, i64 p, const AlgInt& x, const AlgInt& y) {
    SplitTag tag = splitting_type(f, p);
    if (tag != SplitTag::Split) return true;  // the unique ideal above p divides both
    auto [r1, r2] = omega_roots_mod(f, p);
    for (i64 r : {r1, r2}) {
        bool in_x = ((x.a + (i128)x.b * r) % p) == 0;
        bool in_y = ((y.a + (i128)y.b * r) % p) == 0;
        if (in_x && in_y) return true;
    }
    return false;
}

}  // namespace

bool coprime_elements(const AlgInt& x, const AlgInt& y) {
    if (x.is_zero() || y.is_zero()) return false;
    const FieldSpec& f = *x.field;
    i64 g = std::gcd(std::llabs(x.norm()), std::llabs(y.norm()));
    if (g == 1) return true;
    for (i64 p = 2; (i128)p * p <= g; ++p) {
        if (g % p != 0) continue;
        while (g % p == 0) g /= p;
        if (share_ideal_above(f, p, x, y)) return false;
    }
    if (g > 1 && share_ideal_above(f, g, x, y)) return false;
    return true;
}

PiKReport pi_K(const PrimeTable& t, double z) {
    if (z > (double)t.norm_bound())
        throw budget_error("pi_K: z beyond enumerated range");
    PiKReport r;
    r.count = t.count_below(z);
    r.li = integrate_adaptive([](double u) { return 1.0 / std::log(u); }, 2.0, z, 1e-10);
    r.ratio_pnt = (double)r.count * std::log(z) / z;
    r.normalized_error = ((double)r.count - r.li) / (z * std::exp(-std::sqrt(std::log(z))));
    return r;
}

void for_each_prime_ideal_norm(const FieldSpec& f, i64 cutoff,
                               const std::function<void(i64, int)>& fn) {
    if (cutoff < 2) return;
    std::vector<uint8_t> comp(cutoff, 0);
    for (i64 i = 2; i < cutoff; ++i) {
        if (comp[i]) continue;
        for (i64 j = i * i; j < cutoff; j += i) comp[j] = 1;
        SplitTag tag = (f.discriminant % i == 0)
                           ? SplitTag::Ramified
                           : (kronecker(f.discriminant, i) == 1 ? SplitTag::Split
                                                                : SplitTag::Inert);
        if (tag == SplitTag::Split) fn(i, 2);
        else if (tag == SplitTag::Ramified) fn(i, 1);
        else if ((i128)i * i < cutoff) fn(i * i, 1);
    }
}

}  // namespace harmanlab
