#pragma once

// Enumeration and arithmetic of nonzero ideals and prime ideals: the total
// order on primes (norm first, then lexicographic on the canonical generator),
// Q(z), Mobius mu, divisor functions d_k, and Landau prime-ideal counting.
//
// Pi(z)-style products are never materialized: coprimality to Pi(q) is the
// predicate "no prime factor before q".

#include <cstdint>
#include <functional>
#include <vector>

#include "harmanlab/field.hpp"

namespace harmanlab {

struct PrimeIdeal {
    i64 norm = 0;  // p or p^2
    i64 p = 0;     // rational prime below
    SplitTag tag = SplitTag::Inert;
    AlgInt gen;        // canonical generator ((0,0) when generators were skipped)
    double theta = 0;  // real fields: log|sigma1/sigma2| / (2 log eps) mod 1
};

// ramified iff p | disc; split iff kronecker(disc, p) = +1; inert iff -1
SplitTag splitting_type(const FieldSpec& f, i64 p);

struct TableOptions {
    i64 max_ideals = 6'000'000;   // memory guard
    bool with_generators = true;  // canonical generators + theta coordinates
};

// Frozen, sorted table of every prime ideal of norm < norm_bound.
class PrimeTable {
  public:
    static PrimeTable build(const FieldSpec& f, i64 norm_bound, TableOptions opts = {});

    const FieldSpec& field() const { return *field_; }
    i64 norm_bound() const { return norm_bound_; }
    bool has_generators() const { return with_generators_; }
    const std::vector<PrimeIdeal>& ideals() const { return ideals_; }
    const PrimeIdeal& operator[](size_t i) const { return ideals_[i]; }
    size_t size() const { return ideals_.size(); }

    // index of Q(z), the first prime ideal of norm >= z; throws budget_error
    // ("extend enumeration") when the table cannot certify the answer
    size_t q_index(double z) const;
    const PrimeIdeal& Q_of(double z) const { return ideals_[q_index(z)]; }

    // exact #P(z) = #{prime ideals of norm < z}
    i64 count_below(double z) const;

  private:
    const FieldSpec* field_ = nullptr;
    i64 norm_bound_ = 0;
    bool with_generators_ = true;
    std::vector<PrimeIdeal> ideals_;
};

// An ideal as a factored product over a table's primes; unique representation,
// so equal ideals compare equal bit-for-bit.
struct IdealRep {
    std::vector<std::pair<uint32_t, uint8_t>> factors;  // (prime index, exponent), ascending
    i64 norm = 1;

    bool is_unit() const { return factors.empty(); }
    bool operator==(const IdealRep& o) const { return factors == o.factors; }
};

IdealRep unit_ideal();
IdealRep make_ideal(const PrimeTable& t, const std::vector<std::pair<uint32_t, int>>& fac);
IdealRep mul(const IdealRep& x, const IdealRep& y);

// 0 on non-squarefree ideals, (-1)^k on k distinct primes, +1 on the unit ideal
int mobius(const IdealRep& a);

// ordered k-factorization count; d_k(p^e) = binom(e+k-1, k-1); 1 <= k <= 5
i64 dk(int k, const IdealRep& a);

// canonical generator (product of prime generators, canonicalized)
AlgInt generator(const PrimeTable& t, const IdealRep& a);
double theta_of(const PrimeTable& t, const IdealRep& a);

// Factor the principal ideal (x) over the table; throws budget_error if a
// prime factor lies beyond the table.
IdealRep factor_principal(const PrimeTable& t, const AlgInt& x);

// true iff (x) and (y) share no prime ideal factor; table-free
bool coprime_elements(const AlgInt& x, const AlgInt& y);

struct PiKReport {
    i64 count = 0;        // #P(z)
    double li = 0;        // int_2^z dt/log t
    double ratio_pnt = 0;         // count * log z / z
    double normalized_error = 0;  // (count - li) / (z exp(-sqrt(log z)))
};

PiKReport pi_K(const PrimeTable& t, double z);

// Stream of prime-ideal norms with multiplicity (2 for split p), without
// building a table; used by smooth prime sums at budgets beyond table scale.
void for_each_prime_ideal_norm(const FieldSpec& f, i64 cutoff,
                               const std::function<void(i64 norm, int count)>& fn);

// rational primes < bound by Eratosthenes
std::vector<i64> sieve_primes(i64 bound);

// Depth-first enumeration of the ideals all of whose prime factors lie at
// table index >= start, with norm <= max_norm. Visits the unit ideal first;
// the order is deterministic (primes ascending, exponents increasing), which
// fixes the floating summation order of every sifting sum built on top.
// fn(norm, theta, d5, gen): theta is the accumulated direction coordinate,
// d5 the ordered-5-factorization count, gen a canonicalizable generator
// (nullptr unless with_gen). Requires max_norm < t.norm_bound().
template <class Fn>
void for_each_sifted_ideal(const PrimeTable& t, size_t start, i64 max_norm, bool with_gen,
                           Fn&& fn) {
    if (max_norm >= t.norm_bound())
        throw budget_error("for_each_sifted_ideal: table must cover norms up to " +
                           std::to_string(max_norm));
    AlgInt one{1, 0, t.field()};
    auto rec = [&](auto&& self, size_t i0, i64 n, double th, i64 d5, const AlgInt& g) -> void {
        for (size_t i = i0; i < t.size(); ++i) {
            const PrimeIdeal& P = t[i];
            if ((i128)n * P.norm > max_norm) break;  // norms ascend
            i64 m = n;
            double tt = th;
            AlgInt gg = g;
            for (int e = 1; (i128)m * P.norm <= max_norm; ++e) {
                m *= P.norm;
                tt += P.theta;
                if (tt >= 1) tt -= 1;
                // canonicalize to keep coordinates bounded along deep products
                if (with_gen) gg = canonical_associate(gg * P.gen);
                i64 d5e = d5 * binom(e + 4, 4);
                fn(m, tt, d5e, with_gen ? &gg : nullptr);
                self(self, i + 1, m, tt, d5e, gg);
            }
        }
    };
    fn((i64)1, 0.0, (i64)1, with_gen ? &one : nullptr);
    rec(rec, start, 1, 0.0, 1, one);
}

}  // namespace harmanlab
