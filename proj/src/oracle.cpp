#include "hermitian/oracle.hpp"

#include <algorithm>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hermitian {

namespace {

long long pow_checked(long long base, long e, long long cap) {
    long long v = 1;
    for (long i = 0; i < e; ++i) {
        if (v > cap / base) return cap + 1;
        v *= base;
    }
    return v;
}

// Enumerates every message over GF(size)^k whose leading digits equal the
// given prefix, handing each codeword row to the visitor (odometer with
// partial sums).  Splitting on a two-digit prefix gives the parallel loops
// enough tasks to balance.
template <typename Fn>
void enumerate_with_prefix(const GFMatrix& gen, const FieldSpec& F,
                           const std::vector<uint8_t>& prefix, Fn&& visit) {
    const long k = gen.rows, n = gen.cols;
    const long p = static_cast<long>(prefix.size());
    std::vector<uint8_t> word(n, 0);
    for (long r = 0; r < p; ++r) {
        if (prefix[r] == 0) continue;
        for (long c = 0; c < n; ++c)
            word[c] = F.add(word[c], F.mul(prefix[r], gen.at(r, c)));
    }
    if (p == k) {
        visit(word);
        return;
    }
    // partial[l] = prefix plus the contribution of digits p..p+l
    const long free = k - p;
    std::vector<std::vector<uint8_t>> partial(free, word);
    std::vector<int> digits(free, 0);
    long level = 0;
    while (true) {
        if (level == free) {
            visit(partial[free - 1]);
            long l = free - 1;
            while (l >= 0 && digits[l] == F.size - 1) digits[l--] = 0;
            if (l < 0) return;
            ++digits[l];
            level = l;
            continue;
        }
        const std::vector<uint8_t>& prev = level == 0 ? word : partial[level - 1];
        const int d = digits[level];
        if (d == 0) {
            partial[level] = prev;
        } else {
            for (long c = 0; c < n; ++c)
                partial[level][c] = F.add(
                    prev[c], F.mul(static_cast<uint8_t>(d), gen.at(p + level, c)));
        }
        ++level;
    }
}

// prefix list for the parallel splits: two digits when the dimension allows
std::vector<std::vector<uint8_t>> parallel_prefixes(const FieldSpec& F, long k) {
    std::vector<std::vector<uint8_t>> out;
    if (k >= 2) {
        for (int a = 0; a < F.size; ++a)
            for (int b = 0; b < F.size; ++b)
                out.push_back({static_cast<uint8_t>(a), static_cast<uint8_t>(b)});
    } else {
        for (int a = 0; a < F.size; ++a) out.push_back({static_cast<uint8_t>(a)});
    }
    return out;
}

long weight_of(const std::vector<uint8_t>& w) {
    long wt = 0;
    for (const uint8_t v : w)
        if (v != 0) ++wt;
    return wt;
}

void require_budget(const FieldSpec& F, long k, long long budget) {
    const long long need = pow_checked(F.size, k, 4e18);
    if (need > budget) throw BudgetExceeded(need);
}

template <bool Parallel>
long min_weight_impl(const LinearCode& code, long long budget) {
    if (!code.gen) throw std::invalid_argument("min weight needs a generator");
    const FieldSpec& F = *code.field;
    const GFMatrix gen = rref(*code.gen, F);  // reduced rows, rank = k
    if (gen.rows == 0) return kInfiniteDistance;
    require_budget(F, gen.rows, budget);
    const auto prefixes = parallel_prefixes(F, gen.rows);
    const long n_prefix = static_cast<long>(prefixes.size());
    long global_min = kInfiniteDistance;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(min : global_min) if (Parallel)
#endif
    for (long pi = 0; pi < n_prefix; ++pi) {
        long local = kInfiniteDistance;
        enumerate_with_prefix(gen, F, prefixes[pi],
                              [&](const std::vector<uint8_t>& w) {
                                  const long wt = weight_of(w);
                                  if (wt > 0 && wt < local) local = wt;
                              });
        if (local < global_min) global_min = local;
    }
    return global_min;
}

template <bool Parallel>
std::vector<long long> dual_counts_impl(const LinearCode& code, long long budget) {
    if (!code.gen && !code.chk)
        throw std::invalid_argument("weight distribution needs a matrix");
    const FieldSpec& F = *code.field;
    // dual generator: the check matrix if present, else the null space
    const GFMatrix dual_gen =
        code.chk ? rref(*code.chk, F) : nullspace(*code.gen, F);
    require_budget(F, dual_gen.rows, budget);
    const long n = code.n;
    std::vector<long long> counts(n + 1, 0);
    if (dual_gen.rows == 0) {
        counts[0] = 1;
        return counts;
    }
    const auto prefixes = parallel_prefixes(F, dual_gen.rows);
    const long n_prefix = static_cast<long>(prefixes.size());
#ifdef _OPENMP
#pragma omp parallel if (Parallel)
#endif
    {
        std::vector<long long> local(n + 1, 0);
#ifdef _OPENMP
#pragma omp for schedule(dynamic)
#endif
        for (long pi = 0; pi < n_prefix; ++pi) {
            enumerate_with_prefix(dual_gen, F, prefixes[pi],
                                  [&](const std::vector<uint8_t>& w) {
                                      ++local[weight_of(w)];
                                  });
        }
#ifdef _OPENMP
#pragma omp critical
#endif
        for (long i = 0; i <= n; ++i) counts[i] += local[i];
    }
    // the all-zero message appears exactly once (first digit 0), so
    // counts[0] == 1 already
    return counts;
}

}  // namespace

long min_weight_exhaustive(const LinearCode& code, long long budget) {
    return min_weight_impl<true>(code, budget);
}

long min_weight_exhaustive_serial(const LinearCode& code, long long budget) {
    return min_weight_impl<false>(code, budget);
}

long WeightDistribution::min_distance() const {
    for (size_t w = 1; w < counts.size(); ++w)
        if (!counts[w].is_zero()) return static_cast<long>(w);
    return kInfiniteDistance;
}

WeightDistribution dual_weight_distribution(const LinearCode& code, long long budget) {
    auto counts = dual_counts_impl<true>(code, budget);
    WeightDistribution d;
    for (const long long c : counts) d.counts.emplace_back(c);
    return d;
}

WeightDistribution dual_weight_distribution_serial(const LinearCode& code,
                                                   long long budget) {
    auto counts = dual_counts_impl<false>(code, budget);
    WeightDistribution d;
    for (const long long c : counts) d.counts.emplace_back(c);
    return d;
}

WeightDistribution macwilliams_transform(const WeightDistribution& dist, long n,
                                         long k_of_dist, int field_size) {
    // A'_w = |C|^-1 sum_i A_i K_w(i),
    // K_w(i) = sum_s (-1)^s (Q-1)^{w-s} C(i,s) C(n-i, w-s)
    const int Q = field_size;
    std::vector<std::vector<BigInt>> binom(n + 1, std::vector<BigInt>(n + 1, BigInt(0)));
    for (long i = 0; i <= n; ++i) {
        binom[i][0] = BigInt(1);
        for (long j = 1; j <= i; ++j)
            binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : BigInt(0));
    }
    std::vector<BigInt> qpow(n + 1, BigInt(1));
    for (long i = 1; i <= n; ++i) qpow[i] = qpow[i - 1] * BigInt(Q - 1);

    WeightDistribution out;
    out.counts.assign(n + 1, BigInt(0));
    for (long w = 0; w <= n; ++w) {
        BigInt acc(0);
        for (long i = 0; i <= n; ++i) {
            if (dist.counts[i].is_zero()) continue;
            BigInt kr(0);
            for (long s = 0; s <= std::min(w, i); ++s) {
                if (w - s > n - i) continue;
                const BigInt term = qpow[w - s] * binom[i][s] * binom[n - i][w - s];
                if (s % 2 == 0)
                    kr += term;
                else
                    kr -= term;
            }
            acc += dist.counts[i] * kr;
        }
        for (long t = 0; t < k_of_dist; ++t) acc = acc.div_exact(Q);
        out.counts[w] = acc;
    }
    return out;
}

WeightDistribution weight_distribution_via_dual(const LinearCode& code,
                                                long long budget) {
    const WeightDistribution dual = dual_weight_distribution(code, budget);
    return macwilliams_transform(dual, code.n, code.n - code.k, code.field->size);
}

long coset_min_weight(const LinearCode& sub, const LinearCode& sup, long long budget) {
    if (!sub.gen || !sup.gen) throw std::invalid_argument("coset needs generators");
    const FieldSpec& F = *sup.field;
    if (!row_space_contains(*sup.gen, *sub.gen, F))
        throw std::invalid_argument("sub is not contained in sup");
    const GFMatrix gen = rref(*sup.gen, F);
    if (gen.rows == 0) return 0;
    require_budget(F, gen.rows, budget);
    // membership in sub tested against a null-space basis of its generator
    const GFMatrix sub_chk = nullspace(*sub.gen, F);
    const auto prefixes = parallel_prefixes(F, gen.rows);
    const long n_prefix = static_cast<long>(prefixes.size());
    long global_min = kInfiniteDistance;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(min : global_min)
#endif
    for (long pi = 0; pi < n_prefix; ++pi) {
        long local = kInfiniteDistance;
        enumerate_with_prefix(gen, F, prefixes[pi],
                         [&](const std::vector<uint8_t>& w) {
                             bool in_sub = true;
                             for (long r = 0; r < sub_chk.rows && in_sub; ++r) {
                                 uint8_t s = 0;
                                 for (long c = 0; c < sub_chk.cols; ++c)
                                     s = F.add(s, F.mul(sub_chk.at(r, c), w[c]));
                                 if (s != 0) in_sub = false;
                             }
                             if (!in_sub) {
                                 const long wt = weight_of(w);
                                 if (wt < local) local = wt;
                             }
                         });
        if (local < global_min) global_min = local;
    }
    return global_min == kInfiniteDistance ? 0 : global_min;
}

long fengrao_divisibility_count(const Monomial& mu,
                                const std::function<bool(int, int)>& excluded,
                                const CurveParams& cp) {
    const long q = cp.q;
    const auto [pole, vanish] = valuations(mu, cp);
    (void)vanish;
    std::set<std::pair<int, int>> divisors;
    // representatives x^A y^B of the pole order, ambient A up to 2q
    for (long A = 0; A <= 2 * q; ++A) {
        const long rem = pole - q * A;
        if (rem < 0 || rem % (q + 1) != 0) continue;
        const long B = rem / (q + 1);
        for (int s = 0; s <= std::min<long>(A, q); ++s)
            for (int t = 0; t <= B; ++t)
                if (!excluded(s, t)) divisors.insert({s, t});
    }
    return static_cast<long>(divisors.size());
}

}  // namespace hermitian
