#include "hermitian/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace hermitian {

long base_coset_bound(const CanonicalForm& c, StepDir dir, const CurveParams& cp) {
    const long q = cp.q;
    const long x = dir == StepDir::P ? c.a : c.b;  // coefficient at the step point
    const long y = dir == StepDir::P ? c.b : c.a;
    if (x - c.d < 0) return c.degree(cp.q);
    if (x - c.d <= q - 1) return x * (q - 1 - x + c.d) + std::max(0L, x - y);
    return 0;
}

long sequence_bound_simple(long i, SequenceKind kind, const CurveParams& cp) {
    const auto [d, a] = sequence_decompose(i, cp);
    const long q = cp.q;
    if (kind == SequenceKind::OnePoint) {
        if (a - d < 0) return (q + 1) * d - a;
        if (a - d <= q - 1) return a * (q - a + d);
        return 0;
    }
    if (a - d - 1 < 0) return (q + 1) * d - a + 1;
    if (a - d - 1 <= q - 1) return a * (q - a + d);
    return 0;
}

long sequence_bound_improved(long i, const CurveParams& cp) {
    const auto [d, a] = sequence_decompose(i, cp);
    const long q = cp.q;
    if (a <= d) return d <= q - 1 ? q * d + q - a : (q + 1) * d - a + 1;
    if (a - d - 1 <= q - 1) return a * (q - a + d);
    return 0;
}

long sequence_bound(long i, SequenceKind kind, BoundMethod method,
                    const CurveParams& cp) {
    if (kind == SequenceKind::TwoPoint && method == BoundMethod::Improved)
        return sequence_bound_improved(i, cp);
    return sequence_bound_simple(i, kind, cp);
}

CosetBoundSequence make_coset_bounds(const CurveParams& cp, SequenceKind kind,
                                     BoundMethod method, long i_max) {
    if (i_max < -1) throw std::invalid_argument("i_max < -1");
    CosetBoundSequence seq;
    seq.q = cp.q;
    seq.kind = kind;
    seq.method = method;
    seq.i_max = i_max;
    seq.entries.reserve(i_max + 2);
    for (long i = -1; i <= i_max; ++i)
        seq.entries.push_back(sequence_bound(i, kind, method, cp));
    return seq;
}

long redundancy(long delta, const CosetBoundSequence& seq, RedundancyMode mode) {
    if (delta < 2) throw std::invalid_argument("delta must be >= 2");
    const CurveParams cp = curve_params(seq.q);
    if (seq.i_max < delta + 4 * cp.genus + 2)
        throw std::invalid_argument("i_max too small for this delta");
    if (mode == RedundancyMode::Improved) {
        long r = 0;
        for (long i = -1; i <= seq.i_max; ++i) {
            const long b = seq.bound(i);
            if (b > 0 && b < delta) ++r;
        }
        return r;
    }
    long last_bad = -2;
    for (long i = -1; i <= seq.i_max; ++i) {
        const long b = seq.bound(i);
        if (b > 0 && b < delta) last_bad = i;
    }
    const long cutoff = last_bad + 1;
    long r = 0;
    for (long i = -1; i < cutoff; ++i)
        if (seq.bound(i) > 0) ++r;
    return r;
}

long redundancy_diff_closed_form(long delta, const CurveParams& cp) {
    const long q = cp.q;
    if (delta <= q || delta > q * q)
        throw std::invalid_argument("closed form needs q < delta <= q^2");
    const long b = (delta - 1) % q + 1;
    const long d = (delta - b) / q;
    if (d < 1 || d > q - 1 || b < 1 || b > q)
        throw std::logic_error("bad decomposition");
    if (b <= d && d <= q - b) return b - 1;
    if (b <= d) return q - d - 1;
    if (q - b < d) return q - b;  // here d < b
    return d;                     // d < b and d <= q - b
}

long actual_distance_twopoint(const CanonicalForm& c, bool p_excluded,
                              bool q_excluded, const CurveParams& cp) {
    const long q = cp.q;
    const long deg = c.degree(cp.q);
    if (c.d < 0 || deg < 0 || (c.d == 0 && c.a == 0 && c.b == 0))
        throw std::invalid_argument("actual_distance_twopoint: C = 0 or out of range");
    const long a = c.a, b = c.b, d = c.d;
    bool have = false;
    long dist = 0;
    auto take = [&](long v) {
        if (have && v != dist) throw std::logic_error("inconsistent distance cases");
        have = true;
        dist = v;
    };
    if (a <= d && b <= d) take(deg);                                        // case 1
    if (b <= d && d <= a && p_excluded) take(deg + a - d);                  // case 2a
    if (a <= d && d <= b && q_excluded) take(deg + b - d);                  // case 2b
    if (d <= a && a <= b && a < q && p_excluded && q_excluded)
        take(deg + a - d + b - d);                                          // case 3a
    if (d <= b && b <= a && b < q && p_excluded && q_excluded)
        take(deg + a - d + b - d);                                          // case 3b
    if (d <= b && a == q && b == q && (p_excluded || q_excluded))
        take(deg + q - d);                                                  // case 4
    if (!have) throw std::invalid_argument("no distance case applies");
    return dist;
}

long best_classical_twopoint_distance(long deg_c, const CurveParams& cp) {
    const long q = cp.q;
    if (deg_c < 0) throw std::invalid_argument("deg C must be >= 0");
    long a = (1 - deg_c) % (q + 1);
    if (a < 0) a += q + 1;
    const long d = (deg_c + a + q) / (q + 1);
    if (q <= d) return deg_c;                       // case 1
    if (a <= d) return deg_c + q - d;               // case 2
    if (a < q) return deg_c + (a - d) + (q - d);    // case 3
    return deg_c + q - d;                           // case 4, a = q
}

BestTwoPoint best_twopoint(long deg_g_eval, const CurveParams& cp) {
    const long q = cp.q;
    const long q3 = static_cast<long>(q) * q * q;
    const long deg_c = q3 - 1 - deg_g_eval;
    if (deg_c < 0) throw std::invalid_argument("degenerate degree");
    long a = (1 - deg_c) % (q + 1);
    if (a < 0) a += q + 1;
    const long d = (deg_c + a + q) / (q + 1);
    BestTwoPoint best;
    best.c = {d, static_cast<int>(a), static_cast<int>(q)};
    best.distance = best_classical_twopoint_distance(deg_c, cp);
    best.eval_m = q3 + 1 - deg_c;
    best.longer_code_exists = a <= d || a == q;
    return best;
}

long best_twopoint_redundancy(long delta, const CurveParams& cp) {
    if (delta < 1) throw std::invalid_argument("delta must be >= 1");
    for (long deg_c = 0; deg_c <= delta; ++deg_c)
        if (best_classical_twopoint_distance(deg_c, cp) >= delta)
            return deg_c + cp.genus - 1;
    throw std::logic_error("no two-point class reaches delta");
}

RedundancyTable make_redundancy_table(const CurveParams& cp, long delta_min,
                                      long delta_max, long delta_step) {
    if (delta_min < 2 || delta_max < delta_min || delta_step < 1)
        throw std::invalid_argument("bad delta range");
    const long i_max = delta_max + 4 * cp.genus + 2;
    const auto one = make_coset_bounds(cp, SequenceKind::OnePoint,
                                       BoundMethod::Simple, i_max);
    const auto two = make_coset_bounds(cp, SequenceKind::TwoPoint,
                                       BoundMethod::Improved, i_max);
    RedundancyTable t;
    t.q = cp.q;
    for (long delta = delta_min; delta <= delta_max; delta += delta_step) {
        RedundancyRow row;
        row.delta = delta;
        row.onepoint_classical = redundancy(delta, one, RedundancyMode::Classical);
        row.onepoint_improved = redundancy(delta, one, RedundancyMode::Improved);
        row.twopoint_classical =
            std::min(row.onepoint_classical, best_twopoint_redundancy(delta, cp));
        row.twopoint_improved = redundancy(delta, two, RedundancyMode::Improved);
        row.diff = std::min({row.onepoint_classical, row.onepoint_improved,
                             row.twopoint_classical}) -
                   row.twopoint_improved;
        t.rows.push_back(row);
    }
    return t;
}

StrictImprovementStats strict_improvement_stats(const CurveParams& cp) {
    const long q = cp.q;
    if (q < 4) throw std::invalid_argument("needs q >= 4");
    StrictImprovementStats st;
    st.interval_lo = q;
    st.interval_hi = static_cast<long>(
        std::floor((q - 1) * (q - 2.0 * std::sqrt(static_cast<double>(q - 1)))));
    st.total = q * q - q;
    const long i_max = q * q + 4 * cp.genus + 2;
    const auto one = make_coset_bounds(cp, SequenceKind::OnePoint,
                                       BoundMethod::Simple, i_max);
    const auto two = make_coset_bounds(cp, SequenceKind::TwoPoint,
                                       BoundMethod::Improved, i_max);
    for (long delta = q + 1; delta <= q * q; ++delta) {
        const long imp2 = redundancy(delta, two, RedundancyMode::Improved);
        const long cls2 = best_twopoint_redundancy(delta, cp);
        const long imp1 = redundancy(delta, one, RedundancyMode::Improved);
        if (imp2 < cls2) ++st.improving_over_classical;
        if (imp2 < cls2 && imp2 < imp1) ++st.improving_over_both;
    }
    st.ratio = static_cast<double>(st.improving_over_both) / st.total;
    st.ratio_lower_bound =
        1.0 - (4.0 * std::sqrt(static_cast<double>(q - 1)) + 4.0) / q;
    if (st.ratio < st.ratio_lower_bound)
        throw std::logic_error("improvement ratio fell below its lower bound");
    return st;
}

// --- dimension bookkeeping and the path order bound ------------------------

long code_dim(long m, long n, SupportClass sup, const CurveParams& cp) {
    const long q3 = static_cast<long>(cp.q) * cp.q * cp.q;
    const long dim_l = class_dim_L(m, n, cp);
    const long ker = sup == SupportClass::RMinusP
                         ? class_dim_L(m - q3, n, cp)
                         : class_dim_L(m - q3, n + 1, cp);
    return dim_l - ker;
}

bool step_nonempty(long m, long n, StepDir dir, SupportClass sup,
                   const CurveParams& cp) {
    const long dm = dir == StepDir::P ? 1 : 0;
    const long dn = dir == StepDir::P ? 0 : 1;
    return code_dim(m + dm, n + dn, sup, cp) != code_dim(m, n, sup, cp);
}

namespace {

long support_size(SupportClass sup, const CurveParams& cp) {
    const long q3 = static_cast<long>(cp.q) * cp.q * cp.q;
    return sup == SupportClass::RMinusP ? q3 : q3 - 1;
}

struct ObCtx {
    SupportClass sup;
    const CurveParams* cp;
    long nsup;
    std::map<std::pair<long, long>, long> memo;
};

long ob_rec(ObCtx& ctx, long m, long n) {
    const auto key = std::make_pair(m, n);
    if (const auto it = ctx.memo.find(key); it != ctx.memo.end()) return it->second;
    const CurveParams& cp = *ctx.cp;
    long value;
    if (code_dim(m, n, ctx.sup, cp) == ctx.nsup) {
        value = kInfiniteDistance;  // zero code, no words left
    } else {
        const CanonicalForm c =
            canonicalize({m - cp.k_degree(), n}, cp);  // C with mP+nQ = K + C
        value = 0;
        const bool allow_q = ctx.sup == SupportClass::RMinusPQ;
        for (const StepDir dir : {StepDir::P, StepDir::Q}) {
            if (dir == StepDir::Q && !allow_q) continue;
            const long dm = dir == StepDir::P ? 1 : 0;
            const long dn = dir == StepDir::P ? 0 : 1;
            const long tail = ob_rec(ctx, m + dm, n + dn);
            long via = tail;
            if (step_nonempty(m, n, dir, ctx.sup, cp))
                via = std::min(base_coset_bound(c, dir, cp), tail);
            value = std::max(value, via);
        }
    }
    ctx.memo[key] = value;
    return value;
}

}  // namespace

long order_bound_exact(long m, long n, SupportClass sup, const CurveParams& cp) {
    ObCtx ctx{sup, &cp, support_size(sup, cp), {}};
    return ob_rec(ctx, m, n);
}

long predicted_classical_distance(SequenceKind kind, long a, const CurveParams& cp) {
    const long q3 = static_cast<long>(cp.q) * cp.q * cp.q;
    const long big_n = q3 + 2 * cp.genus - 2;
    if (kind == SequenceKind::OnePoint)
        return order_bound_exact(big_n - a, 0, SupportClass::RMinusP, cp);
    return order_bound_exact(big_n - a, 1, SupportClass::RMinusPQ, cp);
}

}  // namespace hermitian
