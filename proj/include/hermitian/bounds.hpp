#pragma once

#include <limits>
#include <vector>

#include "hermitian/curve.hpp"
#include "hermitian/monomials.hpp"

namespace hermitian {

enum class SequenceKind { OnePoint, TwoPoint };  // G_i = iP vs G'_i = iP + Q
enum class BoundMethod { Simple, Improved };
enum class RedundancyMode { Classical, Improved };

/// Sentinel for "no nonzero codeword" (zero code); also used as the order
/// bound of the zero code.
inline constexpr long kInfiniteDistance = std::numeric_limits<long>::max() / 4;

/// Coset bound for one step from the divisor class K + C, where
/// C = dH - aP - bQ with 0 <= a,b <= q.  P-step:
///   deg C                          if a - d < 0,
///   a(q-1-a+d) + max(0, a-b)       if 0 <= a - d <= q-1,
///   0                              otherwise.
/// The Q-step swaps the roles of a and b.
long base_coset_bound(const CanonicalForm& c, StepDir dir, const CurveParams& cp);

/// Bound for the step C_Omega(D, G_i) \ C_Omega(D, G_{i+1}) along the
/// chosen sequence, by direct case evaluation on sequence_decompose(i).
long sequence_bound_simple(long i, SequenceKind kind, const CurveParams& cp);

/// The path-improved bound for the two-point sequence {iP + Q}: equals
/// sequence_bound_simple except when a <= d <= q-1, where it is qd + q - a.
long sequence_bound_improved(long i, const CurveParams& cp);

/// Dispatch: the one-point sequence has no improved variant (Improved
/// falls back to Simple); the two-point sequence honors the method.
long sequence_bound(long i, SequenceKind kind, BoundMethod method,
                    const CurveParams& cp);

struct CosetBoundSequence {
    int q = 0;
    SequenceKind kind = SequenceKind::OnePoint;
    BoundMethod method = BoundMethod::Simple;
    long i_max = 0;
    std::vector<long> entries;  // entries[k] = bound(i = k - 1), i in [-1, i_max]

    long bound(long i) const { return entries.at(static_cast<size_t>(i + 1)); }
};

CosetBoundSequence make_coset_bounds(const CurveParams& cp, SequenceKind kind,
                                     BoundMethod method, long i_max);

/// Number of checks for designed distance delta.
/// Improved: |{i : 0 < bound(i) < delta}|.  Classical: count of nonzero
/// bounds below the minimal cutoff m such that every nonzero bound at
/// i >= m is >= delta.  Requires i_max >= delta + 4g + 2.
long redundancy(long delta, const CosetBoundSequence& seq, RedundancyMode mode);

/// r_{G}(delta) - r_{G'}(delta) in closed form, for q < delta <= q^2 with
/// delta = dq + b, 0 < d <= q-1, 0 < b <= q.
long redundancy_diff_closed_form(long delta, const CurveParams& cp);

/// Actual minimum distance of C_Omega(D, K + C), C = dH - aP - bQ with
/// d >= 0, 0 <= a,b <= q, C != 0, deg C >= 0 (Homma-Kim / Park cases).
/// p_excluded / q_excluded describe Supp D.  Throws when no case applies.
long actual_distance_twopoint(const CanonicalForm& c, bool p_excluded,
                              bool q_excluded, const CurveParams& cp);

/// Best minimum distance among two-point classes of a given deg C, attained
/// at b = q.
long best_classical_twopoint_distance(long deg_c, const CurveParams& cp);

/// Data of the distance-optimal two-point code whose evaluation-side
/// divisor has the given degree: the class dH - aP - qQ with
/// deg C = q^3 - 1 - deg G, realized as C_L(R-P-Q, eval_m P - 2Q).
/// When a <= d or a = q, the same class also yields a one-longer code
/// C_L(R-Q, (eval_m + 1)P - 2Q) of equal distance.
struct BestTwoPoint {
    CanonicalForm c;  // b = q representative
    long distance = 0;
    long eval_m = 0;  // evaluation divisor eval_m * P - 2Q over R-P-Q
    bool longer_code_exists = false;
};

BestTwoPoint best_twopoint(long deg_g_eval, const CurveParams& cp);

/// Minimal redundancy of a classical two-point code (b = q family) with
/// actual distance >= delta: g - 1 + min{deg C >= 0 : distance >= delta}.
long best_twopoint_redundancy(long delta, const CurveParams& cp);

struct RedundancyRow {
    long delta = 0;
    long onepoint_classical = 0;
    long onepoint_improved = 0;
    long twopoint_classical = 0;
    long twopoint_improved = 0;
    long diff = 0;  // min of the first three minus the fourth
};

struct RedundancyTable {
    int q = 0;
    std::vector<RedundancyRow> rows;
};

RedundancyTable make_redundancy_table(const CurveParams& cp, long delta_min,
                                      long delta_max, long delta_step = 1);

struct StrictImprovementStats {
    long interval_lo = 0;  // [q, (q-1)(q-2 sqrt(q-1))], empty when lo > hi
    long interval_hi = 0;
    long improving_over_classical = 0;  // count within q < delta <= q^2
    long improving_over_both = 0;
    long total = 0;  // q^2 - q
    double ratio = 0.0;
    double ratio_lower_bound = 0.0;  // 1 - (4 sqrt(q-1) + 4)/q
};

StrictImprovementStats strict_improvement_stats(const CurveParams& cp);

// --- exact dimension bookkeeping and the path order bound -----------------

enum class SupportClass { RMinusP, RMinusPQ };

/// dim C_L(D, class of mP + nQ) over the given support, computed from
/// Riemann-Roch monomial counts (image dim = dim L(G) - dim L(G - D)).
long code_dim(long m, long n, SupportClass sup, const CurveParams& cp);

/// true iff the coset C_Omega(D, mP+nQ) \ C_Omega(D, mP+nQ + step) is
/// nonempty, decided by exact dimension bookkeeping.
bool step_nonempty(long m, long n, StepDir dir, SupportClass sup,
                   const CurveParams& cp);

/// Order bound for C_Omega(D, class of mP + nQ): the best over monotone
/// step paths of the minimum base coset bound over nonempty steps.
/// Q-steps are only taken when Q is excluded from the support.
/// Returns kInfiniteDistance for the zero code.
long order_bound_exact(long m, long n, SupportClass sup, const CurveParams& cp);

/// Exact-distance prediction for the classical codes C(a) = C_L(R-P, aP)
/// and C'(a) = C_L(R-P-Q, aP-2Q), via the dual divisor class
/// (q^3 + 2g - 2 - a)P (+ Q) and the order bound above.
long predicted_classical_distance(SequenceKind kind, long a, const CurveParams& cp);

}  // namespace hermitian
