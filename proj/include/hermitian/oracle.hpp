#pragma once

#include <functional>
#include <vector>

#include "hermitian/bigint.hpp"
#include "hermitian/codes.hpp"

namespace hermitian {

/// Thrown when an exhaustive enumeration would exceed the caller's budget;
/// required is the minimal sufficient budget.
struct BudgetExceeded : std::runtime_error {
    long long required;
    explicit BudgetExceeded(long long req)
        : std::runtime_error("enumeration budget exceeded"), required(req) {}
};

inline constexpr long long kDefaultBudget = 10'000'000;

/// Exact weight distribution A_0..A_n; exact integers (n = 64 counts
/// overflow 64 bits).
struct WeightDistribution {
    std::vector<BigInt> counts;

    /// Least w > 0 with A_w > 0, or kInfiniteDistance for the zero code.
    long min_distance() const;
};

/// Exact minimum weight by enumerating all (q^2)^k messages.
/// OpenMP-parallel with a min reduction; the result is independent of the
/// worker count.  Returns kInfiniteDistance for the zero code.
long min_weight_exhaustive(const LinearCode& code, long long budget = kDefaultBudget);

/// Serial reference implementation, kept for testing the parallel kernel.
long min_weight_exhaustive_serial(const LinearCode& code,
                                  long long budget = kDefaultBudget);

/// Exact weight distribution of the code's dual by enumeration.
WeightDistribution dual_weight_distribution(const LinearCode& code,
                                            long long budget = kDefaultBudget);
WeightDistribution dual_weight_distribution_serial(const LinearCode& code,
                                                   long long budget = kDefaultBudget);

/// MacWilliams transform over GF(size): from the distribution of a code of
/// dimension k_dual (here: the dual), recover the primal distribution.
WeightDistribution macwilliams_transform(const WeightDistribution& dist, long n,
                                         long k_of_dist, int field_size);

/// Primal weight distribution via dual enumeration + MacWilliams.
WeightDistribution weight_distribution_via_dual(const LinearCode& code,
                                                long long budget = kDefaultBudget);

/// Minimum weight over words of sup not in sub (0 when the set is empty).
/// Checks row-space containment sub <= sup.
long coset_min_weight(const LinearCode& sub, const LinearCode& sup,
                      long long budget = kDefaultBudget);

/// Number of monomials nu in the diagram {0 <= i <= q, not excluded}
/// dividing a representative of mu's pole order; pole orders with a second
/// representative x^A (q < A <= 2q) count the union of both divisor sets.
long fengrao_divisibility_count(const Monomial& mu,
                                const std::function<bool(int, int)>& excluded,
                                const CurveParams& cp);

}  // namespace hermitian
