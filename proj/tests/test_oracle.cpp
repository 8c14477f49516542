#include "doctest.h"

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hermitian/grid.hpp"
#include "hermitian/oracle.hpp"

using namespace hermitian;

namespace {

LinearCode make_code(SequenceKind kind, long a, int q) {
    return classical_code(kind, a, curve_params(q), field_make(q));
}

}  // namespace

TEST_CASE("exhaustive minimum weight, small codes") {
    const LinearCode rep = make_code(SequenceKind::OnePoint, 0, 2);
    CHECK(min_weight_exhaustive(rep) == 8);
    CHECK(min_weight_exhaustive_serial(rep) == 8);
    // C(3) = [8,3,5]: matches the order-bound prediction
    const LinearCode c3 = make_code(SequenceKind::OnePoint, 3, 2);
    CHECK(min_weight_exhaustive(c3) == 5);
    CHECK(predicted_classical_distance(SequenceKind::OnePoint, 3, curve_params(2)) == 5);
    // zero code sentinel
    const LinearCode zero = make_code(SequenceKind::TwoPoint, 0, 2);
    CHECK(zero.k == 0);
    CHECK(min_weight_exhaustive(zero) == kInfiniteDistance);
}

TEST_CASE("budget errors carry the minimal sufficient budget") {
    const LinearCode big = make_code(SequenceKind::OnePoint, 20, 3);
    try {
        min_weight_exhaustive(big, 100);
        FAIL("expected BudgetExceeded");
    } catch (const BudgetExceeded& e) {
        long long want = 1;
        for (long i = 0; i < big.k; ++i) want *= 9;
        CHECK(e.required == want);
    }
}

TEST_CASE("parallel kernels agree with the serial reference") {
    const LinearCode code = make_code(SequenceKind::TwoPoint, 8, 2);
    CHECK(min_weight_exhaustive(code) == min_weight_exhaustive_serial(code));
    const auto par = dual_weight_distribution(code);
    const auto ser = dual_weight_distribution_serial(code);
    REQUIRE(par.counts.size() == ser.counts.size());
    for (size_t i = 0; i < par.counts.size(); ++i) CHECK(par.counts[i] == ser.counts[i]);
#ifdef _OPENMP
    // worker-count independence
    const int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    const long w1 = min_weight_exhaustive(code);
    omp_set_num_threads(2);
    const long w2 = min_weight_exhaustive(code);
    omp_set_num_threads(saved);
    CHECK(w1 == w2);
#endif
}

TEST_CASE("dual distribution of the [8,7] sum-zero code") {
    const CurveParams cp = curve_params(2);
    const FieldSpec& F = field_make(2);
    const LinearCode rep = classical_code(SequenceKind::OnePoint, 0, cp, F);
    const LinearCode sumzero = residue_dual(rep, cp);
    // dual of the sum-zero code is the repetition code: A_0 = 1, A_8 = 3
    const auto dist = dual_weight_distribution(sumzero);
    CHECK(dist.counts[0] == BigInt(1));
    CHECK(dist.counts[8] == BigInt(3));
    for (int w = 1; w < 8; ++w) CHECK(dist.counts[w].is_zero());
}

TEST_CASE("MacWilliams transform: repetition <-> sum-zero, involution") {
    const CurveParams cp = curve_params(2);
    const FieldSpec& F = field_make(2);
    const LinearCode rep = classical_code(SequenceKind::OnePoint, 0, cp, F);
    // primal distribution of the [8,7] sum-zero code via its dual
    const LinearCode sumzero = residue_dual(rep, cp);
    const auto primal = weight_distribution_via_dual(sumzero);
    // check total count and A_0
    BigInt total(0);
    for (const auto& c : primal.counts) total += c;
    CHECK(total == BigInt::pow(BigInt(4), 7));
    CHECK(primal.counts[0] == BigInt(1));
    CHECK(primal.min_distance() == 2);
    // transform twice returns the original distribution
    const auto dual_dist = dual_weight_distribution(sumzero);
    const auto back = macwilliams_transform(
        macwilliams_transform(dual_dist, 8, 1, 4), 8, 7, 4);
    for (int w = 0; w <= 8; ++w) CHECK(back.counts[w] == dual_dist.counts[w]);
}

TEST_CASE("MacWilliams route agrees with exhaustive enumeration") {
    // q = 2 keeps both the code and its dual within enumeration reach
    for (const SequenceKind kind : {SequenceKind::OnePoint, SequenceKind::TwoPoint}) {
        for (long a = 3; a <= 9; ++a) {
            const LinearCode code = make_code(kind, a, 2);
            if (code.k == 0) continue;
            const auto dist = weight_distribution_via_dual(code);
            CHECK(dist.min_distance() == min_weight_exhaustive(code));
            BigInt total(0);
            for (const auto& c : dist.counts) total += c;
            CHECK(total == BigInt::pow(BigInt(4), code.k));
        }
    }
}

TEST_CASE("coset minimum weights respect the sequence bounds, q = 2") {
    const CurveParams cp = curve_params(2);
    const FieldSpec& F = field_make(2);
    const long big_n = 8 + 2 * cp.genus - 2;  // q^3 + 2g - 2
    SUBCASE("one-point steps") {
        for (long i = 0; i <= 7; ++i) {
            // C_Omega(D, iP) = C_L(D, (big_n - i)P), one step of the filtration
            const LinearCode sup = make_code(SequenceKind::OnePoint, big_n - i, 2);
            const LinearCode sub = make_code(SequenceKind::OnePoint, big_n - i - 1, 2);
            const long w = coset_min_weight(sub, sup);
            const long bound = sequence_bound_simple(i, SequenceKind::OnePoint, cp);
            if (w > 0) CHECK(w >= bound);
        }
    }
    SUBCASE("two-point steps") {
        for (long i = 0; i <= 7; ++i) {
            const LinearCode sup = make_code(SequenceKind::TwoPoint, big_n - i, 2);
            const LinearCode sub = make_code(SequenceKind::TwoPoint, big_n - i - 1, 2);
            const long w = coset_min_weight(sub, sup);
            if (w > 0) CHECK(w >= sequence_bound_improved(i, cp));
        }
    }
    SUBCASE("empty coset and containment checks") {
        const LinearCode c5 = make_code(SequenceKind::OnePoint, 5, 2);
        CHECK(coset_min_weight(c5, c5) == 0);
        const LinearCode c3 = make_code(SequenceKind::OnePoint, 3, 2);
        CHECK_THROWS_AS(coset_min_weight(c5, c3), std::invalid_argument);
    }
    (void)F;
}

TEST_CASE("Feng-Rao divisibility counts") {
    const CurveParams cp = curve_params(8);
    const auto nothing = [](int, int) { return false; };
    CHECK(fengrao_divisibility_count({3, 4, Chart::P}, nothing, cp) == 20);
    CHECK(fengrao_divisibility_count({7, 2, Chart::P}, nothing, cp) == 24);
    // pole order 80 with the two-point diagram (x^i, i < 8, excluded):
    // divisors of x y^8 give a 2x8 rectangle, plus x^8 dividing x^10
    const auto twopoint_excl = [](int s, int t) { return t == 0 && s < 8; };
    CHECK(fengrao_divisibility_count({1, 8, Chart::P}, twopoint_excl, cp) == 17);
}

TEST_CASE("divisibility counts equal the one-point sequence bounds") {
    for (const int q : {2, 3, 4, 5, 6, 7, 8}) {
        const CurveParams cp = curve_params(q);
        const auto nothing = [](int, int) { return false; };
        for (long i = -1; i <= 4 * cp.genus + 2 + 2 * q; ++i) {
            const auto mu = monomial_with_pole(i + 1, cp);
            if (!mu) continue;  // gap step
            CHECK(fengrao_divisibility_count(*mu, nothing, cp) ==
                  sequence_bound_simple(i, SequenceKind::OnePoint, cp));
        }
    }
}

namespace {

// C_Omega(R-P-Q, class of mP + nQ) for 0 <= n <= q, with representatives
// chosen so the codes nest literally along both P- and Q-steps: for n >= 1
// the L-space is the (m+q+1)P - (q+1-n)Q Park basis divided by y.
LinearCode omega_code_for_class(long m, long n, const CurveParams& cp,
                                const FieldSpec& F, const SupportSpec& sup) {
    GFMatrix ev;
    if (n == 0)
        ev = evaluation_matrix(basis_for_class(m, 0, cp), sup, F);
    else
        ev = evaluation_matrix_y_shift(
            basis_for_class(m + cp.q + 1, n - cp.q - 1, cp), sup, F, -1);
    LinearCode code;
    code.field = &F;
    code.n = static_cast<long>(sup.points.size());
    code.gen = nullspace(ev, F);
    code.k = code.gen->rows;
    return code;
}

}  // namespace

TEST_CASE("grid labels are sound on every edge, q = 2 exhaustively") {
    // base and propagated labels lower-bound the true coset minimum weight
    // of every edge in a window, not just along the named sequences
    const CurveParams cp = curve_params(2);
    const FieldSpec& F = field_make(2);
    const SupportSpec sup = SupportSpec::make(SupportKind::RMinusPQ, cp, F);
    const long m_lo = -1, m_hi = 12;
    DivisorGrid base = make_base_grid(cp, m_lo, m_hi, cp.q);
    DivisorGrid prop = base;
    propagate_grid(prop);
    for (long m = m_lo; m <= m_hi; ++m)
        for (long n = 0; n <= cp.q; ++n) {
            const LinearCode here = omega_code_for_class(m, n, cp, F, sup);
            if (m < m_hi) {
                const LinearCode right = omega_code_for_class(m + 1, n, cp, F, sup);
                const long w = coset_min_weight(right, here);
                if (w > 0) {
                    CHECK(w >= base.p_label(m, n));
                    CHECK(w >= prop.p_label(m, n));
                }
            }
            if (n < cp.q) {
                const LinearCode up = omega_code_for_class(m, n + 1, cp, F, sup);
                const long w = coset_min_weight(up, here);
                if (w > 0) {
                    CHECK(w >= base.q_label(m, n));
                    CHECK(w >= prop.q_label(m, n));
                }
            }
        }
}
