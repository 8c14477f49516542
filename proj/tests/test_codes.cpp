#include "doctest.h"

#include <algorithm>

#include "hermitian/codes.hpp"
#include "hermitian/oracle.hpp"

using namespace hermitian;

TEST_CASE("evaluation matrix basics over GF(4)") {
    const CurveParams cp = curve_params(2);
    const FieldSpec& F = field_make(2);
    const SupportSpec sup = SupportSpec::make(SupportKind::RMinusP, cp, F);
    CHECK(sup.points.size() == 8);
    const GFMatrix ones = evaluation_matrix({{0, 0, Chart::P}}, sup, F);
    for (long c = 0; c < 8; ++c) CHECK(ones.at(0, c) == 1);
    const GFMatrix m =
        evaluation_matrix({{0, 0, Chart::P}, {1, 0, Chart::P}, {0, 1, Chart::P}}, sup, F);
    CHECK(rank(m, F) == 3);
}

TEST_CASE("y vanishes nowhere off the origin") {
    const CurveParams cp = curve_params(4);
    const FieldSpec& F = field_make(4);
    const SupportSpec sup = SupportSpec::make(SupportKind::RMinusPQ, cp, F);
    CHECK(sup.points.size() == 63);
    const GFMatrix row = evaluation_matrix({{0, 1, Chart::P}}, sup, F);
    for (long c = 0; c < row.cols; ++c) CHECK(row.at(0, c) != 0);
}

TEST_CASE("Q-chart evaluation rejects the origin") {
    const CurveParams cp = curve_params(2);
    const FieldSpec& F = field_make(2);
    const SupportSpec with_origin = SupportSpec::make(SupportKind::RMinusP, cp, F);
    CHECK_THROWS_AS(evaluation_matrix({{1, 0, Chart::Q}}, with_origin, F),
                    std::invalid_argument);
    const SupportSpec without = SupportSpec::make(SupportKind::RMinusPQ, cp, F);
    const GFMatrix u = evaluation_matrix({{1, 0, Chart::Q}}, without, F);
    CHECK(u.cols == 7);
}

TEST_CASE("introduction examples over GF(16)") {
    const CurveParams cp = curve_params(4);
    const FieldSpec& F = field_make(4);
    const LinearCode c59 = classical_code(SequenceKind::OnePoint, 59, cp, F);
    CHECK(c59.n == 64);
    CHECK(c59.k == 54);
    const LinearCode c60 = classical_code(SequenceKind::OnePoint, 60, cp, F);
    CHECK(c60.k == 55);
    const LinearCode t61 = classical_code(SequenceKind::TwoPoint, 61, cp, F);
    CHECK(t61.n == 63);
    CHECK(t61.k == 54);
    const LinearCode t60 = classical_code(SequenceKind::TwoPoint, 60, cp, F);
    CHECK(t60.k == 53);
}

TEST_CASE("repetition code and its dual") {
    const CurveParams cp = curve_params(2);
    const FieldSpec& F = field_make(2);
    const LinearCode rep = classical_code(SequenceKind::OnePoint, 0, cp, F);
    CHECK(rep.n == 8);
    CHECK(rep.k == 1);
    const LinearCode dual = residue_dual(rep, cp);
    CHECK(dual.k == 7);
    CHECK(rows_orthogonal(*dual.gen, *rep.gen, F));
    // double dual restores the row space
    const LinearCode dd = residue_dual(dual, cp);
    CHECK(same_row_space(*dd.gen, *rep.gen, F));
}

TEST_CASE("classical dimensions match Riemann-Roch, q = 2, 3, 4") {
    for (const int q : {2, 3, 4}) {
        const CurveParams cp = curve_params(q);
        const FieldSpec& F = field_make(q);
        const long q3 = static_cast<long>(q) * q * q;
        for (long a = 0; a <= 2 * cp.k_degree() + 4; ++a) {
            const LinearCode one = classical_code(SequenceKind::OnePoint, a, cp, F);
            CHECK(one.k == code_dim(a, 0, SupportClass::RMinusP, cp));
            if (a >= 2 * cp.genus - 1 && a < q3)
                CHECK(one.k == a - cp.genus + 1);
            const LinearCode two = classical_code(SequenceKind::TwoPoint, a, cp, F);
            CHECK(two.k == code_dim(a, -2, SupportClass::RMinusPQ, cp));
        }
    }
}

TEST_CASE("two-point codes drop 1 and x from the one-point basis") {
    for (const int q : {2, 3, 4}) {
        const CurveParams cp = curve_params(q);
        const FieldSpec& F = field_make(q);
        const SupportSpec sup = SupportSpec::make(SupportKind::RMinusPQ, cp, F);
        for (long a = 2; a <= 2 * cp.k_degree() + 2; ++a) {
            auto basis = basis_one_point(a, cp);
            std::erase_if(basis, [](const Monomial& mu) {
                return (mu.i == 0 || mu.i == 1) && mu.j == 0;
            });
            const GFMatrix trimmed = evaluation_matrix(basis, sup, F);
            const LinearCode two = classical_code(SequenceKind::TwoPoint, a, cp, F);
            CHECK(same_row_space(trimmed, *two.gen, F));
        }
    }
}

TEST_CASE("improved codes: check counts and parameters") {
    const CurveParams cp4 = curve_params(4);
    const FieldSpec& F16 = field_make(4);
    const LinearCode imp = improved_code(SequenceKind::OnePoint, 5,
                                         BoundMethod::Simple, cp4, F16);
    CHECK(imp.n == 64);
    CHECK(imp.chk->rows == 8);
    CHECK(imp.k == 56);

    const CurveParams cp8 = curve_params(8);
    const FieldSpec& F64 = field_make(8);
    const LinearCode imp2 = improved_code(SequenceKind::TwoPoint, 19,
                                          BoundMethod::Improved, cp8, F64);
    CHECK(imp2.n == 511);
    CHECK(imp2.chk->rows == 37);
    CHECK(imp2.n - imp2.k == 37);  // checks are independent
    CHECK(rows_orthogonal(*imp2.gen, *imp2.chk, F64));

    const LinearCode tiny = improved_code(SequenceKind::OnePoint, 2,
                                          BoundMethod::Simple, cp4, F16);
    CHECK(tiny.chk->rows == 1);
    CHECK_THROWS_AS(improved_code(SequenceKind::OnePoint, 100, BoundMethod::Simple,
                                  cp4, F16),
                    std::invalid_argument);
}

TEST_CASE("improved at small delta reproduces the classical check set") {
    // whenever no check below the cutoff is removable, the improved code
    // equals the classical one; its dual is the classical evaluation code
    for (const int q : {2, 3, 4}) {
        const CurveParams cp = curve_params(q);
        const FieldSpec& F = field_make(q);
        const auto seq = make_coset_bounds(cp, SequenceKind::TwoPoint,
                                           BoundMethod::Improved,
                                           q * q + 4 * cp.genus + 2);
        long tested = 0;
        for (long delta = 2; delta <= q * q; ++delta) {
            const auto steps = check_steps(SequenceKind::TwoPoint, delta,
                                           BoundMethod::Improved, cp);
            if (steps.empty()) continue;
            const long cutoff = steps.back() + 1;
            bool interior_removal = false;
            for (long i = -1; i < cutoff; ++i)
                if (seq.bound(i) >= delta) interior_removal = true;
            if (interior_removal) continue;
            const LinearCode imp = improved_code(SequenceKind::TwoPoint, delta,
                                                 BoundMethod::Improved, cp, F);
            const long q3 = static_cast<long>(q) * q * q;
            const long a_eval = q3 + 2 * cp.genus - 2 - cutoff;
            const LinearCode cls = classical_code(SequenceKind::TwoPoint, a_eval, cp, F);
            CHECK(same_row_space(*imp.gen, *cls.gen, F));
            ++tested;
        }
        CHECK(tested > 0);
    }
}

TEST_CASE("residue-code duality: check side equals the generator side") {
    // C_L(D, aP)^perp = C_L(D, (q^3 + 2g - 2 - a)P) as subspaces
    for (const int q : {2, 3}) {
        const CurveParams cp = curve_params(q);
        const FieldSpec& F = field_make(q);
        const long big_n = static_cast<long>(q) * q * q + 2 * cp.genus - 2;
        for (long a = 0; a <= big_n; ++a) {
            const LinearCode ca = classical_code(SequenceKind::OnePoint, a, cp, F);
            const LinearCode cb =
                classical_code(SequenceKind::OnePoint, big_n - a, cp, F);
            CHECK(rows_orthogonal(*ca.gen, *cb.gen, F));
            CHECK(ca.k + cb.k == ca.n);
        }
    }
}

TEST_CASE("shortening at the origin column preserves distance, q = 2") {
    const CurveParams cp = curve_params(2);
    const FieldSpec& F = field_make(2);
    for (long a = 2; a <= 6; ++a) {
        const LinearCode code = classical_code(SequenceKind::OnePoint, a, cp, F);
        const LinearCode shortened = shorten(code, 0);  // origin sorts first
        CHECK(shortened.n == 7);
        CHECK(min_weight_exhaustive(shortened) == min_weight_exhaustive(code));
    }
}

TEST_CASE("shortening the repetition code leaves the zero code") {
    const CurveParams cp = curve_params(2);
    const FieldSpec& F = field_make(2);
    const LinearCode rep = classical_code(SequenceKind::OnePoint, 0, cp, F);
    const LinearCode s = shorten(rep, 3);
    CHECK(s.n == 7);
    CHECK(s.k == 0);
    CHECK_THROWS_AS(shorten(rep, 8), std::invalid_argument);
}

TEST_CASE("shortening twice commutes") {
    const CurveParams cp = curve_params(2);
    const FieldSpec& F = field_make(2);
    const LinearCode code = classical_code(SequenceKind::OnePoint, 5, cp, F);
    const LinearCode ab = shorten(shorten(code, 5), 2);
    const LinearCode ba = shorten(shorten(code, 2), 4);  // index shift after deletion
    CHECK(same_row_space(*ab.gen, *ba.gen, F));
}

TEST_CASE("check tables reproduce the delta = 19 diagrams over GF(64)") {
    const CurveParams cp = curve_params(8);
    SUBCASE("one-point") {
        const auto table =
            check_table_improved(SequenceKind::OnePoint, 19, BoundMethod::Simple, cp);
        CHECK(table.size() == 46);
        long removed = 0;
        for (const auto& e : table) removed += e.removed ? 1 : 0;
        CHECK(removed == 7);
        const std::vector<std::pair<int, int>> expect = {
            {2, 6}, {3, 4}, {3, 5}, {4, 3}, {4, 4}, {5, 3}, {6, 2}};
        std::vector<std::pair<int, int>> got;
        for (const auto& e : table)
            if (e.removed) got.push_back({e.mono.i, e.mono.j});
        std::sort(got.begin(), got.end());
        CHECK(got == expect);
    }
    SUBCASE("two-point") {
        const auto table = check_table_improved(SequenceKind::TwoPoint, 19,
                                                BoundMethod::Improved, cp);
        CHECK(table.size() == 39);
        std::vector<std::pair<int, int>> got;
        for (const auto& e : table)
            if (e.removed) got.push_back({e.mono.i, e.mono.j});
        std::sort(got.begin(), got.end());
        CHECK(got == std::vector<std::pair<int, int>>{{3, 5}, {4, 4}});
        const bool has_x8 = std::any_of(table.begin(), table.end(), [](const auto& e) {
            return e.mono.i == 8 && e.mono.j == 0;
        });
        CHECK(has_x8);
    }
    SUBCASE("classical table for C_L(D, 74P - 8Q)^perp") {
        const auto table = check_table_classical(SequenceKind::TwoPoint, 74, cp);
        CHECK(table.size() == 39);
        for (const auto& e : table) CHECK_FALSE(e.removed);
    }
}

TEST_CASE("two-point improved with the corollary bounds only") {
    // the simple-bound variant spends at least as many checks
    const CurveParams cp = curve_params(4);
    const FieldSpec& F = field_make(4);
    for (long delta = 3; delta <= 9; delta += 3) {
        const LinearCode simple =
            improved_code(SequenceKind::TwoPoint, delta, BoundMethod::Simple, cp, F);
        const LinearCode improved =
            improved_code(SequenceKind::TwoPoint, delta, BoundMethod::Improved, cp, F);
        CHECK(simple.k <= improved.k);
        CHECK(rows_orthogonal(*simple.gen, *simple.chk, F));
    }
}

TEST_CASE("classical dimensions at the larger supported fields") {
    for (const int q : {5, 7, 9}) {
        const CurveParams cp = curve_params(q);
        const FieldSpec& F = field_make(q);
        const long a1 = 2 * cp.genus + 5;
        const LinearCode one = classical_code(SequenceKind::OnePoint, a1, cp, F);
        CHECK(one.n == static_cast<long>(q) * q * q);
        CHECK(one.k == a1 - cp.genus + 1);
        const LinearCode two = classical_code(SequenceKind::TwoPoint, a1, cp, F);
        CHECK(two.n == one.n - 1);
        CHECK(two.k == a1 - 2 - cp.genus + 1);
        const LinearCode imp =
            improved_code(SequenceKind::TwoPoint, q + 2, BoundMethod::Improved, cp, F);
        CHECK(imp.k == imp.n - imp.chk->rows);  // checks independent here
    }
}
