#include "hermitian/codes.hpp"

#include <algorithm>
#include <stdexcept>

namespace hermitian {

SupportSpec SupportSpec::make(SupportKind kind, const CurveParams& cp,
                              const FieldSpec& F) {
    SupportSpec s;
    s.kind = kind;
    s.points = rational_points(cp, F);
    if (kind == SupportKind::RMinusPQ) {
        // the origin sorts first
        if (s.points.front().x != 0 || s.points.front().y != 0)
            throw std::logic_error("origin not first in point order");
        s.points.erase(s.points.begin());
    }
    return s;
}

GFMatrix evaluation_matrix(const std::vector<Monomial>& monomials,
                           const SupportSpec& support, const FieldSpec& F) {
    return evaluation_matrix_y_shift(monomials, support, F, 0);
}

GFMatrix evaluation_matrix_y_shift(const std::vector<Monomial>& monomials,
                                   const SupportSpec& support, const FieldSpec& F,
                                   int y_shift) {
    GFMatrix m(static_cast<long>(monomials.size()),
               static_cast<long>(support.points.size()));
    for (long c = 0; c < m.cols; ++c) {
        const AffinePoint& pt = support.points[c];
        for (long r = 0; r < m.rows; ++r) {
            const Monomial& mu = monomials[r];
            uint8_t ex = pt.x, ey = pt.y;
            if (mu.chart == Chart::Q) {
                if (pt.y == 0)
                    throw std::invalid_argument(
                        "Q-chart monomial evaluated at a point with y = 0");
                ex = F.div(pt.x, pt.y);  // u = x/y
                ey = F.inv(pt.y);        // v = 1/y
            }
            const long je = static_cast<long>(mu.j) + y_shift;
            if (je < 0 && ey == 0)
                throw std::invalid_argument("negative y power at a point with y = 0");
            m.at(r, c) = F.mul(F.pow(ex, mu.i), F.pow(ey, je));
        }
    }
    return m;
}

namespace {

std::string divisor_string(SequenceKind kind, long a) {
    if (kind == SequenceKind::OnePoint) return std::to_string(a) + "P";
    return std::to_string(a) + "P-2Q";
}

}  // namespace

LinearCode classical_code(SequenceKind kind, long a, const CurveParams& cp,
                          const FieldSpec& F) {
    if (a < 0) throw std::invalid_argument("classical_code: a must be >= 0");
    const SupportSpec sup = SupportSpec::make(
        kind == SequenceKind::OnePoint ? SupportKind::RMinusP : SupportKind::RMinusPQ,
        cp, F);
    std::vector<Monomial> basis;
    if (kind == SequenceKind::OnePoint) {
        basis = basis_one_point(a, cp);
    } else {
        basis = basis_for_class(a, -2, cp);
    }
    LinearCode code;
    code.field = &F;
    code.n = static_cast<long>(sup.points.size());
    code.gen = evaluation_matrix(basis, sup, F);
    code.k = rank(*code.gen, F);
    code.prov = {kind == SequenceKind::OnePoint ? "onepoint-classical"
                                                : "twopoint-classical",
                 cp.q,
                 a,
                 -1,
                 divisor_string(kind, a),
                 kind == SequenceKind::OnePoint ? "R-P" : "R-P-Q",
                 "evaluation",
                 ""};
    return code;
}

LinearCode residue_dual(const LinearCode& code, const CurveParams& cp) {
    if (!code.gen) throw std::invalid_argument("residue_dual needs a generator");
    LinearCode dual;
    dual.field = code.field;
    dual.n = code.n;
    dual.chk = code.gen;
    dual.gen = nullspace(*code.gen, *code.field);
    dual.k = dual.gen->rows;
    dual.prov = code.prov;
    dual.prov.construction = "dual-of-" + code.prov.construction;
    dual.prov.method = "residue-dual";
    (void)cp;
    return dual;
}

std::optional<Monomial> check_monomial_for_step(SequenceKind kind, long i,
                                                const CurveParams& cp) {
    if (kind == SequenceKind::OnePoint) return monomial_with_pole(i + 1, cp);
    return monomial_with_pole(i + cp.q + 2, cp, cp.q);
}

std::vector<long> check_steps(SequenceKind kind, long delta, BoundMethod method,
                              const CurveParams& cp) {
    if (delta < 2) throw std::invalid_argument("delta must be >= 2");
    const long i_max = delta + 4 * cp.genus + 2;
    std::vector<long> steps;
    for (long i = -1; i <= i_max; ++i) {
        const long b = sequence_bound(i, kind, method, cp);
        if (b > 0 && b < delta) steps.push_back(i);
    }
    return steps;
}

LinearCode improved_code(SequenceKind kind, long delta, BoundMethod method,
                         const CurveParams& cp, const FieldSpec& F) {
    const SupportSpec sup = SupportSpec::make(
        kind == SequenceKind::OnePoint ? SupportKind::RMinusP : SupportKind::RMinusPQ,
        cp, F);
    const long n = static_cast<long>(sup.points.size());
    if (delta > n)
        throw std::invalid_argument("designed distance exceeds the code length");
    std::vector<Monomial> checks;
    for (const long i : check_steps(kind, delta, method, cp)) {
        const auto mu = check_monomial_for_step(kind, i, cp);
        if (!mu)
            throw std::logic_error("positive coset bound on a step without a monomial");
        checks.push_back(*mu);
    }
    LinearCode code;
    code.field = &F;
    code.n = n;
    // two-point check functions live in L((i+1)P + Q): the Park monomials
    // of the aP - qQ family divided by y
    code.chk = kind == SequenceKind::OnePoint
                   ? evaluation_matrix(checks, sup, F)
                   : evaluation_matrix_y_shift(checks, sup, F, -1);
    const long r = rank(*code.chk, F);
    code.k = n - r;
    code.gen = nullspace(*code.chk, F);
    if (code.gen->rows != code.k) throw std::logic_error("rank bookkeeping");
    code.prov = {kind == SequenceKind::OnePoint ? "onepoint-improved"
                                                : "twopoint-improved",
                 cp.q,
                 delta,
                 delta,
                 kind == SequenceKind::OnePoint ? "checks in L(mP)"
                                                : "checks x^i y^(j-1) in L(mP+Q)",
                 kind == SequenceKind::OnePoint ? "R-P" : "R-P-Q",
                 method == BoundMethod::Improved ? "improved" : "simple",
                 ""};
    return code;
}

LinearCode shorten(const LinearCode& code, long coordinate) {
    if (!code.gen) throw std::invalid_argument("shorten needs a generator");
    if (coordinate < 0 || coordinate >= code.n)
        throw std::invalid_argument("shorten: coordinate out of range");
    const FieldSpec& F = *code.field;
    GFMatrix g = rref(*code.gen, F);
    // eliminate the chosen column, then drop any row still supported there
    long pivot = -1;
    for (long r = 0; r < g.rows; ++r)
        if (g.at(r, coordinate) != 0) { pivot = r; break; }
    if (pivot >= 0) {
        const uint8_t ip = F.inv(g.at(pivot, coordinate));
        for (long c = 0; c < g.cols; ++c) g.at(pivot, c) = F.mul(g.at(pivot, c), ip);
        for (long r = 0; r < g.rows; ++r) {
            if (r == pivot) continue;
            const uint8_t f = g.at(r, coordinate);
            if (f == 0) continue;
            for (long c = 0; c < g.cols; ++c)
                g.at(r, c) = F.sub(g.at(r, c), F.mul(f, g.at(pivot, c)));
        }
        // remove the pivot row
        GFMatrix h(g.rows - 1, g.cols);
        for (long r = 0, o = 0; r < g.rows; ++r) {
            if (r == pivot) continue;
            for (long c = 0; c < g.cols; ++c) h.at(o, c) = g.at(r, c);
            ++o;
        }
        g = std::move(h);
    }
    LinearCode out;
    out.field = code.field;
    out.n = code.n - 1;
    out.gen = rref(delete_column(g, coordinate), F);
    out.k = out.gen->rows;
    out.prov = code.prov;
    out.prov.note = "shortened at coordinate " + std::to_string(coordinate);
    return out;
}

namespace {

std::vector<CheckEntry> check_table(SequenceKind kind, long pole_cap, long delta,
                                    BoundMethod method, const CurveParams& cp) {
    std::vector<CheckEntry> out;
    const long shift = kind == SequenceKind::OnePoint ? 1 : cp.q + 2;
    for (long pole = 0; pole <= pole_cap; ++pole) {
        const auto mu = monomial_with_pole(
            pole, cp, kind == SequenceKind::OnePoint ? 0 : cp.q);
        if (!mu) continue;
        CheckEntry e;
        e.mono = *mu;
        e.pole = pole;
        e.step = pole - shift;
        e.bound = sequence_bound(e.step, kind, method, cp);
        e.removed = delta >= 2 && e.bound >= delta;
        out.push_back(e);
    }
    return out;
}

}  // namespace

std::vector<CheckEntry> check_table_classical(SequenceKind kind, long a,
                                              const CurveParams& cp) {
    // checks of C_L(D, aP)^perp resp. C_L(D, aP-qQ)^perp
    return check_table(kind, a, -1, BoundMethod::Improved, cp);
}

std::vector<CheckEntry> check_table_improved(SequenceKind kind, long delta,
                                             BoundMethod method,
                                             const CurveParams& cp) {
    const auto steps = check_steps(kind, delta, method, cp);
    if (steps.empty()) return {};
    const long shift = kind == SequenceKind::OnePoint ? 1 : cp.q + 2;
    const long pole_cap = steps.back() + shift;
    return check_table(kind, pole_cap, delta, method, cp);
}

}  // namespace hermitian
