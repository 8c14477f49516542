#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hermitian/bounds.hpp"
#include "hermitian/matrix.hpp"
#include "hermitian/monomials.hpp"

namespace hermitian {

enum class SupportKind { RMinusP, RMinusPQ };

/// Ordered evaluation support: all q^3 affine points for R - P, all but
/// the origin for R - P - Q.  Point order is fixed by rational_points.
struct SupportSpec {
    SupportKind kind = SupportKind::RMinusP;
    std::vector<AffinePoint> points;

    static SupportSpec make(SupportKind kind, const CurveParams& cp,
                            const FieldSpec& F);
};

/// Construction descriptor carried by every code.
struct Provenance {
    std::string construction;  // e.g. "onepoint-classical"
    int q = 0;
    long param = 0;            // a for classical, delta for improved
    long designed_distance = -1;
    std::string divisor;
    std::string support;
    std::string method;
    std::string note;
};

struct LinearCode {
    long n = 0;
    long k = 0;
    const FieldSpec* field = nullptr;
    std::optional<GFMatrix> gen;
    std::optional<GFMatrix> chk;
    Provenance prov;
};

/// Row r, column c = monomial r evaluated at support point c.  Q-chart
/// monomials require y != 0 on the support (true for R - P - Q only).
GFMatrix evaluation_matrix(const std::vector<Monomial>& monomials,
                           const SupportSpec& support, const FieldSpec& F);

/// Evaluation of x^i y^(j + y_shift) for P-chart monomials: the bases of
/// the spaces L(mP + Q) are the aP - qQ Park bases divided by y.
/// Requires y != 0 on the support when y_shift < 0.
GFMatrix evaluation_matrix_y_shift(const std::vector<Monomial>& monomials,
                                   const SupportSpec& support, const FieldSpec& F,
                                   int y_shift);

/// C(a) = C_L(R-P, aP) or C'(a) = C_L(R-P-Q, aP-2Q); k computed by rank.
LinearCode classical_code(SequenceKind kind, long a, const CurveParams& cp,
                          const FieldSpec& F);

/// Dual code: check matrix = the argument's generator, generator = a
/// deterministic RREF basis of the null space.
LinearCode residue_dual(const LinearCode& code, const CurveParams& cp);

/// Check monomial separating step i of the one- or two-point residue-code
/// filtration: pole order i+1 (one-point) or i+q+2 within the aP - qQ
/// family (two-point).  nullopt on empty steps.
std::optional<Monomial> check_monomial_for_step(SequenceKind kind, long i,
                                                const CurveParams& cp);

/// Steps with 0 < bound < delta; the improved code's check set.
std::vector<long> check_steps(SequenceKind kind, long delta, BoundMethod method,
                              const CurveParams& cp);

/// Feng-Rao improved code for designed distance delta: check matrix rows
/// are the evaluation vectors of the check monomials at the steps in
/// check_steps.  k = n - rank(chk).
LinearCode improved_code(SequenceKind kind, long delta, BoundMethod method,
                         const CurveParams& cp, const FieldSpec& F);

/// Subcode of words vanishing at the coordinate, with the coordinate
/// deleted; k recomputed by rank.
LinearCode shorten(const LinearCode& code, long coordinate);

/// One row of the check-diagram emitted by the build command.
struct CheckEntry {
    Monomial mono;
    long pole = 0;
    long step = 0;
    long bound = 0;
    bool removed = false;  // proposed check whose coset bound is >= delta
};

/// The check diagram for a classical dual code (divisor aP or aP - qQ),
/// or for an improved code at designed distance delta (removed checks
/// flagged).  For improved constructions a is derived from the cutoff.
std::vector<CheckEntry> check_table_classical(SequenceKind kind, long a,
                                              const CurveParams& cp);
std::vector<CheckEntry> check_table_improved(SequenceKind kind, long delta,
                                             BoundMethod method,
                                             const CurveParams& cp);

}  // namespace hermitian
