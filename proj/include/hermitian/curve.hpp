#pragma once

#include <cstdint>
#include <vector>

#include "hermitian/field.hpp"

namespace hermitian {

/// Combinatorial data of the Hermitian curve y^q + y = x^(q+1) over GF(q^2).
///
/// Only integer data lives here; the bound formulas work for any q >= 2
/// (incl. non-prime-powers), while matrix construction additionally needs
/// a FieldSpec from field_make(q).
struct CurveParams {
    int q = 0;
    long genus = 0;              // q(q-1)/2
    long n_points = 0;           // q^3 + 1 rational points
    unsigned long long aut_order = 0;  // q^3 (q^3+1) (q^2-1), recorded constant

    long h_degree() const { return q + 1; }       // deg of the hyperplane class H
    long k_degree() const { return 2 * genus - 2; }  // deg K = (q-2)(q+1)
};

CurveParams curve_params(int q);

/// Affine rational point (x, y) with y^q + y = x^(q+1); field-element codes.
struct AffinePoint {
    uint8_t x = 0;
    uint8_t y = 0;
};

/// All q^3 affine points, sorted ascending by (x code, y code).
/// The origin (0,0) is always first.
std::vector<AffinePoint> rational_points(const CurveParams& cp, const FieldSpec& F);

/// Divisor mP + nQ; P is the point at infinity, Q the origin.
struct TwoPointDivisor {
    long m = 0;
    long n = 0;
    long degree() const { return m + n; }
};

/// Class representative dH - aP - bQ with 0 <= a,b <= q.
/// Invariants: a = -m mod (q+1), b = -n mod (q+1), d(q+1) - a - b = m + n.
struct CanonicalForm {
    long d = 0;
    int a = 0;
    int b = 0;
    long degree(int q) const { return d * (q + 1) - a - b; }
    bool operator==(const CanonicalForm&) const = default;
};

CanonicalForm canonicalize(TwoPointDivisor G, const CurveParams& cp);

/// Write iP = (d+q-2)H - aP with 0 <= a <= q: a = (-i) mod (q+1),
/// d = (i+a)/(q+1) - q + 2.
struct SeqDecomp {
    long d = 0;
    int a = 0;
    bool operator==(const SeqDecomp&) const = default;
};

SeqDecomp sequence_decompose(long i, const CurveParams& cp);

enum class StepDir { P, Q };

}  // namespace hermitian
