#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hermitian/curve.hpp"

namespace hermitian {

/// Chart for monomial functions.  P-chart monomials are x^i y^j; Q-chart
/// monomials are u^i v^j with u = x/y, v = 1/y, the same combinatorics
/// with the roles of P and Q swapped.
enum class Chart { P, Q };

struct Monomial {
    int i = 0;  // exponent of x (or u)
    int j = 0;  // exponent of y (or v)
    Chart chart = Chart::P;
    bool operator==(const Monomial&) const = default;
};

/// (pole order at the chart's pole point, vanishing order at the other point).
/// P-chart: (q i + (q+1) j at P, i + (q+1) j at Q); Q-chart swaps P and Q.
std::pair<long, long> valuations(const Monomial& mu, const CurveParams& cp);

/// Basis of L(mP): all x^i y^j with 0 <= i <= q and q i + (q+1) j <= m,
/// sorted ascending by pole order.  Empty for m < 0.  chart = Q gives the
/// basis of L(mQ) in u,v monomials.
std::vector<Monomial> basis_one_point(long m, const CurveParams& cp,
                                      Chart chart = Chart::P);

/// Basis of L(d(q+1)P - aP - bQ) for 0 <= a,b <= q: monomials x^i y^j with
///   (1) 0 <= i <= q, 0 <= j, i + j <= d,
///   (2) a <= i when i + j = d,
///   (3) b <= i when j = 0,
/// sorted ascending by pole order at P.  chart = Q swaps the two points.
std::vector<Monomial> basis_two_point(long d, int a, int b, const CurveParams& cp,
                                      Chart chart = Chart::P);

/// |basis_two_point(d,a,b)| without materializing it; valid for every d.
long two_point_basis_count(long d, int a, int b, const CurveParams& cp);

/// dim L of the class mP + nQ (canonicalized internally).
long class_dim_L(long m, long n, const CurveParams& cp);

/// Basis of L(class of mP + nQ) via the canonical representative
/// d(q+1)P - aP - bQ.
std::vector<Monomial> basis_for_class(long m, long n, const CurveParams& cp,
                                      Chart chart = Chart::P);

/// The unique basis-shaped monomial with the given pole order (i <= q),
/// if any; min_vanish filters by vanishing order at the other point
/// (pass q for the aP - qQ family).
std::optional<Monomial> monomial_with_pole(long pole, const CurveParams& cp,
                                           long min_vanish = 0,
                                           Chart chart = Chart::P);

/// true iff size is consistent with Riemann-Roch for the given degree:
/// equality deg - g + 1 when deg >= 2g - 1, and the general bounds otherwise.
bool rr_dimension_check(long degree, long basis_size, const CurveParams& cp);

}  // namespace hermitian
