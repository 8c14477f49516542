#include "hermitian/monomials.hpp"

#include <algorithm>
#include <stdexcept>

namespace hermitian {

std::pair<long, long> valuations(const Monomial& mu, const CurveParams& cp) {
    const long q = cp.q;
    return {q * mu.i + (q + 1) * mu.j, mu.i + (q + 1) * mu.j};
}

std::vector<Monomial> basis_one_point(long m, const CurveParams& cp, Chart chart) {
    const long q = cp.q;
    std::vector<Monomial> out;
    if (m < 0) return out;
    for (int i = 0; i <= q; ++i)
        for (long j = 0; q * i + (q + 1) * j <= m; ++j)
            out.push_back({i, static_cast<int>(j), chart});
    std::sort(out.begin(), out.end(), [&](const Monomial& x, const Monomial& y) {
        return valuations(x, cp).first < valuations(y, cp).first;
    });
    return out;
}

std::vector<Monomial> basis_two_point(long d, int a, int b, const CurveParams& cp,
                                      Chart chart) {
    const int q = cp.q;
    if (a < 0 || a > q || b < 0 || b > q)
        throw std::invalid_argument("basis_two_point: a, b must lie in [0, q]");
    std::vector<Monomial> out;
    for (int i = 0; i <= q && i <= d; ++i)
        for (long j = 0; i + j <= d; ++j) {
            if (i + j == d && i < a) continue;
            if (j == 0 && i < b) continue;
            out.push_back({i, static_cast<int>(j), chart});
        }
    std::sort(out.begin(), out.end(), [&](const Monomial& x, const Monomial& y) {
        return valuations(x, cp).first < valuations(y, cp).first;
    });
    return out;
}

long two_point_basis_count(long d, int a, int b, const CurveParams& cp) {
    const int q = cp.q;
    if (a < 0 || a > q || b < 0 || b > q)
        throw std::invalid_argument("two_point_basis_count: a, b must lie in [0, q]");
    long count = 0;
    for (int i = 0; i <= q && i <= d; ++i) {
        long n = d - i + 1;  // j in [0, d-i]
        if (i < a) --n;      // drop j = d-i
        if (i < b && d - i > 0) --n;  // drop j = 0 (distinct from the above)
        if (i < std::max(a, b) && d - i == 0) n = 0;  // single j hit by either rule
        if (n > 0) count += n;
    }
    return count;
}

long class_dim_L(long m, long n, const CurveParams& cp) {
    const CanonicalForm c = canonicalize({m, n}, cp);
    return two_point_basis_count(c.d, c.a, c.b, cp);
}

std::vector<Monomial> basis_for_class(long m, long n, const CurveParams& cp,
                                      Chart chart) {
    const CanonicalForm c = canonicalize({m, n}, cp);
    return basis_two_point(c.d, c.a, c.b, cp, chart);
}

std::optional<Monomial> monomial_with_pole(long pole, const CurveParams& cp,
                                           long min_vanish, Chart chart) {
    if (pole < 0) return std::nullopt;
    const long q = cp.q;
    long i = (-pole) % (q + 1);
    if (i < 0) i += q + 1;
    const long j = (pole - q * i) / (q + 1);
    if (j < 0) return std::nullopt;
    if (i + (q + 1) * j < min_vanish) return std::nullopt;
    return Monomial{static_cast<int>(i), static_cast<int>(j), chart};
}

bool rr_dimension_check(long degree, long basis_size, const CurveParams& cp) {
    const long g = cp.genus;
    if (degree < 0) return basis_size == 0;
    if (degree >= 2 * g - 1) return basis_size == degree - g + 1;
    return basis_size <= std::max(0L, degree - g + 1) + g && basis_size >= 0;
}

}  // namespace hermitian
