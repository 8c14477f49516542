#include "hermitian/curve.hpp"

#include <stdexcept>
#include <string>

namespace hermitian {

CurveParams curve_params(int q) {
    if (q < 2) throw std::invalid_argument("curve needs q >= 2");
    CurveParams cp;
    cp.q = q;
    cp.genus = static_cast<long>(q) * (q - 1) / 2;
    const long q3 = static_cast<long>(q) * q * q;
    cp.n_points = q3 + 1;
    cp.aut_order = static_cast<unsigned long long>(q3) * (q3 + 1) *
                   (static_cast<long>(q) * q - 1);
    return cp;
}

std::vector<AffinePoint> rational_points(const CurveParams& cp, const FieldSpec& F) {
    if (F.q != cp.q) throw std::invalid_argument("field/curve q mismatch");
    std::vector<AffinePoint> pts;
    pts.reserve(cp.n_points - 1);
    for (int x = 0; x < F.size; ++x) {
        const uint8_t rhs = F.mul(F.pow_q(static_cast<uint8_t>(x)), static_cast<uint8_t>(x));
        for (int y = 0; y < F.size; ++y) {
            const uint8_t lhs = F.add(F.pow_q(static_cast<uint8_t>(y)), static_cast<uint8_t>(y));
            if (lhs == rhs) pts.push_back({static_cast<uint8_t>(x), static_cast<uint8_t>(y)});
        }
    }
    if (static_cast<long>(pts.size()) != cp.n_points - 1)
        throw std::logic_error("affine point count != q^3");
    return pts;  // x-major, y-minor order by construction
}

namespace {
int neg_mod(long v, int n) {
    long r = (-v) % n;
    if (r < 0) r += n;
    return static_cast<int>(r);
}
}  // namespace

CanonicalForm canonicalize(TwoPointDivisor G, const CurveParams& cp) {
    const int h = cp.q + 1;
    CanonicalForm c;
    c.a = neg_mod(G.m, h);
    c.b = neg_mod(G.n, h);
    const long num = G.m + G.n + c.a + c.b;
    if (num % h != 0) throw std::logic_error("canonicalize: degree equation");
    c.d = num / h;
    return c;
}

SeqDecomp sequence_decompose(long i, const CurveParams& cp) {
    const int h = cp.q + 1;
    SeqDecomp s;
    s.a = neg_mod(i, h);
    s.d = (i + s.a) / h - cp.q + 2;
    return s;
}

}  // namespace hermitian
