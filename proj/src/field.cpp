#include "hermitian/field.hpp"

#include <algorithm>
#include <string>

namespace hermitian {

namespace {

// dense polynomials over GF(p), little-endian coefficient vectors
using Poly = std::vector<int>;

Poly trim(Poly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

Poly poly_mod(Poly f, const Poly& g, int p) {
    f = trim(std::move(f));
    const int dg = static_cast<int>(g.size()) - 1;
    while (static_cast<int>(f.size()) - 1 >= dg) {
        const int df = static_cast<int>(f.size()) - 1;
        // g is monic, so the quotient digit is just the leading coefficient
        const int c = f[df];
        for (int i = 0; i <= dg; ++i) {
            int& t = f[df - dg + i];
            t = ((t - c * g[i]) % p + p) % p;
        }
        f = trim(std::move(f));
    }
    return f;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& g, int p) {
    if (a.empty() || b.empty()) return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    return poly_mod(std::move(prod), g, p);
}

int code_of(const Poly& f, int p) {
    int code = 0;
    for (size_t i = f.size(); i-- > 0;) code = code * p + f[i];
    return code;
}

Poly poly_of(int code, int p) {
    Poly f;
    while (code > 0) {
        f.push_back(code % p);
        code /= p;
    }
    return f;
}

bool is_irreducible(const Poly& g, int p) {
    const int dg = static_cast<int>(g.size()) - 1;
    // trial division by every monic polynomial of degree 1..dg/2
    for (int deg = 1; deg <= dg / 2; ++deg) {
        int count = 1;
        for (int i = 0; i < deg; ++i) count *= p;
        for (int low = 0; low < count; ++low) {
            Poly div = poly_of(low, p);
            div.resize(deg + 1, 0);
            div[deg] = 1;
            if (poly_mod(g, div, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

FieldSpec::FieldSpec(int p_, int m_, int q_, std::vector<int> modulus_)
    : p(p_), m(m_), q(q_), modulus(std::move(modulus_)) {
    size = 1;
    for (int i = 0; i < m; ++i) size *= p;
    if (q * q != size) throw std::logic_error("field table: q^2 != p^m");
    if (static_cast<int>(modulus.size()) != m + 1 || modulus[m] != 1)
        throw std::logic_error("field table: modulus not monic of degree m");
    if (!is_irreducible(modulus, p))
        throw std::logic_error("field table: modulus reducible");

    add_.resize(size * size);
    sub_.resize(size * size);
    for (int a = 0; a < size; ++a)
        for (int b = 0; b < size; ++b) {
            int s = 0, d = 0, pw = 1, x = a, y = b;
            for (int i = 0; i < m; ++i) {
                const int da = x % p, db = y % p;
                s += ((da + db) % p) * pw;
                d += (((da - db) % p + p) % p) * pw;
                x /= p;
                y /= p;
                pw *= p;
            }
            add_[a * size + b] = static_cast<uint8_t>(s);
            sub_[a * size + b] = static_cast<uint8_t>(d);
        }

    generator = static_cast<uint8_t>(p);  // the class of t
    alog_.assign(size - 1, 0);
    log_.assign(size, -1);
    Poly cur = {1};
    const Poly gen = poly_of(generator, p);
    for (int k = 0; k < size - 1; ++k) {
        const int code = code_of(cur, p);
        if (log_[code] != -1)
            throw std::logic_error("field table: generator not primitive");
        alog_[k] = static_cast<uint8_t>(code);
        log_[code] = k;
        cur = poly_mul_mod(cur, gen, modulus, p);
    }
    if (code_of(cur, p) != 1)
        throw std::logic_error("field table: generator order wrong");

    mul_.assign(size * size, 0);
    for (int a = 1; a < size; ++a)
        for (int b = 1; b < size; ++b)
            mul_[a * size + b] = alog_[(log_[a] + log_[b]) % (size - 1)];

    inv_.assign(size, 0);
    for (int a = 1; a < size; ++a)
        inv_[a] = alog_[(size - 1 - log_[a]) % (size - 1)];

    pow_q_.assign(size, 0);
    pow_q_[0] = 0;
    for (int a = 1; a < size; ++a)
        pow_q_[a] = alog_[(static_cast<long>(log_[a]) * q) % (size - 1)];
}

uint8_t FieldSpec::inv(uint8_t a) const {
    if (a == 0) throw std::invalid_argument("division by zero in GF(q^2)");
    return inv_[a];
}

uint8_t FieldSpec::div(uint8_t a, uint8_t b) const { return mul(a, inv(b)); }

uint8_t FieldSpec::pow(uint8_t a, long e) const {
    if (a == 0) {
        if (e < 0) throw std::invalid_argument("division by zero in GF(q^2)");
        return e == 0 ? 1 : 0;
    }
    const long n = size - 1;
    long k = (static_cast<long>(log_[a]) * (e % n)) % n;
    if (k < 0) k += n;
    return alog_[k];
}

long FieldSpec::element_order(uint8_t a) const {
    if (a == 0) throw std::invalid_argument("order of zero");
    const long n = size - 1;
    const long l = log_[a];
    if (l == 0) return 1;
    long ord = 1;
    long k = l;
    while (k != 0) {
        k = (k + l) % n;
        ++ord;
    }
    return ord;
}

const FieldSpec& field_make(int q) {
    switch (q) {
        case 2: { static const FieldSpec f(2, 2, 2, {1, 1, 1}); return f; }
        case 3: { static const FieldSpec f(3, 2, 3, {2, 2, 1}); return f; }
        case 4: { static const FieldSpec f(2, 4, 4, {1, 1, 0, 0, 1}); return f; }
        case 5: { static const FieldSpec f(5, 2, 5, {2, 4, 1}); return f; }
        case 7: { static const FieldSpec f(7, 2, 7, {3, 6, 1}); return f; }
        case 8: { static const FieldSpec f(2, 6, 8, {1, 1, 0, 1, 1, 0, 1}); return f; }
        case 9: { static const FieldSpec f(3, 4, 9, {2, 0, 0, 2, 1}); return f; }
        default:
            throw std::invalid_argument("unsupported q = " + std::to_string(q) +
                                        " (supported: 2,3,4,5,7,8,9)");
    }
}

FieldElement arith(FieldElement a, FieldElement b, ArithKind kind) {
    if (a.spec == nullptr || a.spec != b.spec)
        throw std::invalid_argument("field elements from different specs");
    const FieldSpec& F = *a.spec;
    uint8_t v = 0;
    switch (kind) {
        case ArithKind::Add: v = F.add(a.value, b.value); break;
        case ArithKind::Sub: v = F.sub(a.value, b.value); break;
        case ArithKind::Mul: v = F.mul(a.value, b.value); break;
        case ArithKind::Div: v = F.div(a.value, b.value); break;
    }
    return {v, a.spec};
}

FieldElement pow_q(FieldElement a) {
    if (a.spec == nullptr) throw std::invalid_argument("element without spec");
    return {a.spec->pow_q(a.value), a.spec};
}

}  // namespace hermitian
