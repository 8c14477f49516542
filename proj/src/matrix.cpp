#include "hermitian/matrix.hpp"

#include <stdexcept>

namespace hermitian {

GFMatrix GFMatrix::from_rows(std::initializer_list<std::initializer_list<int>> rows_) {
    GFMatrix m;
    m.rows = static_cast<long>(rows_.size());
    m.cols = m.rows ? static_cast<long>(rows_.begin()->size()) : 0;
    m.a.reserve(m.rows * m.cols);
    for (const auto& r : rows_) {
        if (static_cast<long>(r.size()) != m.cols)
            throw std::invalid_argument("ragged rows");
        for (int v : r) m.a.push_back(static_cast<uint8_t>(v));
    }
    return m;
}

GFMatrix rref(const GFMatrix& m, const FieldSpec& F) {
    GFMatrix w = m;
    long pr = 0;  // pivot row
    for (long c = 0; c < w.cols && pr < w.rows; ++c) {
        long sel = -1;
        for (long r = pr; r < w.rows; ++r)
            if (w.at(r, c) != 0) { sel = r; break; }
        if (sel < 0) continue;
        if (sel != pr)
            for (long j = 0; j < w.cols; ++j) std::swap(w.at(sel, j), w.at(pr, j));
        const uint8_t piv = w.at(pr, c);
        if (piv != 1) {
            const uint8_t ip = F.inv(piv);
            for (long j = c; j < w.cols; ++j) w.at(pr, j) = F.mul(w.at(pr, j), ip);
        }
        for (long r = 0; r < w.rows; ++r) {
            if (r == pr) continue;
            const uint8_t f = w.at(r, c);
            if (f == 0) continue;
            for (long j = c; j < w.cols; ++j)
                w.at(r, j) = F.sub(w.at(r, j), F.mul(f, w.at(pr, j)));
        }
        ++pr;
    }
    w.a.resize(static_cast<size_t>(pr) * w.cols);
    w.rows = pr;
    return w;
}

long rank(const GFMatrix& m, const FieldSpec& F) { return rref(m, F).rows; }

GFMatrix nullspace(const GFMatrix& m, const FieldSpec& F) {
    const GFMatrix r = rref(m, F);
    std::vector<long> pivot_col(r.rows, -1);
    std::vector<bool> is_pivot(m.cols, false);
    for (long i = 0; i < r.rows; ++i) {
        long c = 0;
        while (c < r.cols && r.at(i, c) == 0) ++c;
        pivot_col[i] = c;
        if (c < r.cols) is_pivot[c] = true;
    }
    GFMatrix ker(m.cols - r.rows, m.cols);
    long kr = 0;
    for (long f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        ker.at(kr, f) = 1;
        for (long i = 0; i < r.rows; ++i)
            ker.at(kr, pivot_col[i]) = F.neg(r.at(i, f));
        ++kr;
    }
    return rref(ker, F);
}

bool rows_orthogonal(const GFMatrix& a, const GFMatrix& b, const FieldSpec& F) {
    if (a.cols != b.cols) throw std::invalid_argument("length mismatch");
    for (long i = 0; i < a.rows; ++i)
        for (long j = 0; j < b.rows; ++j) {
            uint8_t s = 0;
            for (long c = 0; c < a.cols; ++c)
                s = F.add(s, F.mul(a.at(i, c), b.at(j, c)));
            if (s != 0) return false;
        }
    return true;
}

bool same_row_space(const GFMatrix& a, const GFMatrix& b, const FieldSpec& F) {
    const GFMatrix ra = rref(a, F), rb = rref(b, F);
    return ra.rows == rb.rows && ra.cols == rb.cols && ra.a == rb.a;
}

bool row_space_contains(const GFMatrix& sup, const GFMatrix& sub, const FieldSpec& F) {
    const long rs = rank(sup, F);
    return rank(vstack(sup, sub), F) == rs;
}

GFMatrix vstack(const GFMatrix& a, const GFMatrix& b) {
    if (a.rows == 0) return b;
    if (b.rows == 0) return a;
    if (a.cols != b.cols) throw std::invalid_argument("length mismatch");
    GFMatrix m(a.rows + b.rows, a.cols);
    std::copy(a.a.begin(), a.a.end(), m.a.begin());
    std::copy(b.a.begin(), b.a.end(), m.a.begin() + a.a.size());
    return m;
}

GFMatrix delete_column(const GFMatrix& m, long col) {
    if (col < 0 || col >= m.cols) throw std::invalid_argument("bad column");
    GFMatrix out(m.rows, m.cols - 1);
    for (long r = 0; r < m.rows; ++r)
        for (long c = 0, oc = 0; c < m.cols; ++c) {
            if (c == col) continue;
            out.at(r, oc++) = m.at(r, c);
        }
    return out;
}

}  // namespace hermitian
