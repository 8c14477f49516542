#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "hermitian/field.hpp"

namespace hermitian {

/// Dense matrix over GF(q^2); entries are field-element codes.
struct GFMatrix {
    long rows = 0;
    long cols = 0;
    std::vector<uint8_t> a;

    GFMatrix() = default;
    GFMatrix(long r, long c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    uint8_t& at(long r, long c) { return a[static_cast<size_t>(r) * cols + c]; }
    uint8_t at(long r, long c) const { return a[static_cast<size_t>(r) * cols + c]; }

    static GFMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows_);
};

/// Reduced row echelon form; zero rows dropped.  Deterministic.
GFMatrix rref(const GFMatrix& m, const FieldSpec& F);

long rank(const GFMatrix& m, const FieldSpec& F);

/// RREF basis of the right null space {v : m v = 0}.
GFMatrix nullspace(const GFMatrix& m, const FieldSpec& F);

/// true iff every row of a is orthogonal to every row of b.
bool rows_orthogonal(const GFMatrix& a, const GFMatrix& b, const FieldSpec& F);

/// Row-space equality, tested via identical RREFs.
bool same_row_space(const GFMatrix& a, const GFMatrix& b, const FieldSpec& F);

/// true iff the row space of sub is contained in the row space of sup.
bool row_space_contains(const GFMatrix& sup, const GFMatrix& sub, const FieldSpec& F);

GFMatrix vstack(const GFMatrix& a, const GFMatrix& b);

GFMatrix delete_column(const GFMatrix& m, long col);

}  // namespace hermitian
