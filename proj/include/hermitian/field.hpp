#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace hermitian {

/// Arithmetic tables for GF(p^m) with a fixed modulus polynomial.
///
/// The supported fields are the GF(q^2) needed by the Hermitian curve,
/// q in {2,3,4,5,7,8,9}.  Elements are integer codes in [0, p^m): the
/// base-p digits of a code, little-endian, are the coefficients of the
/// residue polynomial.  The encoding is bijective and used verbatim in
/// all CSV/JSON output, so matrices are bit-exact across runs.
///
/// One modulus polynomial is fixed per field (the Conway polynomial);
/// see field.cpp for the table.  The class of t is primitive for every
/// modulus in the table, and is the stored generator.
class FieldSpec {
public:
    int p;                      // characteristic
    int m;                      // extension degree over GF(p), even
    int q;                      // subfield order, q*q == p^m
    int size;                   // p^m
    std::vector<int> modulus;   // monic irreducible, coeff of t^i at index i
    uint8_t generator;          // code of a primitive element (the class of t)

    FieldSpec(int p, int m, int q, std::vector<int> modulus);

    uint8_t add(uint8_t a, uint8_t b) const { return add_[a * size + b]; }
    uint8_t sub(uint8_t a, uint8_t b) const { return sub_[a * size + b]; }
    uint8_t mul(uint8_t a, uint8_t b) const { return mul_[a * size + b]; }
    uint8_t neg(uint8_t a) const { return sub_[a]; }  // 0 - a
    uint8_t inv(uint8_t a) const;
    uint8_t div(uint8_t a, uint8_t b) const;
    uint8_t pow_q(uint8_t a) const { return pow_q_[a]; }
    uint8_t pow(uint8_t a, long e) const;

    /// Multiplicative order of a nonzero element.
    long element_order(uint8_t a) const;

private:
    std::vector<uint8_t> add_, sub_, mul_, inv_, pow_q_;
    std::vector<int> log_;       // log_[code] for code != 0
    std::vector<uint8_t> alog_;  // alog_[k] = generator^k, k in [0, size-1)
};

/// Returns the cached spec for GF(q^2).  Rejects q outside the supported
/// prime-power list {2,3,4,5,7,8,9}.
const FieldSpec& field_make(int q);

struct FieldElement {
    uint8_t value = 0;
    const FieldSpec* spec = nullptr;
};

enum class ArithKind { Add, Sub, Mul, Div };

FieldElement arith(FieldElement a, FieldElement b, ArithKind kind);
FieldElement pow_q(FieldElement a);

}  // namespace hermitian
