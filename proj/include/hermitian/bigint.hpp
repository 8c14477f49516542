#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hermitian {

/// Small signed arbitrary-precision integer, enough for MacWilliams
/// transforms of length-64 codes (weight counts overflow 64 bits there).
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);

    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    bool operator==(const BigInt& o) const { return sign_ == o.sign_ && mag_ == o.mag_; }
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    bool operator<(const BigInt& o) const;

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }

    /// Exact division by a small positive divisor; throws if not exact.
    BigInt div_exact(uint32_t d) const;

    std::string to_string() const;
    static BigInt from_string(const std::string& s);
    static BigInt pow(const BigInt& base, long e);

private:
    int sign_ = 0;                // -1, 0, +1
    std::vector<uint32_t> mag_;   // little-endian base 2^32, no leading zeros

    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b);
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b);
    void normalize();
};

}  // namespace hermitian
