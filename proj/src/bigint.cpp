#include "hermitian/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace hermitian {

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    unsigned long long u = v < 0 ? -static_cast<unsigned long long>(v) : v;
    while (u) {
        mag_.push_back(static_cast<uint32_t>(u & 0xffffffffull));
        u >>= 32;
    }
}

void BigInt::normalize() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r(std::max(a.size(), b.size()) + 1, 0);
    unsigned long long carry = 0;
    for (size_t i = 0; i < r.size(); ++i) {
        unsigned long long s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        r[i] = static_cast<uint32_t>(s & 0xffffffffull);
        carry = s >> 32;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
    // requires |a| >= |b|
    std::vector<uint32_t> r = a;
    long long borrow = 0;
    for (size_t i = 0; i < r.size(); ++i) {
        long long s = static_cast<long long>(r[i]) - borrow - (i < b.size() ? b[i] : 0);
        borrow = 0;
        if (s < 0) {
            s += 1ll << 32;
            borrow = 1;
        }
        r[i] = static_cast<uint32_t>(s);
    }
    if (borrow) throw std::logic_error("sub_mag underflow");
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    if (sign_ == 0) return o;
    if (o.sign_ == 0) return *this;
    BigInt r;
    if (sign_ == o.sign_) {
        r.sign_ = sign_;
        r.mag_ = add_mag(mag_, o.mag_);
    } else {
        const int c = cmp_mag(mag_, o.mag_);
        if (c == 0) return BigInt();
        if (c > 0) {
            r.sign_ = sign_;
            r.mag_ = sub_mag(mag_, o.mag_);
        } else {
            r.sign_ = o.sign_;
            r.mag_ = sub_mag(o.mag_, mag_);
        }
    }
    r.normalize();
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const {
    BigInt n = o;
    n.sign_ = -n.sign_;
    return *this + n;
}

BigInt BigInt::operator*(const BigInt& o) const {
    if (sign_ == 0 || o.sign_ == 0) return BigInt();
    BigInt r;
    r.sign_ = sign_ * o.sign_;
    r.mag_.assign(mag_.size() + o.mag_.size(), 0);
    for (size_t i = 0; i < mag_.size(); ++i) {
        unsigned long long carry = 0;
        for (size_t j = 0; j < o.mag_.size(); ++j) {
            unsigned long long cur = r.mag_[i + j] +
                                     static_cast<unsigned long long>(mag_[i]) * o.mag_[j] +
                                     carry;
            r.mag_[i + j] = static_cast<uint32_t>(cur & 0xffffffffull);
            carry = cur >> 32;
        }
        size_t k = i + o.mag_.size();
        while (carry) {
            unsigned long long cur = r.mag_[k] + carry;
            r.mag_[k] = static_cast<uint32_t>(cur & 0xffffffffull);
            carry = cur >> 32;
            ++k;
        }
    }
    r.normalize();
    return r;
}

bool BigInt::operator<(const BigInt& o) const {
    if (sign_ != o.sign_) return sign_ < o.sign_;
    const int c = cmp_mag(mag_, o.mag_);
    return sign_ >= 0 ? c < 0 : c > 0;
}

BigInt BigInt::div_exact(uint32_t d) const {
    if (d == 0) throw std::invalid_argument("division by zero");
    BigInt r;
    r.sign_ = sign_;
    r.mag_.assign(mag_.size(), 0);
    unsigned long long rem = 0;
    for (size_t i = mag_.size(); i-- > 0;) {
        unsigned long long cur = (rem << 32) | mag_[i];
        r.mag_[i] = static_cast<uint32_t>(cur / d);
        rem = cur % d;
    }
    if (rem != 0) throw std::logic_error("div_exact: remainder");
    r.normalize();
    return r;
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    std::vector<uint32_t> work = mag_;
    std::string digits;
    while (!work.empty()) {
        unsigned long long rem = 0;
        for (size_t i = work.size(); i-- > 0;) {
            unsigned long long cur = (rem << 32) | work[i];
            work[i] = static_cast<uint32_t>(cur / 1000000000ull);
            rem = cur % 1000000000ull;
        }
        while (!work.empty() && work.back() == 0) work.pop_back();
        for (int k = 0; k < 9; ++k) {
            digits.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

BigInt BigInt::from_string(const std::string& s) {
    BigInt r;
    size_t i = 0;
    int sign = 1;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
        if (s[i] == '-') sign = -1;
        ++i;
    }
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad integer string");
        r = r * BigInt(10) + BigInt(s[i] - '0');
    }
    if (!r.is_zero() && sign < 0) r.sign_ = -1;
    return r;
}

BigInt BigInt::pow(const BigInt& base, long e) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    BigInt r(1), b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

}  // namespace hermitian
