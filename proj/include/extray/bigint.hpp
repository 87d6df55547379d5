#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace extray {

// Signed arbitrary-precision integer, little-endian base 2^32 magnitude.
// Small enough to audit, big enough for angle denominators up to 4^16 and
// the exact critical-orbit polynomial coefficients used by the test oracles.
class BigInt {
public:
    BigInt() = default;
    BigInt(std::int64_t v);

    static BigInt pow(std::int64_t base, unsigned exp);

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }
    bool is_odd() const { return sign_ != 0 && (mag_[0] & 1u); }

    BigInt operator-() const;
    BigInt abs() const;

    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    BigInt operator/(const BigInt& o) const;  // truncated toward zero
    BigInt operator%(const BigInt& o) const;  // sign follows dividend

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    // quotient truncated toward zero, remainder with dividend's sign
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

    // canonical representative of a mod m in [0, m), m > 0
    static BigInt mod_floor(const BigInt& a, const BigInt& m);

    static BigInt gcd(BigInt a, BigInt b);

    bool operator==(const BigInt& o) const { return sign_ == o.sign_ && mag_ == o.mag_; }
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    bool operator<(const BigInt& o) const { return cmp(o) < 0; }
    bool operator<=(const BigInt& o) const { return cmp(o) <= 0; }
    bool operator>(const BigInt& o) const { return cmp(o) > 0; }
    bool operator>=(const BigInt& o) const { return cmp(o) >= 0; }

    int cmp(const BigInt& o) const;

    bool fits_int64() const;
    std::int64_t to_int64() const;  // throws std::overflow_error if out of range
    double to_double() const;
    std::string to_string() const;

private:
    int sign_ = 0;                   // -1, 0, +1
    std::vector<std::uint32_t> mag_; // no trailing zero limbs; empty iff sign_==0

    void trim();
    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
};

}  // namespace extray
