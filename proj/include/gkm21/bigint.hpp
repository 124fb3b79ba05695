#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gkm21 {

// Arbitrary-precision signed integer, sign-magnitude with 32-bit limbs.
// Covers exactly what the lattice reductions need: +, -, *, exact and
// truncated division, comparisons, decimal rendering.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }

    BigInt operator-() const;
    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;

    // Truncated quotient/remainder (C semantics: remainder has dividend sign).
    static void divmod(const BigInt& num, const BigInt& den, BigInt& q, BigInt& r);
    BigInt operator/(const BigInt& o) const;
    BigInt operator%(const BigInt& o) const;

    // Division known to be exact; throws if a remainder shows up.
    BigInt exact_div(const BigInt& o) const;

    BigInt abs() const;

    bool operator==(const BigInt& o) const;
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    bool operator<(const BigInt& o) const;
    bool operator<=(const BigInt& o) const { return *this < o || *this == o; }
    bool operator>(const BigInt& o) const { return !(*this <= o); }
    bool operator>=(const BigInt& o) const { return !(*this < o); }

    // |this| < |o|
    bool abs_less(const BigInt& o) const;

    bool fits_int64() const;
    long long to_int64() const;  // throws when out of range

    std::string to_string() const;

private:
    int sign_ = 0;                   // -1, 0, +1
    std::vector<uint32_t> mag_;      // little-endian limbs, no leading zeros

    void trim();
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
};

}  // namespace gkm21
