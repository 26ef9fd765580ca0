#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace batlas {

// Arbitrary-precision signed integer. 32-bit limbs, little-endian.
// Canonical form: no leading zero limbs, sign == 0 iff the limb vector is empty.
class BigInt {
public:
    BigInt() = default;
    BigInt(int v) : BigInt(static_cast<long long>(v)) {}
    BigInt(long v) : BigInt(static_cast<long long>(v)) {}
    BigInt(long long v);
    BigInt(unsigned long long v);

    static BigInt from_string(const std::string& s);

    bool is_zero() const { return sign_ == 0; }
    bool is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }
    int sign() const { return sign_; }
    bool odd() const { return sign_ != 0 && (mag_[0] & 1u); }

    bool fits_u64() const { return mag_.size() <= 2; }
    uint64_t abs_u64() const;  // |value|; requires fits_u64()
    long long to_ll() const;   // requires |value| < 2^63
    size_t bit_length() const;

    BigInt operator-() const;
    BigInt abs() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    BigInt& operator+=(const BigInt& b) { *this = *this + b; return *this; }
    BigInt& operator-=(const BigInt& b) { *this = *this - b; return *this; }
    BigInt& operator*=(const BigInt& b) { *this = *this * b; return *this; }

    // Truncated division: q rounded toward zero, r has the sign of a; a = q*b + r.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    BigInt operator/(const BigInt& b) const;
    BigInt operator%(const BigInt& b) const;

    // Division known to be exact; throws std::domain_error on a nonzero remainder.
    BigInt divexact(const BigInt& b) const;

    uint32_t mod_u32(uint32_t m) const;  // |value| mod m
    bool divisible_u32(uint32_t m) const { return mod_u32(m) == 0; }

    static BigInt gcd(BigInt a, BigInt b);
    static BigInt pow(BigInt base, uint64_t e);

    static int cmp(const BigInt& a, const BigInt& b);
    friend bool operator==(const BigInt& a, const BigInt& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return cmp(a, b) != 0; }
    friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return cmp(a, b) >= 0; }

    std::string to_string() const;

private:
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r);
    void trim();

    int sign_ = 0;
    std::vector<uint32_t> mag_;
};

// Modular arithmetic on uint64 values (modulus < 2^63).
uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m);
uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m);
uint64_t gcd_u64(uint64_t a, uint64_t b);
uint64_t invmod_u64(uint64_t a, uint64_t m);  // throws std::domain_error if not invertible
bool is_prime_u64(uint64_t n);                // deterministic Miller-Rabin

}  // namespace batlas
