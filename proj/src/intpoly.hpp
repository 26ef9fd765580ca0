#pragma once

#include <string>
#include <vector>

#include "bigint.hpp"

namespace batlas {

// Polynomial over Z in one variable t, with an optional negative shift making it
// a Laurent polynomial. Coefficients ascending by exponent, starting at low_exp.
// Canonical form: first and last stored coefficients nonzero; zero polynomial is
// the empty list with low_exp == 0.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(const BigInt& c);
    explicit IntPoly(long long c) : IntPoly(BigInt(c)) {}
    IntPoly(std::vector<BigInt> coeffs, long low_exp);

    static IntPoly t_power(long k);                       // t^k
    static IntPoly from_coeffs(std::vector<long long> ascending, long low_exp = 0);
    // f_m(t) = (t^m - 1)/(t - 1) for any integer m (Laurent when m < 0).
    static IntPoly gauss_sum(long m);

    bool is_zero() const { return coeffs_.empty(); }
    long low_exp() const { return low_exp_; }
    long degree() const;  // exponent of the leading term; throws on the zero polynomial
    bool is_laurent() const { return low_exp_ < 0; }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    BigInt coeff(long exponent) const;
    const BigInt& leading() const;

    IntPoly operator-() const;
    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly& operator+=(const IntPoly& b) { *this = *this + b; return *this; }
    IntPoly& operator-=(const IntPoly& b) { *this = *this - b; return *this; }
    IntPoly& operator*=(const IntPoly& b) { *this = *this * b; return *this; }
    friend bool operator==(const IntPoly& a, const IntPoly& b);
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

    IntPoly shifted(long k) const;  // multiply by t^k

    // Division for ordinary polynomials (low_exp >= 0 on both sides). Every
    // leading-coefficient division must be exact over Z; throws otherwise.
    static void divmod(const IntPoly& a, const IntPoly& b, IntPoly& q, IntPoly& r);
    IntPoly divexact(const IntPoly& b) const;

    IntPoly substitute_neg_t() const;       // p(-t)
    BigInt eval(const BigInt& x) const;     // requires low_exp >= 0
    BigInt content() const;

    std::vector<uint64_t> reduce_mod(uint64_t m) const;  // requires low_exp >= 0

    std::string to_string() const;  // canonical: descending exponents, explicit signs

private:
    void trim();
    std::vector<BigInt> coeffs_;
    long low_exp_ = 0;
};

// Parses the grammar  term (('+'|'-') term)*,  term = [int]['*']['t'['^'int]],
// exponents >= 0. Throws std::invalid_argument with a position on bad input.
IntPoly parse_poly(const std::string& text);

// Cyclotomic polynomial of order n, by exact division of t^n - 1.
IntPoly cyclotomic(unsigned n);

}  // namespace batlas
