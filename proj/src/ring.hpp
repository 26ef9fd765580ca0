#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "intpoly.hpp"

namespace batlas {

// Polynomials over Z/m, coefficients in 0..m-1, ascending, no leading zeros.
// Most routines require m prime (noted per function); m must be < 2^63.
struct ModPoly {
    uint64_t m = 0;
    std::vector<uint64_t> c;

    bool is_zero() const { return c.empty(); }
    long deg() const { return static_cast<long>(c.size()) - 1; }  // -1 for zero
    uint64_t lead() const { return c.back(); }
    bool monic() const { return !c.empty() && c.back() == 1; }
    void trim();

    static ModPoly zero(uint64_t m) { return ModPoly{m, {}}; }
    static ModPoly constant(uint64_t m, uint64_t v);
    static ModPoly t(uint64_t m) { return ModPoly{m, {0, 1}}; }
    static ModPoly from_intpoly(const IntPoly& p, uint64_t m);

    ModPoly divexact_by(const ModPoly& b) const;  // throws on a nonzero remainder

    IntPoly to_intpoly() const;
    std::string to_string() const;
};

bool operator==(const ModPoly& a, const ModPoly& b);
ModPoly operator+(const ModPoly& a, const ModPoly& b);
ModPoly operator-(const ModPoly& a, const ModPoly& b);
ModPoly operator*(const ModPoly& a, const ModPoly& b);
ModPoly mp_scale(const ModPoly& a, uint64_t k);
// Euclidean division; the divisor's leading coefficient must be invertible mod m.
void mp_divmod(const ModPoly& a, const ModPoly& b, ModPoly& q, ModPoly& r);
ModPoly mp_mod(const ModPoly& a, const ModPoly& b);
ModPoly mp_gcd(ModPoly a, ModPoly b);                       // monic gcd; m prime
ModPoly mp_powmod(ModPoly base, const BigInt& e, const ModPoly& f);
ModPoly mp_make_monic(const ModPoly& a);                    // m prime
ModPoly mp_derivative(const ModPoly& a);

bool irreducible_mod_p(const ModPoly& f);                   // p prime

// Complete factorization over F_p: squarefree split, then distinct-degree and
// equal-degree splitting with a deterministic seed. Returns monic factors with
// multiplicities, plus the leading unit.
struct ModFactor {
    ModPoly factor;
    unsigned multiplicity;
};
struct ModFactorization {
    uint64_t unit;  // leading coefficient of the input
    std::vector<ModFactor> factors;
};
ModFactorization factor_mod_p(const ModPoly& f);
ModFactorization factor_mod_p(const IntPoly& f, uint64_t p);

// Quotient ring R = (Z/m)[t]/f with f monic of degree >= 1.
// is_field holds iff m is prime and f is irreducible over F_m.
class RingDescriptor {
public:
    RingDescriptor(uint64_t modulus, ModPoly reducer);
    static std::shared_ptr<const RingDescriptor> make(uint64_t modulus, const IntPoly& reducer);
    static std::shared_ptr<const RingDescriptor> make(uint64_t modulus, ModPoly reducer);

    uint64_t modulus() const { return m_; }
    const ModPoly& reducer() const { return f_; }
    unsigned deg() const { return static_cast<unsigned>(f_.c.size()) - 1; }
    bool is_field() const { return is_field_; }
    BigInt size() const;  // m^deg

private:
    uint64_t m_;
    ModPoly f_;
    bool is_field_;
};

using RingPtr = std::shared_ptr<const RingDescriptor>;

// Element of a quotient ring, stored reduced mod (m, f). Equality is
// coefficientwise; ordering is lexicographic on (c0, ..., c_{deg f - 1}).
class RingElem {
public:
    RingElem() = default;
    RingElem(RingPtr ring, std::vector<uint64_t> residue);

    static RingElem zero(const RingPtr& ring);
    static RingElem one(const RingPtr& ring);
    static RingElem scalar(const RingPtr& ring, uint64_t v);
    static RingElem t_class(const RingPtr& ring);  // the class of t
    static RingElem from_intpoly(const RingPtr& ring, const IntPoly& p);  // Laurent allowed if t invertible

    const RingPtr& ring() const { return ring_; }
    const std::vector<uint64_t>& value() const { return v_; }
    bool is_zero() const;
    bool is_one() const;

    friend RingElem operator+(const RingElem& a, const RingElem& b);
    friend RingElem operator-(const RingElem& a, const RingElem& b);
    friend RingElem operator*(const RingElem& a, const RingElem& b);
    RingElem operator-() const;
    friend bool operator==(const RingElem& a, const RingElem& b) { return a.v_ == b.v_; }
    friend bool operator!=(const RingElem& a, const RingElem& b) { return !(a == b); }
    friend bool operator<(const RingElem& a, const RingElem& b) { return a.v_ < b.v_; }

    RingElem pow(const BigInt& e) const;
    RingElem pow(long long e) const;  // negative exponents via inverse
    std::optional<RingElem> try_inverse() const;
    RingElem inverse() const;  // throws std::domain_error if not a unit

    std::string to_string() const;

private:
    void reduce();
    RingPtr ring_;
    std::vector<uint64_t> v_;  // size deg f, coefficients in 0..m-1
};

// The involution exchanging ord(xi) and ord(-xi): ee_2(N) = N; for p != 2 (or
// p == 0): 2N if N odd, N/2 if N == 2 mod 4, N if N == 0 mod 4.
// Requires p = 0 or prime, p not dividing N.
unsigned ee_involution(uint64_t p, unsigned N);

// Least k >= 1 with x^k = 1, by repeated multiplication bounded by the unit
// group size (empty optional when x is not a unit / order not found).
std::optional<BigInt> mul_order(const RingElem& x);
// True iff the order of x is exactly n (cheap divisor check).
bool order_is_exactly(const RingElem& x, unsigned n);

}  // namespace batlas
