#include "doctest.h"

#include <cstdint>
#include <random>

#include "bigint.hpp"
#include "intfactor.hpp"
#include "intpoly.hpp"
#include "resultant.hpp"
#include "ring.hpp"

using namespace batlas;

namespace {

std::mt19937_64 rng(0xB1C0FFEEu);

long long rnd_ll(long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

}  // namespace

TEST_CASE("BigInt arithmetic against machine integers") {
    for (int iter = 0; iter < 4000; ++iter) {
        long long a = rnd_ll(-1000000000LL, 1000000000LL);
        long long b = rnd_ll(-1000000000LL, 1000000000LL);
        BigInt A(a), B(b);
        CHECK((A + B).to_ll() == a + b);
        CHECK((A - B).to_ll() == a - b);
        CHECK((A * B).to_ll() == a * b);
        if (b != 0) {
            BigInt q, r;
            BigInt::divmod(A, B, q, r);
            CHECK(q.to_ll() == a / b);
            CHECK(r.to_ll() == a % b);
        }
        CHECK(BigInt::from_string(A.to_string()) == A);
    }
}

TEST_CASE("BigInt multi-limb division identity") {
    for (int iter = 0; iter < 2000; ++iter) {
        int la = 1 + static_cast<int>(rng() % 6), lb = 1 + static_cast<int>(rng() % 4);
        BigInt a(0), b(0);
        for (int i = 0; i < la; ++i) a = a * BigInt(1LL << 32) + BigInt(static_cast<long long>(rng() & 0xffffffffULL));
        for (int i = 0; i < lb; ++i) b = b * BigInt(1LL << 32) + BigInt(static_cast<long long>(rng() & 0xffffffffULL));
        if (rng() & 1) a = -a;
        if (rng() & 1) b = -b;
        if (b.is_zero()) continue;
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        if (!r.is_zero()) CHECK(r.sign() == a.sign());
        CHECK(BigInt::from_string(a.to_string()) == a);
    }
}

TEST_CASE("BigInt gcd and pow") {
    CHECK(BigInt::gcd(BigInt(84), BigInt(-30)) == BigInt(6));
    CHECK(BigInt::pow(BigInt(3), 20) == BigInt(3486784401LL));
    CHECK(BigInt::pow(BigInt(10), 25).to_string() == "10000000000000000000000000");
}

TEST_CASE("parse_poly grammar") {
    CHECK(parse_poly("t+2") == IntPoly::from_coeffs({2, 1}));
    CHECK(parse_poly("t^4+t+1") == IntPoly::from_coeffs({1, 1, 0, 0, 1}));
    CHECK(parse_poly("0").is_zero());
    CHECK(parse_poly("2*t^3-3*t+7") == IntPoly::from_coeffs({7, -3, 0, 2}));
    CHECK(parse_poly(" - t ^ 2 + 1 ") == IntPoly::from_coeffs({1, 0, -1}));
    CHECK_THROWS_AS(parse_poly(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("t+"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("t^-1"), std::invalid_argument);
}

TEST_CASE("polynomial print/parse round trip") {
    for (int iter = 0; iter < 300; ++iter) {
        std::vector<long long> c(1 + rng() % 6);
        for (auto& v : c) v = rnd_ll(-9, 9);
        IntPoly p = IntPoly::from_coeffs(c);
        CHECK(parse_poly(p.to_string()) == p);
    }
    CHECK(parse_poly("t+2").to_string() == "t+2");
    CHECK(parse_poly("t^4+t+1").to_string() == "t^4+t+1");
    CHECK(IntPoly::from_coeffs({-1, 0, 2}).to_string() == "2*t^2-1");
}

TEST_CASE("cyclotomic values and product identity") {
    CHECK(cyclotomic(1) == IntPoly::from_coeffs({-1, 1}));
    CHECK(cyclotomic(6) == IntPoly::from_coeffs({1, -1, 1}));
    CHECK(cyclotomic(10) == IntPoly::from_coeffs({1, -1, 1, -1, 1}));
    for (unsigned n = 1; n <= 100; ++n) {
        IntPoly prod(1);
        for (unsigned d = 1; d <= n; ++d)
            if (n % d == 0) prod *= cyclotomic(d);
        std::vector<BigInt> c(n + 1);
        c[0] = BigInt(-1);
        c[n] = BigInt(1);
        CHECK(prod == IntPoly(std::move(c), 0));
    }
}

TEST_CASE("ee involution") {
    CHECK(ee_involution(2, 15) == 15);
    CHECK(ee_involution(0, 3) == 6);
    CHECK(ee_involution(0, 6) == 3);
    CHECK_THROWS_AS(ee_involution(3, 6), std::invalid_argument);
    for (uint64_t p : {0ULL, 2ULL, 3ULL, 5ULL, 7ULL, 13ULL}) {
        for (unsigned N = 1; N <= 60; ++N) {
            if (p != 0 && N % p == 0) continue;
            unsigned M = ee_involution(p, N);
            CHECK((p == 0 || M % p != 0));
            CHECK(ee_involution(p, M) == N);
        }
    }
}

TEST_CASE("multiplicative orders") {
    auto f13 = RingDescriptor::make(13, parse_poly("t+2"));  // F_13, xi = -2 = 11
    CHECK(mul_order(RingElem::one(f13)).value() == BigInt(1));

    auto f7 = RingDescriptor::make(7, parse_poly("t+5"));
    CHECK(mul_order(-RingElem::one(f7)).value() == BigInt(2));

    // Independent oracle: repeated multiplication with uint64 arithmetic.
    uint64_t x = 2, k = 1;
    while (x != 1) {
        x = x * 2 % 13;
        ++k;
    }
    CHECK(k == 12);
    CHECK(mul_order(RingElem::scalar(f13, 2)).value() == BigInt(static_cast<unsigned long long>(k)));

    CHECK(!mul_order(RingElem::zero(f13)).has_value());
    auto z12 = RingDescriptor::make(12, parse_poly("t^2+1"));
    CHECK(!mul_order(RingElem::scalar(z12, 2)).has_value());  // 2 is not a unit mod 12
}

TEST_CASE("ord(-xi) = ee_p(ord xi) on small fields") {
    for (uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
        auto ring = RingDescriptor::make(p, parse_poly("t^2+" + std::to_string(p - 1) + "*t+1"));
        // scan all scalars and, when the reducer is irreducible, the class of t
        for (uint64_t a = 2; a + 1 < p; ++a) {
            RingElem x = RingElem::scalar(ring, a);
            auto M = mul_order(x);
            auto N = mul_order(-x);
            REQUIRE(M.has_value());
            REQUIRE(N.has_value());
            unsigned m = static_cast<unsigned>(M->to_ll());
            unsigned n = static_cast<unsigned>(N->to_ll());
            CHECK(ee_involution(p, m) == n);
        }
    }
}

TEST_CASE("factor_mod_p on known inputs") {
    // (t^2+t+1, 7): root-scan oracle over F_7
    std::vector<uint64_t> roots;
    for (uint64_t x = 0; x < 7; ++x)
        if ((x * x + x + 1) % 7 == 0) roots.push_back(x);
    REQUIRE(roots == std::vector<uint64_t>{2, 4});
    auto fac = factor_mod_p(parse_poly("t^2+t+1"), 7);
    REQUIRE(fac.factors.size() == 2);
    CHECK(fac.factors[0].factor == (ModPoly{7, {3, 1}}));  // t - 4
    CHECK(fac.factors[1].factor == (ModPoly{7, {5, 1}}));  // t - 2
    CHECK(fac.factors[0].multiplicity == 1);

    auto fac2 = factor_mod_p(parse_poly("t^4+t+1"), 2);
    REQUIRE(fac2.factors.size() == 1);
    CHECK(fac2.factors[0].multiplicity == 1);
    CHECK(fac2.factors[0].factor.deg() == 4);
    CHECK(irreducible_mod_p(ModPoly::from_intpoly(parse_poly("t^4+t+1"), 2)));

    auto fac3 = factor_mod_p(parse_poly("t-1"), 5);
    REQUIRE(fac3.factors.size() == 1);
    CHECK(fac3.factors[0].factor == (ModPoly{5, {4, 1}}));

    CHECK_THROWS_AS(factor_mod_p(parse_poly("7*t^2+7"), 7), std::domain_error);
}

TEST_CASE("factor_mod_p reassembly and small irreducibility scan") {
    for (uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 13ULL}) {
        for (int iter = 0; iter < 60; ++iter) {
            std::vector<uint64_t> c(2 + rng() % 6);
            for (auto& v : c) v = rng() % p;
            ModPoly f{p, c};
            f.trim();
            if (f.deg() < 1) continue;
            auto fac = factor_mod_p(f);
            ModPoly prod = ModPoly::constant(p, fac.unit);
            for (auto& [g, mult] : fac.factors) {
                CHECK(g.monic());
                for (unsigned i = 0; i < mult; ++i) prod = prod * g;
                // exhaustive divisor scan certifies irreducibility for deg <= 3
                if (g.deg() >= 2 && g.deg() <= 3) {
                    for (uint64_t a0 = 0; a0 < p; ++a0) {
                        ModPoly lin{p, {a0, 1}};
                        CHECK(!mp_mod(g, lin).is_zero());
                    }
                }
            }
            CHECK(prod == f);
        }
    }
}

TEST_CASE("resultant values and sign convention") {
    CHECK(resultant_int(parse_poly("t-2"), parse_poly("t-5")) == BigInt(3));

    // Res_lambda(lambda - 1, lambda^2 + (xi^2-xi+1) lambda + xi^2) = 2 xi^2 - xi + 2
    std::vector<IntPoly> f = {IntPoly(-1), IntPoly(1)};
    std::vector<IntPoly> chi = {parse_poly("t^2"), parse_poly("t^2-t+1"), IntPoly(1)};
    CHECK(resultant_poly(f, chi) == parse_poly("2*t^2-t+2"));

    CHECK_THROWS_AS(resultant_int(IntPoly(3), IntPoly(4)), std::domain_error);
    CHECK_THROWS_AS(resultant_int(IntPoly(), parse_poly("t")), std::domain_error);
}

TEST_CASE("resultant vanishes exactly on common factors") {
    for (int iter = 0; iter < 200; ++iter) {
        // f, g split over Z with controlled root sets
        int nf = 1 + static_cast<int>(rng() % 3), ng = 1 + static_cast<int>(rng() % 3);
        std::vector<long long> ra, rb;
        IntPoly f(1), g(1);
        for (int i = 0; i < nf; ++i) {
            long long a = rnd_ll(-6, 6);
            ra.push_back(a);
            f *= IntPoly::from_coeffs({-a, 1});
        }
        for (int i = 0; i < ng; ++i) {
            long long b = rnd_ll(-6, 6);
            rb.push_back(b);
            g *= IntPoly::from_coeffs({-b, 1});
        }
        bool share = false;
        BigInt expected(1);
        for (long long a : ra)
            for (long long b : rb) {
                share = share || a == b;
                expected *= BigInt(b - a);
            }
        BigInt r = resultant_int(f, g);
        CHECK(r == expected);
        CHECK(r.is_zero() == share);
    }
}

TEST_CASE("factor_integer on known inputs") {
    auto f12 = factor_integer(BigInt(12));
    REQUIRE(f12.primes.size() == 2);
    CHECK(f12.primes[0] == std::pair<BigInt, unsigned>(BigInt(2), 2u));
    CHECK(f12.primes[1] == std::pair<BigInt, unsigned>(BigInt(3), 1u));
    CHECK(f12.complete());

    auto f211 = factor_integer(BigInt(211));
    REQUIRE(f211.primes.size() == 1);
    CHECK(f211.primes[0].first == BigInt(211));

    CHECK(factor_integer(BigInt(1)).primes.empty());
    CHECK(factor_integer(BigInt(-30)).sign == -1);
    CHECK_THROWS_AS(factor_integer(BigInt(0)), std::domain_error);

    auto big = factor_integer(BigInt(600851475143LL));
    REQUIRE(big.primes.size() == 4);
    CHECK(big.primes[0].first == BigInt(71));
    CHECK(big.primes[3].first == BigInt(6857));

    // beyond the trial bound: product of two 9-digit primes, found by rho
    BigInt n = BigInt(1000000007LL) * BigInt(1000000009LL);
    auto semi = factor_integer(n);
    REQUIRE(semi.primes.size() == 2);
    CHECK(semi.primes[0].first == BigInt(1000000007LL));
    CHECK(semi.primes[1].first == BigInt(1000000009LL));
}

TEST_CASE("ring element canonical form and inverse") {
    auto f13 = RingDescriptor::make(13, parse_poly("t+2"));
    CHECK(f13->is_field());
    CHECK(f13->deg() == 1);
    RingElem xi = RingElem::t_class(f13);
    CHECK(xi == RingElem::scalar(f13, 11));  // t = -2 = 11 mod 13
    CHECK((xi * xi.inverse()).is_one());

    auto f4 = RingDescriptor::make(2, parse_poly("t^2+t+1"));
    CHECK(f4->is_field());
    RingElem w = RingElem::t_class(f4);
    CHECK(order_is_exactly(w, 3));
    CHECK(!order_is_exactly(w, 2));
    CHECK((w.pow(3LL)).is_one());
    CHECK(w.pow(-1LL) == w * w);

    auto z9 = RingDescriptor::make(9, parse_poly("t-1"));
    CHECK(!z9->is_field());
    RingElem two = RingElem::scalar(z9, 2);
    CHECK((two * two.inverse()).is_one());
    CHECK(!RingElem::scalar(z9, 3).try_inverse().has_value());
}

TEST_CASE("laurent polynomials") {
    IntPoly tinv = IntPoly::t_power(-1);
    CHECK(tinv.is_laurent());
    CHECK((tinv * IntPoly::t_power(1)) == IntPoly(1));
    CHECK(IntPoly::gauss_sum(3) == IntPoly::from_coeffs({1, 1, 1}));
    CHECK(IntPoly::gauss_sum(-1) == IntPoly::from_coeffs({-1}, -1));
    // f_m identity (t - 1) f_m = t^m - 1 for m in [-5, 5]
    for (long m = -5; m <= 5; ++m) {
        IntPoly lhs = IntPoly::from_coeffs({-1, 1}) * IntPoly::gauss_sum(m);
        IntPoly rhs = IntPoly::t_power(m) - IntPoly(1);
        CHECK(lhs == rhs);
    }
}
