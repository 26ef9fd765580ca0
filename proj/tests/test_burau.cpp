#include "doctest.h"

#include <random>

#include "burau.hpp"

using namespace batlas;

namespace {

std::mt19937_64 rng(0x5eedULL);

BraidWord random_word(int max_len, bool with_twist = false) {
    BraidWord w;
    int len = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_len));
    for (int i = 0; i < len; ++i) {
        int gen = 1 + static_cast<int>(rng() % 2);
        long exp = static_cast<long>(rng() % 5) - 2;
        if (exp == 0) exp = 1;
        w = w * BraidWord::sigma(gen, exp);
    }
    if (with_twist && (rng() % 2)) w = w * BraidWord::twist(static_cast<long>(rng() % 7) - 3);
    return w;
}

IntPoly neg_t_pow(long m) {
    IntPoly p = IntPoly::t_power(m);
    return (m % 2 + 2) % 2 == 0 ? p : -p;
}

}  // namespace

TEST_CASE("generator matrices match the displayed forms") {
    BurauMat s1 = burau_of_word(BraidWord::sigma(1));
    CHECK(s1.at(0, 0) == parse_poly("0-t"));
    CHECK(s1.at(0, 1) == IntPoly(1));
    CHECK(s1.at(1, 0) == IntPoly());
    CHECK(s1.at(1, 1) == IntPoly(1));
    CHECK(s1.bdeg == 1);

    BurauMat s2 = burau_of_word(BraidWord::sigma(2));
    CHECK(s2.at(0, 0) == IntPoly(1));
    CHECK(s2.at(0, 1) == IntPoly());
    CHECK(s2.at(1, 0) == parse_poly("t"));
    CHECK(s2.at(1, 1) == parse_poly("0-t"));

    BurauMat s2s1 = burau_of_word(BraidWord::parse("s2 s1"));
    CHECK(s2s1.at(0, 0) == parse_poly("0-t"));
    CHECK(s2s1.at(0, 1) == IntPoly(1));
    CHECK(s2s1.at(1, 0) == parse_poly("0-t^2"));
    CHECK(s2s1.at(1, 1) == IntPoly());

    BurauMat s212 = burau_of_word(BraidWord::parse("s2 s1 s2"));
    CHECK(s212.at(0, 0) == IntPoly());
    CHECK(s212.at(0, 1) == parse_poly("0-t"));
    CHECK(s212.at(1, 0) == parse_poly("0-t^2"));
    CHECK(s212.at(1, 1) == IntPoly());
    CHECK(s212.bdeg == 3);

    BurauMat s1sq = burau_of_word(BraidWord::sigma(1, 2));
    CHECK(s1sq.at(0, 0) == parse_poly("t^2"));
    CHECK(s1sq.at(0, 1) == parse_poly("1-t"));
}

TEST_CASE("braid relation") {
    CHECK(burau_of_word(BraidWord::parse("s1 s2 s1")) == burau_of_word(BraidWord::parse("s2 s1 s2")));
}

TEST_CASE("power formula against letterwise products") {
    for (int gen : {1, 2}) {
        for (long m = 0; m <= 6; ++m) {
            BraidWord repeated;
            for (long k = 0; k < m; ++k) repeated = repeated * BraidWord::sigma(gen);
            CHECK(burau_of_word(repeated) == BurauMat::generator(gen, m));
        }
        // negative powers: product of inverses
        for (long m = -4; m < 0; ++m) {
            BraidWord repeated;
            for (long k = 0; k > m; --k) repeated = repeated * BraidWord::sigma(gen, -1);
            BurauMat prod = burau_of_word(repeated);
            BurauMat closed = BurauMat::generator(gen, m);
            CHECK(prod.a == closed.a);
        }
    }
}

TEST_CASE("identity (t+1) t^r f_m(-t) + t^r (-t)^m = t^r") {
    for (long r = -3; r <= 3; ++r) {
        for (long m = 0; m <= 8; ++m) {
            IntPoly f_m = IntPoly::gauss_sum(m).substitute_neg_t();
            IntPoly lhs = parse_poly("t+1") * IntPoly::t_power(r) * f_m + IntPoly::t_power(r) * neg_t_pow(m);
            CHECK(lhs == IntPoly::t_power(r));
        }
    }
}

TEST_CASE("det equals (-t)^bdeg on random words") {
    for (int iter = 0; iter < 1000; ++iter) {
        BraidWord w = random_word(12, true);
        BurauMat m = burau_of_word(w);
        CHECK(m.bdeg == w.bdeg());
        CHECK(m.det() == neg_t_pow(m.bdeg));
    }
}

TEST_CASE("(s2 s1^2)^2 = t^3 id") {
    BurauMat m = burau_of_word(BraidWord::parse("s2 s1^2 s2 s1^2"));
    CHECK(m.at(0, 0) == parse_poly("t^3"));
    CHECK(m.at(0, 1) == IntPoly());
    CHECK(m.at(1, 0) == IntPoly());
    CHECK(m.at(1, 1) == parse_poly("t^3"));
}

TEST_CASE("(s2 s1)^3 = t^3 id and scalar twist bookkeeping") {
    BurauMat m = burau_of_word(BraidWord::parse("s2 s1 s2 s1 s2 s1"));
    BurauMat tw = burau_of_word(BraidWord::twist(3));
    CHECK(m.a == tw.a);
    CHECK(m.bdeg == tw.bdeg);  // twist t^s adds 2s to bdeg
    CHECK(tw.bdeg == 6);
}

TEST_CASE("the N=6 word identity holds in the Burau image") {
    BraidWord b1 = BraidWord::parse("s1 s2^-1");
    BraidWord b2 = BraidWord::parse("s2^-1 s1");
    BraidWord commutator = b1 * b2 * b1.inverse() * b2.inverse();
    BraidWord lhs = commutator * BraidWord::parse("s2 s1").inverse() * BraidWord::parse("s2 s1").inverse() *
                    BraidWord::parse("s2 s1").inverse();
    BraidWord rhs = BraidWord::parse("s1 s2^-6 s1^-1");
    CHECK(burau_of_word(lhs) == burau_of_word(rhs));
}

TEST_CASE("t s1^-1 s2 has the displayed matrix") {
    BurauMat m = burau_of_word(BraidWord::parse("t s1^-1 s2"));
    CHECK(m.at(0, 0) == parse_poly("t-1"));
    CHECK(m.at(0, 1) == parse_poly("0-t"));
    CHECK(m.at(1, 0) == parse_poly("t^2"));
    CHECK(m.at(1, 1) == parse_poly("0-t^2"));
    CHECK(m.bdeg == 2);
}

TEST_CASE("specialization at known points") {
    auto f13 = RingDescriptor::make(13, parse_poly("t+2"));
    RingElem xi13 = RingElem::t_class(f13);  // 11
    RingMat s1 = specialize(burau_of_word(BraidWord::sigma(1)), f13, xi13);
    CHECK(s1.at(0, 0) == RingElem::scalar(f13, 2));
    CHECK(s1.at(0, 1) == RingElem::one(f13));
    CHECK(s1.at(1, 0) == RingElem::zero(f13));
    CHECK(s1.at(1, 1) == RingElem::one(f13));

    auto f3 = RingDescriptor::make(3, parse_poly("t-1"));
    RingMat tid = specialize(burau_of_word(BraidWord::twist(1)), f3, RingElem::t_class(f3));
    CHECK(tid == RingMat::identity(f3));

    auto f7 = RingDescriptor::make(7, parse_poly("t-2"));
    RingMat s2 = specialize(burau_of_word(BraidWord::sigma(2)), f7, RingElem::t_class(f7));
    CHECK(s2.at(0, 0) == RingElem::one(f7));
    CHECK(s2.at(0, 1) == RingElem::zero(f7));
    CHECK(s2.at(1, 0) == RingElem::scalar(f7, 2));
    CHECK(s2.at(1, 1) == RingElem::scalar(f7, 5));

    CHECK_THROWS_AS(specialize(burau_of_word(BraidWord::sigma(1)),
                               RingDescriptor::make(9, parse_poly("t-3")),
                               RingElem::t_class(RingDescriptor::make(9, parse_poly("t-3")))),
                    std::domain_error);
}

TEST_CASE("specialize commutes with multiplication") {
    auto ring = RingDescriptor::make(13, parse_poly("t^2+2"));
    RingElem xi = RingElem::t_class(ring);
    for (int iter = 0; iter < 100; ++iter) {
        BraidWord u = random_word(6, true), v = random_word(6, true);
        RingMat lhs = specialize(burau_of_word(u * v), ring, xi);
        RingMat rhs = specialize(burau_of_word(u), ring, xi) * specialize(burau_of_word(v), ring, xi);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("modular projection") {
    IntMat s1 = modular_project(BraidWord::sigma(1));
    CHECK(s1.a == std::array<BigInt, 4>{BigInt(1), BigInt(1), BigInt(0), BigInt(1)});

    IntMat sq = modular_project(BraidWord::parse("s2 s1^2 s2 s1^2"));
    CHECK(sq.a == std::array<BigInt, 4>{BigInt(-1), BigInt(0), BigInt(0), BigInt(-1)});
    IntMat canon = psl_canonical(sq);
    CHECK(canon.a == std::array<BigInt, 4>{BigInt(1), BigInt(0), BigInt(0), BigInt(1)});

    IntMat rho = modular_project(BraidWord::parse("s2 s1 s2 s1 s2 s1"));
    CHECK(rho.a == std::array<BigInt, 4>{BigInt(-1), BigInt(0), BigInt(0), BigInt(-1)});

    // det 1 on random words
    for (int iter = 0; iter < 200; ++iter) {
        IntMat m = modular_project(random_word(10));
        CHECK(m.a[0] * m.a[3] - m.a[1] * m.a[2] == BigInt(1));
    }
}

TEST_CASE("braid word parse/print round trip") {
    for (int iter = 0; iter < 200; ++iter) {
        BraidWord w = random_word(8, true);
        CHECK(BraidWord::parse(w.to_string()) == w);
    }
    CHECK(BraidWord::parse("s1^-3 s2 t^4").to_string() == "t^4 s1^-3 s2");
    CHECK(BraidWord::parse("s1 s1 s1^-2").is_identity());
    CHECK_THROWS_AS(BraidWord::parse("s3"), std::invalid_argument);
    CHECK_THROWS_AS(BraidWord::parse("s1^x"), std::invalid_argument);
}
