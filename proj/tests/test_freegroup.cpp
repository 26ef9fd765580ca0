#include "doctest.h"

#include <random>

#include "freegroup.hpp"

using namespace batlas;

namespace {

std::mt19937_64 rng(0xF00DULL);

BraidWord random_braid(int max_len) {
    BraidWord w;
    int len = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_len));
    for (int i = 0; i < len; ++i) {
        long exp = static_cast<long>(rng() % 3) - 1;
        if (exp == 0) exp = 1;
        w = w * BraidWord::sigma(1 + static_cast<int>(rng() % 2), exp);
    }
    return w;
}

FreeWord random_free(int max_len) {
    FreeWord w;
    int len = static_cast<int>(rng() % static_cast<unsigned>(max_len + 1));
    for (int i = 0; i < len; ++i) {
        long exp = static_cast<long>(rng() % 5) - 2;
        if (exp == 0) exp = 1;
        w = w * FreeWord::generator(1 + static_cast<int>(rng() % 3), exp);
    }
    return w;
}

FreeWord random_free_deg0(int max_len) {
    FreeWord w = random_free(max_len);
    long d = w.total_degree();
    if (d != 0) w = w * FreeWord::generator(1, -d);
    return w;
}

ModuleVec scale(const IntPoly& f, const ModuleVec& v) {
    return ModuleVec{f * v.c1, f * v.c2, v.deg};
}

}  // namespace

TEST_CASE("artin action on generators") {
    CHECK(artin_apply(BraidWord::sigma(1), FreeWord::generator(2)) == FreeWord::generator(1));
    CHECK(artin_apply(BraidWord::sigma(1), FreeWord::generator(1)) == FreeWord::parse("a1 a2 a1^-1"));
    CHECK(artin_apply(BraidWord::sigma(2), FreeWord::generator(2)) == FreeWord::parse("a2 a3 a2^-1"));
    CHECK(artin_apply(BraidWord::sigma(2), FreeWord::generator(3)) == FreeWord::generator(2));
    for (int iter = 0; iter < 50; ++iter) {
        FreeWord w = random_free(6);
        CHECK(artin_apply(BraidWord::parse("s1 s1^-1"), w) == w);
        CHECK(artin_apply(BraidWord::parse("s2^-1 s2"), w) == w);
    }
}

TEST_CASE("artin action preserves degree and respects the braid relation") {
    for (int iter = 0; iter < 60; ++iter) {
        FreeWord w = random_free(6);
        BraidWord b = random_braid(6);
        CHECK(artin_apply(b, w).total_degree() == w.total_degree());
        CHECK(artin_apply(BraidWord::parse("s1 s2 s1"), w) == artin_apply(BraidWord::parse("s2 s1 s2"), w));
    }
}

TEST_CASE("rho = a1 a2 a3 is fixed by the action") {
    FreeWord rho = FreeWord::parse("a1 a2 a3");
    for (int iter = 0; iter < 40; ++iter) CHECK(artin_apply(random_braid(8), rho) == rho);
}

TEST_CASE("psi on generators and basis classes") {
    ModuleVec e1 = psi(FreeWord::parse("a2 a1^-1"));
    CHECK(e1.c1 == IntPoly(1));
    CHECK(e1.c2 == IntPoly());
    CHECK(e1.deg == 0);

    ModuleVec a1 = psi(FreeWord::generator(1));
    CHECK(a1.c1 == IntPoly());
    CHECK(a1.c2 == IntPoly());
    CHECK(a1.deg == 1);

    ModuleVec e2 = psi(FreeWord::parse("a3 a2^-1"));
    CHECK(e2.c1 == IntPoly());
    CHECK(e2.c2 == IntPoly(1));
}

TEST_CASE("psi is a homomorphism to the semidirect product") {
    for (int iter = 0; iter < 200; ++iter) {
        FreeWord u = random_free(6), v = random_free(6);
        ModuleVec pu = psi(u), pv = psi(v), puv = psi(u * v);
        IntPoly shift = IntPoly::t_power(pu.deg);
        CHECK(puv.deg == pu.deg + pv.deg);
        CHECK(puv.c1 == pu.c1 + shift * pv.c1);
        CHECK(puv.c2 == pu.c2 + shift * pv.c2);
    }
}

TEST_CASE("equivariance: psi(b(w)) = Burau(b) psi(w) in degree zero") {
    for (int iter = 0; iter < 150; ++iter) {
        BraidWord b = random_braid(6);
        FreeWord w = random_free_deg0(6);
        ModuleVec lhs = psi(artin_apply(b, w));
        ModuleVec rhs = burau_act(burau_of_word(b), psi(w));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("lemma: change of section (V.2)") {
    for (int iter = 0; iter < 100; ++iter) {
        BraidWord b = random_braid(5);
        FreeWord alpha = random_free(4);
        FreeWord h = random_free_deg0(4);
        FreeWord ah = alpha * h;
        ModuleVec lhs = psi(artin_apply(b, ah) * ah.inverse());
        ModuleVec tail = burau_act(burau_of_word(b), psi(h));
        IntPoly shift = IntPoly::t_power(alpha.total_degree());
        ModuleVec rhs = psi(artin_apply(b, alpha) * alpha.inverse());
        rhs.c1 += shift * (tail.c1 - psi(h).c1);
        rhs.c2 += shift * (tail.c2 - psi(h).c2);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("lemma: power scaling (V.3)") {
    for (int iter = 0; iter < 60; ++iter) {
        BraidWord b = random_braid(4);
        FreeWord alpha = random_free(3);
        long d = alpha.total_degree();
        ModuleVec base = psi(artin_apply(b, alpha) * alpha.inverse());
        for (long n = -2; n <= 3; ++n) {
            FreeWord an;
            for (long k = 0; k < (n < 0 ? -n : n); ++k) an = an * (n > 0 ? alpha : alpha.inverse());
            ModuleVec lhs = psi(artin_apply(b, an) * an.inverse());
            IntPoly fn;  // f_n(t^d), d = deg alpha
            if (n >= 0) {
                for (long k = 0; k < n; ++k) fn += IntPoly::t_power(k * d);
            } else {
                for (long k = n; k < 0; ++k) fn -= IntPoly::t_power(k * d);
            }
            CHECK(lhs == scale(fn, base));
        }
    }
}

TEST_CASE("eq.rho: the printed identity and the cocycle values") {
    // [(s2 s1)^{3s}(a) a^-1] = f_s(t^3) [(t-1) e1 + (t^2-1) e2] holds for the
    // geometric generator a3 in this basis convention; the a1 class differs by
    // a (t^3-1) multiple, as the change-of-section lemma dictates.
    BraidWord c3 = BraidWord::parse("s2 s1 s2 s1 s2 s1");
    IntPoly printed1 = parse_poly("t-1"), printed2 = parse_poly("t^2-1");
    BraidWord power;
    for (long s = 1; s <= 3; ++s) {
        power = power * c3;
        ModuleVec got = tilde_class(power, 3);
        IntPoly fs;  // f_s(t^3)
        for (long k = 0; k < s; ++k) fs += IntPoly::t_power(3 * k);
        CHECK(got.c1 == fs * printed1);
        CHECK(got.c2 == fs * printed2);
    }
    ModuleVec a1cls = tilde_class(c3, 1);
    CHECK(a1cls.c1 == parse_poly("t-t^3"));
    CHECK(a1cls.c2 == parse_poly("t^2-t^3"));
    // difference lies in Im(Burau((s2 s1)^3) - id) = (t^3 - 1) A
    CHECK((a1cls.c1 - printed1) == -parse_poly("t^3-1"));
    CHECK((a1cls.c2 - printed2).divexact(parse_poly("t^3-1")) == IntPoly(-1));
}

TEST_CASE("tilde classes of central powers") {
    CHECK(tilde_class(BraidWord(), 1) == ModuleVec{});

    BraidWord c6 = BraidWord::parse("s2 s1 s2 s1 s2 s1 s2 s1 s2 s1 s2 s1");
    ModuleVec got = tilde_class(c6, 3);
    IntPoly factor = parse_poly("1+t^3");
    CHECK(got.c1 == factor * parse_poly("t-1"));
    CHECK(got.c2 == factor * parse_poly("t^2-1"));

    // power-scaling instance with beta = s1, alpha = a1, n = 3
    FreeWord a1 = FreeWord::generator(1);
    FreeWord a1cubed = a1 * a1 * a1;
    ModuleVec lhs = psi(artin_apply(BraidWord::sigma(1), a1cubed) * a1cubed.inverse());
    ModuleVec base = tilde_class(BraidWord::sigma(1), 1);
    CHECK(lhs == scale(parse_poly("t^2+t+1"), base));
}

TEST_CASE("scalar twists in tilde classes") {
    // twist divisible by 3: conjugation by rho^(s/3); rho acts trivially on classes
    BraidWord b = random_braid(4);
    ModuleVec plain = tilde_class(b, 1);
    ModuleVec twisted = tilde_class(b * BraidWord::twist(3), 1);
    // t^3 beta = (s2 s1)^3 beta in Bu3; as an automorphism the twist conjugates by rho
    ModuleVec via_center = tilde_class(BraidWord::parse("s2 s1 s2 s1 s2 s1") * b, 1);
    CHECK(twisted == via_center);
    (void)plain;
    CHECK_THROWS_AS(tilde_class(b * BraidWord::twist(1), 1), std::domain_error);
}

TEST_CASE("word length cap aborts cleanly") {
    BraidWord blowup;
    for (int i = 0; i < 40; ++i) blowup = blowup * BraidWord::parse("s1 s2^-1");
    CHECK_THROWS_AS(artin_apply(blowup, FreeWord::generator(1), 2000), std::length_error);
}

TEST_CASE("free word parsing") {
    CHECK(FreeWord::parse("a1 a2^-1").to_string() == "a1 a2^-1");
    CHECK(FreeWord::parse("a1 a1^-1").is_identity());
    CHECK_THROWS_AS(FreeWord::parse("a4"), std::invalid_argument);
}
