#include "verify.hpp"

#include <random>

#include "freegroup.hpp"
#include "localgeom.hpp"
#include "search.hpp"

namespace batlas {

namespace {

struct Rng {
    std::mt19937_64 gen{0x8a7a11a5ULL};
    BraidWord braid(int max_len) {
        BraidWord w;
        int len = 1 + static_cast<int>(gen() % static_cast<unsigned>(max_len));
        for (int i = 0; i < len; ++i) {
            long exp = static_cast<long>(gen() % 3) - 1;
            if (exp == 0) exp = 1;
            w = w * BraidWord::sigma(1 + static_cast<int>(gen() % 2), exp);
        }
        return w;
    }
    FreeWord freeword(int max_len, bool deg0 = false) {
        FreeWord w;
        int len = static_cast<int>(gen() % static_cast<unsigned>(max_len + 1));
        for (int i = 0; i < len; ++i) {
            long exp = static_cast<long>(gen() % 5) - 2;
            if (exp == 0) exp = 1;
            w = w * FreeWord::generator(1 + static_cast<int>(gen() % 3), exp);
        }
        if (deg0) {
            long d = w.total_degree();
            if (d != 0) w = w * FreeWord::generator(1, -d);
        }
        return w;
    }
};

IntPoly neg_t_pow(long m) {
    IntPoly p = IntPoly::t_power(m);
    return (m % 2 + 2) % 2 == 0 ? p : -p;
}

}  // namespace

std::vector<VerifyItem> verify_burau() {
    std::vector<VerifyItem> out;
    Rng rng;

    out.push_back({"braid relation s1 s2 s1 = s2 s1 s2",
                   burau_of_word(BraidWord::parse("s1 s2 s1")) == burau_of_word(BraidWord::parse("s2 s1 s2"))});

    bool powers = true;
    for (int gen : {1, 2})
        for (long m = 0; m <= 6; ++m) {
            BraidWord repeated;
            for (long k = 0; k < m; ++k) repeated = repeated * BraidWord::sigma(gen);
            powers = powers && burau_of_word(repeated) == BurauMat::generator(gen, m);
        }
    out.push_back({"power formula for exponents up to 6", powers});

    bool identity = true;
    for (long r = -3; r <= 3; ++r)
        for (long m = 0; m <= 8; ++m) {
            IntPoly f_m = IntPoly::gauss_sum(m).substitute_neg_t();
            IntPoly lhs = parse_poly("t+1") * IntPoly::t_power(r) * f_m + IntPoly::t_power(r) * neg_t_pow(m);
            identity = identity && lhs == IntPoly::t_power(r);
        }
    out.push_back({"(t+1) t^r f_m(-t) + t^r (-t)^m = t^r", identity});

    bool dets = true;
    for (int iter = 0; iter < 1000; ++iter) {
        BraidWord w = rng.braid(12);
        BurauMat m = burau_of_word(w);
        dets = dets && m.det() == neg_t_pow(m.bdeg);
    }
    out.push_back({"det = (-t)^bdeg on 1000 random words", dets});

    BurauMat sq = burau_of_word(BraidWord::parse("s2 s1^2 s2 s1^2"));
    out.push_back({"(s2 s1^2)^2 = t^3 id", sq.a == burau_of_word(BraidWord::twist(3)).a});

    BraidWord b1 = BraidWord::parse("s1 s2^-1"), b2 = BraidWord::parse("s2^-1 s1");
    BraidWord c = b1 * b2 * b1.inverse() * b2.inverse();
    BraidWord lhs = c * BraidWord::parse("s2 s1 s2 s1 s2 s1").inverse();
    out.push_back({"N=6 word identity [b1,b2](s2 s1)^-3 = s1 s2^-6 s1^-1",
                   burau_of_word(lhs) == burau_of_word(BraidWord::parse("s1 s2^-6 s1^-1"))});

    BurauMat beta = burau_of_word(BraidWord::parse("t s1^-1 s2"));
    out.push_back({"t s1^-1 s2 = [t-1, -t; t^2, -t^2]",
                   beta.at(0, 0) == parse_poly("t-1") && beta.at(0, 1) == parse_poly("0-t") &&
                       beta.at(1, 0) == parse_poly("t^2") && beta.at(1, 1) == parse_poly("0-t^2")});

    auto ring = RingDescriptor::make(13, parse_poly("t^2+2"));
    RingElem xi = RingElem::t_class(ring);
    bool commute = true;
    for (int iter = 0; iter < 50; ++iter) {
        BraidWord u = rng.braid(6), v = rng.braid(6);
        commute = commute && specialize(burau_of_word(u * v), ring, xi) ==
                                 specialize(burau_of_word(u), ring, xi) * specialize(burau_of_word(v), ring, xi);
    }
    out.push_back({"specialization commutes with products", commute});
    return out;
}

std::vector<VerifyItem> verify_freegroup() {
    std::vector<VerifyItem> out;
    Rng rng;

    bool hom = true;
    for (int iter = 0; iter < 100; ++iter) {
        FreeWord u = rng.freeword(6), v = rng.freeword(6);
        ModuleVec pu = psi(u), pv = psi(v), puv = psi(u * v);
        IntPoly shift = IntPoly::t_power(pu.deg);
        hom = hom && puv.deg == pu.deg + pv.deg && puv.c1 == pu.c1 + shift * pv.c1 && puv.c2 == pu.c2 + shift * pv.c2;
    }
    out.push_back({"psi is a homomorphism into the semidirect product", hom});

    bool equi = true;
    for (int iter = 0; iter < 100; ++iter) {
        BraidWord b = rng.braid(6);
        FreeWord w = rng.freeword(6, true);
        equi = equi && psi(artin_apply(b, w)) == burau_act(burau_of_word(b), psi(w));
    }
    out.push_back({"equivariance psi(b(w)) = Burau(b) psi(w)", equi});

    bool v2 = true;
    for (int iter = 0; iter < 60; ++iter) {
        BraidWord b = rng.braid(5);
        FreeWord alpha = rng.freeword(4), h = rng.freeword(4, true);
        FreeWord ah = alpha * h;
        ModuleVec lhs = psi(artin_apply(b, ah) * ah.inverse());
        ModuleVec tail = burau_act(burau_of_word(b), psi(h));
        IntPoly shift = IntPoly::t_power(alpha.total_degree());
        ModuleVec rhs = psi(artin_apply(b, alpha) * alpha.inverse());
        rhs.c1 += shift * (tail.c1 - psi(h).c1);
        rhs.c2 += shift * (tail.c2 - psi(h).c2);
        v2 = v2 && lhs == rhs;
    }
    out.push_back({"change of section: [b(ah)(ah)^-1] = [b(a)a^-1] + t^deg(a) (B - id)[h]", v2});

    bool v3 = true;
    for (int iter = 0; iter < 40; ++iter) {
        BraidWord b = rng.braid(4);
        FreeWord alpha = rng.freeword(3);
        long dga = alpha.total_degree();
        ModuleVec base = psi(artin_apply(b, alpha) * alpha.inverse());
        for (long n = -2; n <= 3; ++n) {
            FreeWord an;
            for (long k = 0; k < (n < 0 ? -n : n); ++k) an = an * (n > 0 ? alpha : alpha.inverse());
            ModuleVec got = psi(artin_apply(b, an) * an.inverse());
            IntPoly fn;
            if (n >= 0)
                for (long k = 0; k < n; ++k) fn += IntPoly::t_power(k * dga);
            else
                for (long k = n; k < 0; ++k) fn -= IntPoly::t_power(k * dga);
            v3 = v3 && got.c1 == fn * base.c1 && got.c2 == fn * base.c2 && got.deg == 0;
        }
    }
    out.push_back({"power scaling: [b(a^n)a^-n] = f_n(t^deg a)[b(a)a^-1]", v3});

    bool rho_ok = true;
    BraidWord c3 = BraidWord::parse("s2 s1 s2 s1 s2 s1");
    BraidWord power;
    for (long s = 1; s <= 3; ++s) {
        power = power * c3;
        ModuleVec got = tilde_class(power, 3);
        IntPoly fs;
        for (long k = 0; k < s; ++k) fs += IntPoly::t_power(3 * k);
        rho_ok = rho_ok && got.c1 == fs * parse_poly("t-1") && got.c2 == fs * parse_poly("t^2-1");
    }
    ModuleVec a1cls = tilde_class(c3, 1);
    rho_ok = rho_ok && a1cls.c1 == parse_poly("t-t^3") && a1cls.c2 == parse_poly("t^2-t^3");
    out.push_back({"central powers: [(s2 s1)^3s(a) a^-1] = f_s(t^3)[(t-1)e1 + (t^2-1)e2]", rho_ok});

    auto f3 = RingDescriptor::make(3, parse_poly("t-1"));
    out.push_back({"tilde image of {s2 s1} at xi = 1 over F_3 is the whole plane",
                   tilde_image_submodule({BraidWord::parse("s2 s1")}, f3, RingElem::t_class(f3)).dim == 2});

    auto f13 = RingDescriptor::make(13, parse_poly("t+2"));
    RingElem xi13 = RingElem::t_class(f13);
    bool vv = true;
    for (int iter = 0; iter < 40; ++iter) {
        std::vector<BraidWord> gens = {rng.braid(5), rng.braid(5)};
        vv = vv && image_submodule(gens, f13, xi13) == tilde_image_submodule(gens, f13, xi13);
    }
    out.push_back({"plain and tilde images coincide away from t^2+t+1", vv});

    bool bridge = true;
    for (auto params : {std::pair<uint64_t, const char*>{7, "t-2"}, {2, "t^2+t+1"}}) {
        auto ring = RingDescriptor::make(params.first, parse_poly(params.second));
        RingElem xi = RingElem::t_class(ring);
        RingElem phi3 = xi * xi + xi + RingElem::one(ring);
        for (int iter = 0; iter < 30; ++iter) {
            BraidWord b = rng.braid(5);
            Vec2R tl = specialize_vec(tilde_class(b, 1), ring, xi);
            bridge = bridge && image_submodule({b}, ring, xi).contains(Vec2R{phi3 * tl.a, phi3 * tl.b});
        }
    }
    out.push_back({"(t^2+t+1) Ĩ lies inside I", bridge});
    return out;
}

std::vector<VerifyItem> verify_localgeom() {
    std::vector<VerifyItem> out;
    bool grid_ok = true, one_essential = true;
    long cells = 0;
    for (uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL}) {
        // degree 1 reducers t - a with xi = a a unit, a != +-1
        for (uint64_t a = 2; a + 1 < p; ++a) {
            auto ring = RingDescriptor::make(p, ModPoly{p, {(p - a) % p, 1}});
            RingElem xi = RingElem::t_class(ring);
            unsigned M = static_cast<unsigned>(mul_order(xi)->abs_u64());
            unsigned N = static_cast<unsigned>(mul_order(-xi)->abs_u64());
            RingElem one = RingElem::one(ring);
            for (unsigned m = 1; m <= 2 * M && grid_ok; ++m)
                for (unsigned n = 1; n <= 2 * M && grid_ok; ++n)
                    for (unsigned r = 0; r < M && grid_ok; ++r)
                        for (unsigned s = 0; s < M && grid_ok; ++s) {
                            auto cls = classify_trivalent(m, n, r, s, ring, xi);
                            RingMat mu = specialize(burau_of_word(BraidWord::sigma(1, m)), ring, xi);
                            RingMat mv = specialize(burau_of_word(BraidWord::sigma(2, n)), ring, xi);
                            RingElem xr = xi.pow(static_cast<long long>(r)), xs = xi.pow(static_cast<long long>(s));
                            Subspace oracle = span_columns(
                                ring, {{xr * mu.at(0, 0) - one, xr * mu.at(1, 0)},
                                       {xr * mu.at(0, 1), xr * mu.at(1, 1) - one},
                                       {xs * mv.at(0, 0) - one, xs * mv.at(1, 0)},
                                       {xs * mv.at(0, 1), xs * mv.at(1, 1) - one}});
                            grid_ok = grid_ok && cls.dim == oracle.dim;
                            if (cls.dim == 1) {
                                Subspace got;
                                got.dim = 1;
                                got.basis = {*cls.generator};
                                grid_ok = grid_ok && got == oracle;
                            }
                            if (cls.dim <= 1 && cls.kind != VertexKind::Z && cls.kind != VertexKind::IIex)
                                one_essential = one_essential && (m % N == 0 || n % N == 0);
                            ++cells;
                        }
        }
    }
    out.push_back({"trivalent classifier agrees with the rank oracle (" + std::to_string(cells) + " cells)", grid_ok});
    out.push_back({"one-essential property on the same grid", one_essential});

    bool mono_ok = true;
    for (uint64_t p : {5ULL, 7ULL, 11ULL, 13ULL}) {
        for (uint64_t a = 2; a + 1 < p; ++a) {
            auto ring = RingDescriptor::make(p, ModPoly{p, {(p - a) % p, 1}});
            RingElem xi = RingElem::t_class(ring);
            RingElem one = RingElem::one(ring);
            unsigned M = static_cast<unsigned>(mul_order(xi)->abs_u64());
            for (unsigned r = 0; r < 2 * M; ++r) {
                RingElem t_r1 = xi.pow(static_cast<long long>(r + 1));
                RingElem f3 = t_r1 * t_r1 + t_r1 + one;
                mono_ok = mono_ok && (classify_monovalent_black(r, ring, xi).kind == VertexKind::FULL) == !f3.is_zero();
                RingElem w = one - xi.pow(static_cast<long long>(2 * r + 3));
                mono_ok = mono_ok && (classify_monovalent_white(r, ring, xi).kind == VertexKind::FULL) == !w.is_zero();
            }
        }
    }
    out.push_back({"monovalent classifiers match their determinant criteria", mono_ok});
    return out;
}

std::vector<VerifyItem> verify_suite(const std::string& name) {
    if (name == "burau") return verify_burau();
    if (name == "freegroup") return verify_freegroup();
    if (name == "localgeom") return verify_localgeom();
    if (name == "all" || name.empty()) {
        std::vector<VerifyItem> out = verify_burau();
        auto f = verify_freegroup();
        auto l = verify_localgeom();
        out.insert(out.end(), f.begin(), f.end());
        out.insert(out.end(), l.begin(), l.end());
        return out;
    }
    throw std::invalid_argument("verify: unknown suite '" + name + "'");
}

bool verify_all_ok(const std::vector<VerifyItem>& items) {
    for (const auto& it : items)
        if (!it.ok) return false;
    return true;
}

}  // namespace batlas
