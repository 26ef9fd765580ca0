#include "ring.hpp"

#include <algorithm>

namespace batlas {

void ModPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

ModPoly ModPoly::constant(uint64_t m, uint64_t v) {
    ModPoly p{m, {v % m}};
    p.trim();
    return p;
}

ModPoly ModPoly::from_intpoly(const IntPoly& p, uint64_t m) {
    ModPoly r{m, p.reduce_mod(m)};
    r.trim();
    return r;
}

IntPoly ModPoly::to_intpoly() const {
    std::vector<BigInt> cc;
    cc.reserve(c.size());
    for (uint64_t v : c) cc.emplace_back(static_cast<unsigned long long>(v));
    return IntPoly(std::move(cc), 0);
}

std::string ModPoly::to_string() const { return to_intpoly().to_string(); }

ModPoly ModPoly::divexact_by(const ModPoly& b) const {
    ModPoly q, r;
    mp_divmod(*this, b, q, r);
    if (!r.is_zero()) throw std::domain_error("ModPoly: inexact division");
    return q;
}

bool operator==(const ModPoly& a, const ModPoly& b) { return a.m == b.m && a.c == b.c; }

ModPoly operator+(const ModPoly& a, const ModPoly& b) {
    ModPoly r{a.m, {}};
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = (r.c[i] + b.c[i]) % a.m;
    r.trim();
    return r;
}

ModPoly operator-(const ModPoly& a, const ModPoly& b) {
    ModPoly r{a.m, {}};
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = (r.c[i] + a.m - b.c[i]) % a.m;
    r.trim();
    return r;
}

ModPoly operator*(const ModPoly& a, const ModPoly& b) {
    if (a.is_zero() || b.is_zero()) return ModPoly::zero(a.m);
    ModPoly r{a.m, std::vector<uint64_t>(a.c.size() + b.c.size() - 1, 0)};
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = (r.c[i + j] + mulmod_u64(a.c[i], b.c[j], a.m)) % a.m;
    r.trim();
    return r;
}

ModPoly mp_scale(const ModPoly& a, uint64_t k) {
    ModPoly r = a;
    for (auto& v : r.c) v = mulmod_u64(v, k % a.m, a.m);
    r.trim();
    return r;
}

void mp_divmod(const ModPoly& a, const ModPoly& b, ModPoly& q, ModPoly& r) {
    if (b.is_zero()) throw std::domain_error("ModPoly: division by zero");
    uint64_t inv = invmod_u64(b.lead(), b.m);
    q = ModPoly::zero(a.m);
    r = a;
    if (r.deg() >= b.deg()) q.c.assign(static_cast<size_t>(r.deg() - b.deg()) + 1, 0);
    while (!r.is_zero() && r.deg() >= b.deg()) {
        uint64_t factor = mulmod_u64(r.lead(), inv, a.m);
        size_t shift = static_cast<size_t>(r.deg() - b.deg());
        q.c[shift] = factor;
        for (size_t i = 0; i < b.c.size(); ++i) {
            uint64_t sub = mulmod_u64(factor, b.c[i], a.m);
            r.c[shift + i] = (r.c[shift + i] + a.m - sub) % a.m;
        }
        r.trim();
    }
    q.trim();
}

ModPoly mp_mod(const ModPoly& a, const ModPoly& b) {
    ModPoly q, r;
    mp_divmod(a, b, q, r);
    return r;
}

ModPoly mp_make_monic(const ModPoly& a) {
    if (a.is_zero() || a.lead() == 1) return a;
    return mp_scale(a, invmod_u64(a.lead(), a.m));
}

ModPoly mp_gcd(ModPoly a, ModPoly b) {
    while (!b.is_zero()) {
        ModPoly r = mp_mod(a, b);
        a = b;
        b = r;
    }
    return mp_make_monic(a);
}

ModPoly mp_powmod(ModPoly base, const BigInt& e, const ModPoly& f) {
    ModPoly r = ModPoly::constant(f.m, 1);
    base = mp_mod(base, f);
    BigInt exp = e;
    while (!exp.is_zero()) {
        if (exp.odd()) r = mp_mod(r * base, f);
        base = mp_mod(base * base, f);
        exp = exp / BigInt(2);
    }
    return r;
}

ModPoly mp_derivative(const ModPoly& a) {
    ModPoly r{a.m, {}};
    for (size_t i = 1; i < a.c.size(); ++i)
        r.c.push_back(mulmod_u64(a.c[i], static_cast<uint64_t>(i % a.m), a.m));
    r.trim();
    return r;
}

bool irreducible_mod_p(const ModPoly& f) {
    long d = f.deg();
    if (d <= 0) return false;
    if (d == 1) return true;
    uint64_t p = f.m;
    ModPoly fm = mp_make_monic(f);
    // t^(p^d) == t mod f, and gcd(t^(p^(d/q)) - t, f) = 1 for prime q | d.
    ModPoly x = ModPoly::t(p);
    ModPoly xp = mp_powmod(x, BigInt::pow(BigInt(static_cast<unsigned long long>(p)), static_cast<uint64_t>(d)), fm);
    if (!(xp == mp_mod(x, fm))) return false;
    for (long q = 2; q <= d; ++q) {
        if (d % q != 0) continue;
        bool qprime = true;
        for (long w = 2; w * w <= q; ++w)
            if (q % w == 0) { qprime = false; break; }
        if (!qprime) continue;
        ModPoly xq = mp_powmod(x, BigInt::pow(BigInt(static_cast<unsigned long long>(p)), static_cast<uint64_t>(d / q)), fm);
        if (mp_gcd(xq - x, fm).deg() != 0) return false;
    }
    return true;
}

namespace {

// Deterministic xorshift; seeds every equal-degree split identically across runs.
struct DetRng {
    uint64_t s = 0x9e3779b97f4a7c15ULL;
    uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
};

ModPoly random_poly(DetRng& rng, uint64_t p, long deg) {
    ModPoly r{p, std::vector<uint64_t>(static_cast<size_t>(deg) + 1)};
    for (auto& v : r.c) v = rng.next() % p;
    r.trim();
    return r;
}

// Trace map over F_2: r + r^2 + r^4 + ... (d-1 squarings) mod f.
ModPoly trace_map_f2(const ModPoly& r0, const ModPoly& f, long d) {
    ModPoly acc = mp_mod(r0, f);
    ModPoly cur = acc;
    for (long i = 1; i < d; ++i) {
        cur = mp_mod(cur * cur, f);
        acc = acc + cur;
    }
    return acc;
}

// Equal-degree splitting: f monic squarefree, all irreducible factors of degree d.
void edf(const ModPoly& f, long d, DetRng& rng, std::vector<ModPoly>& out) {
    if (f.deg() == d) {
        out.push_back(f);
        return;
    }
    uint64_t p = f.m;
    for (;;) {
        ModPoly r = random_poly(rng, p, f.deg() - 1);
        if (r.is_zero()) continue;
        ModPoly g;
        if (p == 2) {
            ModPoly tr = trace_map_f2(r, f, d);
            g = mp_gcd(tr, f);
        } else {
            // r^((p^d - 1)/2) - 1
            BigInt e = (BigInt::pow(BigInt(static_cast<unsigned long long>(p)), static_cast<uint64_t>(d)) - BigInt(1)).divexact(BigInt(2));
            ModPoly rp = mp_powmod(r, e, f);
            g = mp_gcd(rp - ModPoly::constant(p, 1), f);
        }
        if (g.deg() > 0 && g.deg() < f.deg()) {
            edf(g, d, rng, out);
            edf(f.divexact_by(g), d, rng, out);
            return;
        }
    }
}

}  // namespace

ModFactorization factor_mod_p(const ModPoly& f_in) {
    if (!is_prime_u64(f_in.m)) throw std::domain_error("factor_mod_p: modulus must be prime");
    if (f_in.is_zero()) throw std::domain_error("factor_mod_p: zero polynomial");
    uint64_t p = f_in.m;
    ModFactorization result;
    result.unit = f_in.lead();
    ModPoly f = mp_make_monic(f_in);
    if (f.deg() == 0) return result;

    // Peel multiplicities via gcd with the derivative; handle p-th powers.
    std::vector<std::pair<ModPoly, unsigned>> squarefree;  // (squarefree part, multiplier)
    std::vector<std::pair<ModPoly, unsigned>> work{{f, 1}};
    while (!work.empty()) {
        auto [g, mult] = work.back();
        work.pop_back();
        if (g.deg() == 0) continue;
        ModPoly der = mp_derivative(g);
        if (der.is_zero()) {
            // g(t) = h(t^p); take the p-th root (coefficients are p-th powers == themselves... only over F_p: a^p = a).
            ModPoly h{p, {}};
            for (size_t i = 0; i < g.c.size(); i += static_cast<size_t>(p)) h.c.push_back(g.c[i]);
            h.trim();
            work.push_back({h, mult * static_cast<unsigned>(p)});
            continue;
        }
        ModPoly gc = mp_gcd(g, der);
        if (gc.deg() == 0) {
            squarefree.push_back({g, mult});
        } else {
            work.push_back({g.divexact_by(gc), mult});
            work.push_back({gc, mult});
        }
    }

    // Distinct-degree then equal-degree splitting on each squarefree part.
    DetRng rng;
    std::vector<std::pair<ModPoly, unsigned>> raw;  // (irreducible, multiplicity)
    for (auto& [g0, mult] : squarefree) {
        ModPoly g = g0;
        if (g.deg() <= 2) {
            // Direct root scan for degree <= 2.
            for (uint64_t x = 0; x < p && g.deg() >= 1; ++x) {
                ModPoly lin{p, {(p - x) % p, 1}};  // t - x
                while (g.deg() >= 1 && mp_mod(g, lin).is_zero()) {
                    raw.push_back({lin, mult});
                    g = g.divexact_by(lin);
                }
            }
            if (g.deg() >= 1) raw.push_back({g, mult});
            continue;
        }
        ModPoly x = ModPoly::t(p);
        ModPoly h = x;
        for (long d = 1; g.deg() >= 1 && d <= g.deg(); ++d) {
            if (2 * d > g.deg()) {
                raw.push_back({g, mult});
                break;
            }
            h = mp_powmod(h, BigInt(static_cast<unsigned long long>(p)), g);
            ModPoly gd = mp_gcd(h - x, g);
            if (gd.deg() > 0) {
                std::vector<ModPoly> parts;
                edf(gd, d, rng, parts);
                for (auto& irr : parts) raw.push_back({irr, mult});
                g = g.divexact_by(gd);
                h = mp_mod(h, g);
            }
        }
    }

    // Merge equal factors, sort canonically.
    std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) {
        if (a.first.c.size() != b.first.c.size()) return a.first.c.size() < b.first.c.size();
        for (size_t i = a.first.c.size(); i-- > 0;)
            if (a.first.c[i] != b.first.c[i]) return a.first.c[i] < b.first.c[i];
        return false;
    });
    for (auto& [irr, mult] : raw) {
        if (!result.factors.empty() && result.factors.back().factor == irr)
            result.factors.back().multiplicity += mult;
        else
            result.factors.push_back({irr, mult});
    }
    return result;
}

ModFactorization factor_mod_p(const IntPoly& f, uint64_t p) {
    return factor_mod_p(ModPoly::from_intpoly(f, p));
}

RingDescriptor::RingDescriptor(uint64_t modulus, ModPoly reducer) : m_(modulus), f_(std::move(reducer)) {
    if (m_ < 2) throw std::invalid_argument("RingDescriptor: modulus must be >= 2");
    f_.m = m_;
    for (auto& v : f_.c) v %= m_;
    f_.trim();
    if (f_.deg() < 1) throw std::invalid_argument("RingDescriptor: reducer must have degree >= 1");
    if (!f_.monic()) throw std::invalid_argument("RingDescriptor: reducer must be monic");
    is_field_ = is_prime_u64(m_) && irreducible_mod_p(f_);
}

std::shared_ptr<const RingDescriptor> RingDescriptor::make(uint64_t modulus, const IntPoly& reducer) {
    return std::make_shared<const RingDescriptor>(modulus, ModPoly::from_intpoly(reducer, modulus));
}

std::shared_ptr<const RingDescriptor> RingDescriptor::make(uint64_t modulus, ModPoly reducer) {
    return std::make_shared<const RingDescriptor>(modulus, std::move(reducer));
}

BigInt RingDescriptor::size() const {
    return BigInt::pow(BigInt(static_cast<unsigned long long>(m_)), deg());
}

RingElem::RingElem(RingPtr ring, std::vector<uint64_t> residue) : ring_(std::move(ring)), v_(std::move(residue)) {
    reduce();
}

void RingElem::reduce() {
    uint64_t m = ring_->modulus();
    for (auto& x : v_) x %= m;
    const ModPoly& f = ring_->reducer();
    size_t d = ring_->deg();
    // Reduce by the monic f from the top.
    while (v_.size() > d) {
        uint64_t top = v_.back();
        v_.pop_back();
        if (top == 0) continue;
        size_t off = v_.size() - d;
        for (size_t i = 0; i < d; ++i) {
            uint64_t sub = mulmod_u64(top, f.c[i], m);
            v_[off + i] = (v_[off + i] + m - sub) % m;
        }
    }
    v_.resize(d, 0);
}

RingElem RingElem::zero(const RingPtr& ring) { return RingElem(ring, {}); }

RingElem RingElem::one(const RingPtr& ring) { return scalar(ring, 1); }

RingElem RingElem::scalar(const RingPtr& ring, uint64_t v) { return RingElem(ring, {v}); }

RingElem RingElem::t_class(const RingPtr& ring) { return RingElem(ring, {0, 1}); }

RingElem RingElem::from_intpoly(const RingPtr& ring, const IntPoly& p) {
    if (p.is_zero()) return zero(ring);
    long lo = p.low_exp();
    IntPoly shifted = lo < 0 ? p.shifted(-lo) : p;
    RingElem r(ring, shifted.reduce_mod(ring->modulus()));
    if (lo < 0) {
        RingElem tinv = t_class(ring).inverse();
        r = r * tinv.pow(static_cast<long long>(-lo));
    }
    return r;
}

bool RingElem::is_zero() const {
    for (uint64_t x : v_)
        if (x) return false;
    return true;
}

bool RingElem::is_one() const {
    if (v_.empty() || v_[0] != 1) return false;
    for (size_t i = 1; i < v_.size(); ++i)
        if (v_[i]) return false;
    return true;
}

RingElem operator+(const RingElem& a, const RingElem& b) {
    RingElem r = a;
    uint64_t m = a.ring_->modulus();
    for (size_t i = 0; i < r.v_.size(); ++i) r.v_[i] = (r.v_[i] + b.v_[i]) % m;
    return r;
}

RingElem operator-(const RingElem& a, const RingElem& b) {
    RingElem r = a;
    uint64_t m = a.ring_->modulus();
    for (size_t i = 0; i < r.v_.size(); ++i) r.v_[i] = (r.v_[i] + m - b.v_[i]) % m;
    return r;
}

RingElem RingElem::operator-() const {
    RingElem r = *this;
    uint64_t m = ring_->modulus();
    for (auto& x : r.v_) x = (m - x) % m;
    return r;
}

RingElem operator*(const RingElem& a, const RingElem& b) {
    uint64_t m = a.ring_->modulus();
    std::vector<uint64_t> prod(2 * a.v_.size(), 0);
    for (size_t i = 0; i < a.v_.size(); ++i) {
        if (a.v_[i] == 0) continue;
        for (size_t j = 0; j < b.v_.size(); ++j)
            prod[i + j] = (prod[i + j] + mulmod_u64(a.v_[i], b.v_[j], m)) % m;
    }
    return RingElem(a.ring_, std::move(prod));
}

RingElem RingElem::pow(const BigInt& e) const {
    if (e.sign() < 0) return inverse().pow(-e);
    RingElem r = one(ring_);
    RingElem base = *this;
    BigInt exp = e;
    while (!exp.is_zero()) {
        if (exp.odd()) r = r * base;
        base = base * base;
        exp = exp / BigInt(2);
    }
    return r;
}

RingElem RingElem::pow(long long e) const { return pow(BigInt(e)); }

std::optional<RingElem> RingElem::try_inverse() const {
    if (is_zero()) return std::nullopt;
    if (ring_->is_field()) {
        // Extended Euclid in F_p[t] against the reducer.
        uint64_t p = ring_->modulus();
        ModPoly a{p, v_};
        a.trim();
        ModPoly b = ring_->reducer();
        ModPoly s0 = ModPoly::constant(p, 1), s1 = ModPoly::zero(p);
        while (!b.is_zero()) {
            ModPoly q, r;
            mp_divmod(a, b, q, r);
            ModPoly s2 = s0 - q * s1;
            a = b;
            b = r;
            s0 = s1;
            s1 = s2;
        }
        if (a.deg() != 0) return std::nullopt;
        ModPoly inv = mp_scale(s0, invmod_u64(a.c[0], p));
        std::vector<uint64_t> c = inv.c;
        return RingElem(ring_, std::move(c));
    }
    // General finite ring: a unit has finite multiplicative order bounded by the
    // ring size; walk the powers until 1 reappears.
    BigInt bound = ring_->size();
    if (bound > BigInt(1 << 24)) return std::nullopt;  // refuse silly scans
    RingElem prev = *this;
    RingElem cur = *this;
    for (BigInt k(1); k <= bound; k += BigInt(1)) {
        if (cur.is_one()) return prev;
        prev = cur;
        cur = cur * *this;
    }
    return std::nullopt;
}

RingElem RingElem::inverse() const {
    auto inv = try_inverse();
    if (!inv) throw std::domain_error("RingElem: not a unit");
    return *inv;
}

std::string RingElem::to_string() const {
    ModPoly p{ring_->modulus(), v_};
    p.trim();
    return p.to_string();
}

unsigned ee_involution(uint64_t p, unsigned N) {
    if (N == 0) throw std::invalid_argument("ee: N must be positive");
    if (p != 0 && !is_prime_u64(p)) throw std::invalid_argument("ee: p must be 0 or prime");
    if (p != 0 && N % p == 0) throw std::invalid_argument("ee: p divides N");
    if (p == 2) return N;
    if (N % 2 == 1) return 2 * N;
    if (N % 4 == 2) return N / 2;
    return N;
}

std::optional<BigInt> mul_order(const RingElem& x) {
    if (x.is_zero()) return std::nullopt;
    if (x.ring()->is_field() && !x.try_inverse()) return std::nullopt;
    BigInt bound = x.ring()->size();  // unit group is smaller; this is a safe cap
    const BigInt scan_cap(10000000);
    if (bound > scan_cap) bound = scan_cap;
    RingElem cur = x;
    BigInt k(1);
    while (k <= bound) {
        if (cur.is_one()) return k;
        cur = cur * x;
        k += BigInt(1);
    }
    return std::nullopt;
}

bool order_is_exactly(const RingElem& x, unsigned n) {
    if (n == 0 || x.is_zero()) return false;
    if (!x.pow(BigInt(static_cast<unsigned long long>(n))).is_one()) return false;
    for (unsigned q = 2; q <= n; ++q) {
        if (n % q != 0) continue;
        bool qprime = true;
        for (unsigned w = 2; w * w <= q; ++w)
            if (q % w == 0) { qprime = false; break; }
        if (!qprime) continue;
        if (x.pow(BigInt(static_cast<unsigned long long>(n / q))).is_one()) return false;
    }
    return true;
}

}  // namespace batlas
