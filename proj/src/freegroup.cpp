#include "freegroup.hpp"

#include <sstream>

namespace batlas {

FreeWord FreeWord::generator(int idx, long exp) {
    FreeWord w;
    w.push({idx, exp});
    return w;
}

void FreeWord::push(Letter l) {
    if (l.idx < 1 || l.idx > 3) throw std::invalid_argument("FreeWord: generator index must be 1..3");
    if (l.exp == 0) return;
    if (!letters_.empty() && letters_.back().idx == l.idx) {
        letters_.back().exp += l.exp;
        if (letters_.back().exp == 0) letters_.pop_back();
    } else {
        letters_.push_back(l);
    }
}

FreeWord FreeWord::parse(const std::string& text) {
    FreeWord w;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok.size() < 2 || tok[0] != 'a' || tok[1] < '1' || tok[1] > '3')
            throw std::invalid_argument("FreeWord: unknown token '" + tok + "'");
        long exp = 1;
        if (tok.size() > 2) {
            if (tok[2] != '^') throw std::invalid_argument("FreeWord: unknown token '" + tok + "'");
            try {
                size_t used = 0;
                exp = std::stol(tok.substr(3), &used);
                if (used != tok.size() - 3) throw std::invalid_argument("");
            } catch (...) {
                throw std::invalid_argument("FreeWord: bad exponent in token '" + tok + "'");
            }
        }
        w.push({tok[1] - '0', exp});
    }
    return w;
}

long FreeWord::total_degree() const {
    long d = 0;
    for (const auto& l : letters_) d += l.exp;
    return d;
}

size_t FreeWord::length() const {
    size_t n = 0;
    for (const auto& l : letters_) n += static_cast<size_t>(l.exp < 0 ? -l.exp : l.exp);
    return n;
}

FreeWord FreeWord::operator*(const FreeWord& o) const {
    FreeWord r = *this;
    for (const auto& l : o.letters_) r.push(l);
    return r;
}

FreeWord FreeWord::inverse() const {
    FreeWord r;
    for (size_t i = letters_.size(); i-- > 0;) r.push({letters_[i].idx, -letters_[i].exp});
    return r;
}

bool operator==(const FreeWord& a, const FreeWord& b) {
    if (a.letters_.size() != b.letters_.size()) return false;
    for (size_t i = 0; i < a.letters_.size(); ++i)
        if (a.letters_[i].idx != b.letters_[i].idx || a.letters_[i].exp != b.letters_[i].exp) return false;
    return true;
}

std::string FreeWord::to_string() const {
    if (letters_.empty()) return "1";
    std::string s;
    for (const auto& l : letters_) {
        if (!s.empty()) s += " ";
        s += "a" + std::to_string(l.idx);
        if (l.exp != 1) s += "^" + std::to_string(l.exp);
    }
    return s;
}

std::string ModuleVec::to_string() const {
    return "(" + c1.to_string() + ")*e1 + (" + c2.to_string() + ")*e2, deg " + std::to_string(deg);
}

ModuleVec module_vec_add(const ModuleVec& a, const ModuleVec& b) {
    return ModuleVec{a.c1 + b.c1, a.c2 + b.c2, a.deg + b.deg};
}

namespace {

// Images of a1, a2, a3 under one Artin generator with exponent +-1.
const FreeWord& artin_image(int gen, bool inv, int idx) {
    static const FreeWord s1_pos[3] = {FreeWord::parse("a1 a2 a1^-1"), FreeWord::parse("a1"), FreeWord::parse("a3")};
    static const FreeWord s1_neg[3] = {FreeWord::parse("a2"), FreeWord::parse("a2^-1 a1 a2"), FreeWord::parse("a3")};
    static const FreeWord s2_pos[3] = {FreeWord::parse("a1"), FreeWord::parse("a2 a3 a2^-1"), FreeWord::parse("a2")};
    static const FreeWord s2_neg[3] = {FreeWord::parse("a1"), FreeWord::parse("a3"), FreeWord::parse("a3^-1 a2 a3")};
    const FreeWord* table = gen == 1 ? (inv ? s1_neg : s1_pos) : (inv ? s2_neg : s2_pos);
    return table[idx - 1];
}

FreeWord substitute(int gen, bool inv, const FreeWord& w, size_t cap) {
    FreeWord out;
    for (const auto& l : w.letters()) {
        const FreeWord& img = artin_image(gen, inv, l.idx);
        FreeWord img_inv = img.inverse();
        long n = l.exp;
        const FreeWord& rep = n > 0 ? img : img_inv;
        for (long k = 0; k < (n > 0 ? n : -n); ++k) {
            out = out * rep;
            if (out.length() > cap) throw std::length_error("artin_apply: word length cap exceeded");
        }
    }
    return out;
}

}  // namespace

FreeWord artin_apply(const BraidWord& b, const FreeWord& w, size_t length_cap) {
    FreeWord cur = w;
    long s = b.scalar_twist();
    // Last letter acts first; matrices then compose in word order.
    const auto& ls = b.letters();
    for (size_t i = ls.size(); i-- > 0;) {
        long e = ls[i].exp;
        bool inv = e < 0;
        for (long k = 0; k < (e < 0 ? -e : e); ++k) cur = substitute(ls[i].gen, inv, cur, length_cap);
    }
    if (s != 0) {
        if (s % 3 != 0) throw std::domain_error("artin_apply: scalar twist must be divisible by 3");
        FreeWord rho = FreeWord::parse("a1 a2 a3");
        long k = s / 3;
        FreeWord g = k > 0 ? rho : rho.inverse();
        for (long i = 0; i < (k > 0 ? k : -k); ++i) {
            cur = g * cur * g.inverse();
            if (cur.length() > length_cap) throw std::length_error("artin_apply: word length cap exceeded");
        }
    }
    return cur;
}

ModuleVec psi(const FreeWord& w) {
    // generator vectors: a1 -> 0, a2 -> e1, a3 -> e1 + e2
    ModuleVec acc;  // (0, 0) at degree 0
    for (const auto& l : w.letters()) {
        IntPoly v1, v2;
        if (l.idx == 2) v1 = IntPoly(1);
        if (l.idx == 3) {
            v1 = IntPoly(1);
            v2 = IntPoly(1);
        }
        // a^e contributes f_e(t) * v at the current degree offset
        IntPoly f = IntPoly::gauss_sum(l.exp);
        IntPoly shift = IntPoly::t_power(acc.deg);
        acc.c1 += shift * f * v1;
        acc.c2 += shift * f * v2;
        acc.deg += l.exp;
    }
    return acc;
}

ModuleVec tilde_class(const BraidWord& b, int generator_idx, size_t length_cap) {
    FreeWord alpha = FreeWord::generator(generator_idx);
    FreeWord moved = artin_apply(b, alpha, length_cap);
    ModuleVec v = psi(moved * alpha.inverse());
    if (v.deg != 0) throw std::logic_error("tilde_class: degree must vanish");
    return v;
}

ModuleVec burau_act(const BurauMat& m, const ModuleVec& v) {
    ModuleVec r;
    r.deg = v.deg;
    r.c1 = m.at(0, 0) * v.c1 + m.at(0, 1) * v.c2;
    r.c2 = m.at(1, 0) * v.c1 + m.at(1, 1) * v.c2;
    return r;
}

}  // namespace batlas
