#include "burau.hpp"

#include <sstream>

namespace batlas {

BraidWord::BraidWord(std::initializer_list<BraidLetter> letters, long twist) : twist_(twist) {
    for (const auto& l : letters) push(l);
}

void BraidWord::push(BraidLetter l) {
    if (l.gen != 1 && l.gen != 2) throw std::invalid_argument("BraidWord: generator index must be 1 or 2");
    if (l.exp == 0) return;
    if (!letters_.empty() && letters_.back().gen == l.gen) {
        letters_.back().exp += l.exp;
        if (letters_.back().exp == 0) letters_.pop_back();
    } else {
        letters_.push_back(l);
    }
}

BraidWord BraidWord::sigma(int gen, long exp) {
    BraidWord w;
    w.push({gen, exp});
    return w;
}

BraidWord BraidWord::twist(long s) {
    BraidWord w;
    w.twist_ = s;
    return w;
}

BraidWord BraidWord::parse(const std::string& text) {
    BraidWord w;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        long exp = 1;
        std::string head = tok;
        size_t caret = tok.find('^');
        if (caret != std::string::npos) {
            head = tok.substr(0, caret);
            std::string e = tok.substr(caret + 1);
            try {
                size_t used = 0;
                exp = std::stol(e, &used);
                if (used != e.size()) throw std::invalid_argument("");
            } catch (...) {
                throw std::invalid_argument("BraidWord: bad exponent in token '" + tok + "'");
            }
        }
        if (head == "s1") w.push({1, exp});
        else if (head == "s2") w.push({2, exp});
        else if (head == "t") w.twist_ += exp;
        else if (tok == "1") continue;  // identity
        else throw std::invalid_argument("BraidWord: unknown token '" + tok + "'");
    }
    return w;
}

long BraidWord::bdeg() const {
    long d = 2 * twist_;
    for (const auto& l : letters_) d += l.exp;
    return d;
}

BraidWord BraidWord::operator*(const BraidWord& o) const {
    BraidWord r = *this;
    r.twist_ += o.twist_;
    for (const auto& l : o.letters_) r.push(l);
    return r;
}

BraidWord BraidWord::inverse() const {
    BraidWord r;
    r.twist_ = -twist_;
    for (size_t i = letters_.size(); i-- > 0;) r.push({letters_[i].gen, -letters_[i].exp});
    return r;
}

bool operator==(const BraidWord& a, const BraidWord& b) {
    if (a.twist_ != b.twist_ || a.letters_.size() != b.letters_.size()) return false;
    for (size_t i = 0; i < a.letters_.size(); ++i)
        if (a.letters_[i].gen != b.letters_[i].gen || a.letters_[i].exp != b.letters_[i].exp) return false;
    return true;
}

std::string BraidWord::to_string() const {
    std::string s;
    auto app = [&s](const std::string& part) {
        if (!s.empty()) s += " ";
        s += part;
    };
    if (twist_ != 0) app(twist_ == 1 ? "t" : "t^" + std::to_string(twist_));
    for (const auto& l : letters_) {
        std::string part = "s" + std::to_string(l.gen);
        if (l.exp != 1) part += "^" + std::to_string(l.exp);
        app(part);
    }
    return s.empty() ? "1" : s;
}

BurauMat BurauMat::identity() {
    BurauMat m;
    m.at(0, 0) = IntPoly(1);
    m.at(1, 1) = IntPoly(1);
    return m;
}

BurauMat BurauMat::generator(int gen, long exp) {
    // Closed form of the powers stays valid for negative exponents as Laurent
    // matrices: sigma_1^m = [(-t)^m, f_m(-t); 0, 1], sigma_2^m = [1, 0; t f_m(-t), (-t)^m].
    BurauMat m;
    m.bdeg = exp;
    const IntPoly one(1);
    IntPoly neg_t_m = IntPoly::from_coeffs({(exp % 2 + 2) % 2 == 0 ? 1LL : -1LL}, 0).shifted(exp);
    IntPoly f = IntPoly::gauss_sum(exp).substitute_neg_t();
    if (gen == 1) {
        m.at(0, 0) = neg_t_m;
        m.at(0, 1) = f;
        m.at(1, 1) = one;
    } else {
        m.at(0, 0) = one;
        m.at(1, 0) = f.shifted(1);
        m.at(1, 1) = neg_t_m;
    }
    return m;
}

IntPoly BurauMat::det() const { return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0); }

BurauMat BurauMat::operator*(const BurauMat& o) const {
    BurauMat r;
    r.bdeg = bdeg + o.bdeg;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r.at(i, j) = at(i, 0) * o.at(0, j) + at(i, 1) * o.at(1, j);
    return r;
}

bool operator==(const BurauMat& x, const BurauMat& y) { return x.a == y.a && x.bdeg == y.bdeg; }

std::string BurauMat::to_string() const {
    return "[" + at(0, 0).to_string() + ", " + at(0, 1).to_string() + "; " + at(1, 0).to_string() + ", " +
           at(1, 1).to_string() + "]";
}

BurauMat burau_of_word(const BraidWord& w) {
    BurauMat m = BurauMat::identity();
    for (const auto& l : w.letters()) m = m * BurauMat::generator(l.gen, l.exp);
    long s = w.scalar_twist();
    if (s != 0) {
        IntPoly ts = IntPoly::t_power(s);
        for (auto& e : m.a) e *= ts;
        m.bdeg += 2 * s;
    }
    return m;
}

RingElem RingMat::det() const { return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0); }

RingMat RingMat::operator*(const RingMat& o) const {
    RingMat r;
    r.bdeg = bdeg + o.bdeg;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r.at(i, j) = at(i, 0) * o.at(0, j) + at(i, 1) * o.at(1, j);
    return r;
}

bool operator==(const RingMat& x, const RingMat& y) { return x.a == y.a; }

RingMat RingMat::identity(const RingPtr& ring) {
    RingMat m;
    for (auto& e : m.a) e = RingElem::zero(ring);
    m.at(0, 0) = RingElem::one(ring);
    m.at(1, 1) = RingElem::one(ring);
    return m;
}

namespace {

RingElem eval_laurent(const IntPoly& p, const RingPtr& ring, const RingElem& xi, const RingElem& xi_inv) {
    RingElem acc = RingElem::zero(ring);
    if (p.is_zero()) return acc;
    for (size_t i = p.coeffs().size(); i-- > 0;) {
        acc = acc * xi;
        long long c = (p.coeffs()[i] % BigInt(static_cast<unsigned long long>(ring->modulus()))).to_ll();
        if (c < 0) c += static_cast<long long>(ring->modulus());
        acc = acc + RingElem::scalar(ring, static_cast<uint64_t>(c));
    }
    long lo = p.low_exp();
    if (lo > 0) acc = acc * xi.pow(static_cast<long long>(lo));
    if (lo < 0) acc = acc * xi_inv.pow(static_cast<long long>(-lo));
    return acc;
}

}  // namespace

RingMat specialize(const BurauMat& m, const RingPtr& ring, const RingElem& xi) {
    auto inv = xi.try_inverse();
    if (!inv) throw std::domain_error("specialize: xi is not a unit");
    RingMat r;
    r.bdeg = m.bdeg;
    for (int i = 0; i < 4; ++i) r.a[i] = eval_laurent(m.a[i], ring, xi, *inv);
    return r;
}

IntMat IntMat::mul(const IntMat& o) const {
    IntMat r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r.a[2 * i + j] = a[2 * i] * o.a[j] + a[2 * i + 1] * o.a[2 + j];
    return r;
}

bool operator==(const IntMat& x, const IntMat& y) { return x.a == y.a; }

IntMat modular_project(const BraidWord& w) {
    BurauMat b = burau_of_word(w);
    IntMat m;
    for (int i = 0; i < 4; ++i) {
        BigInt acc;
        const IntPoly& p = b.a[i];
        for (size_t k = 0; k < p.coeffs().size(); ++k) {
            long e = p.low_exp() + static_cast<long>(k);
            BigInt term = p.coeffs()[k];
            if (e & 1) term = -term;  // t = -1
            acc += term;
        }
        m.a[i] = acc;
    }
    return m;
}

IntMat psl_canonical(const IntMat& m) {
    for (const auto& e : m.a) {
        if (e.is_zero()) continue;
        if (e.sign() < 0) {
            IntMat r;
            for (int i = 0; i < 4; ++i) r.a[i] = -m.a[i];
            return r;
        }
        return m;
    }
    return m;
}

}  // namespace batlas
