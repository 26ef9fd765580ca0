#include "intpoly.hpp"

namespace batlas {

IntPoly::IntPoly(const BigInt& c) {
    if (!c.is_zero()) coeffs_.push_back(c);
}

IntPoly::IntPoly(std::vector<BigInt> coeffs, long low_exp) : coeffs_(std::move(coeffs)), low_exp_(low_exp) {
    trim();
}

void IntPoly::trim() {
    size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
    if (lead == coeffs_.size()) {
        coeffs_.clear();
        low_exp_ = 0;
        return;
    }
    size_t top = coeffs_.size();
    while (coeffs_[top - 1].is_zero()) --top;
    if (lead > 0 || top < coeffs_.size()) {
        coeffs_ = std::vector<BigInt>(coeffs_.begin() + lead, coeffs_.begin() + top);
        low_exp_ += static_cast<long>(lead);
    }
}

IntPoly IntPoly::t_power(long k) {
    IntPoly p;
    p.coeffs_.push_back(BigInt(1));
    p.low_exp_ = k;
    return p;
}

IntPoly IntPoly::from_coeffs(std::vector<long long> ascending, long low_exp) {
    std::vector<BigInt> c;
    c.reserve(ascending.size());
    for (long long v : ascending) c.emplace_back(v);
    return IntPoly(std::move(c), low_exp);
}

IntPoly IntPoly::gauss_sum(long m) {
    if (m >= 0) {
        std::vector<BigInt> c(static_cast<size_t>(m), BigInt(1));
        return IntPoly(std::move(c), 0);
    }
    std::vector<BigInt> c(static_cast<size_t>(-m), BigInt(-1));
    return IntPoly(std::move(c), m);
}

long IntPoly::degree() const {
    if (coeffs_.empty()) throw std::domain_error("IntPoly: degree of zero");
    return low_exp_ + static_cast<long>(coeffs_.size()) - 1;
}

BigInt IntPoly::coeff(long exponent) const {
    long i = exponent - low_exp_;
    if (i < 0 || i >= static_cast<long>(coeffs_.size())) return BigInt();
    return coeffs_[static_cast<size_t>(i)];
}

const BigInt& IntPoly::leading() const {
    if (coeffs_.empty()) throw std::domain_error("IntPoly: leading of zero");
    return coeffs_.back();
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    long lo = std::min(a.low_exp_, b.low_exp_);
    long hi = std::max(a.low_exp_ + static_cast<long>(a.coeffs_.size()),
                       b.low_exp_ + static_cast<long>(b.coeffs_.size()));
    std::vector<BigInt> c(static_cast<size_t>(hi - lo));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) c[a.low_exp_ - lo + i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) c[b.low_exp_ - lo + i] += b.coeffs_[i];
    return IntPoly(std::move(c), lo);
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPoly(std::move(c), a.low_exp_ + b.low_exp_);
}

bool operator==(const IntPoly& a, const IntPoly& b) {
    return a.low_exp_ == b.low_exp_ && a.coeffs_ == b.coeffs_;
}

IntPoly IntPoly::shifted(long k) const {
    if (is_zero()) return IntPoly();
    IntPoly r = *this;
    r.low_exp_ += k;
    return r;
}

void IntPoly::divmod(const IntPoly& a, const IntPoly& b, IntPoly& q, IntPoly& r) {
    if (b.is_zero()) throw std::domain_error("IntPoly: division by zero");
    if (a.low_exp_ < 0 || b.low_exp_ < 0) throw std::domain_error("IntPoly: divmod needs ordinary polynomials");
    q = IntPoly();
    r = a;
    long db = b.degree();
    while (!r.is_zero() && r.degree() >= db) {
        BigInt factor = r.leading().divexact(b.leading());
        long shift = r.degree() - db;
        IntPoly term = IntPoly(factor).shifted(shift);
        q += term;
        r -= term * b;
    }
}

IntPoly IntPoly::divexact(const IntPoly& b) const {
    IntPoly q, r;
    divmod(*this, b, q, r);
    if (!r.is_zero()) throw std::domain_error("IntPoly: inexact division");
    return q;
}

IntPoly IntPoly::substitute_neg_t() const {
    IntPoly r = *this;
    for (size_t i = 0; i < r.coeffs_.size(); ++i) {
        long e = r.low_exp_ + static_cast<long>(i);
        if (e & 1) r.coeffs_[i] = -r.coeffs_[i];
    }
    return r;
}

BigInt IntPoly::eval(const BigInt& x) const {
    if (is_zero()) return BigInt();
    if (low_exp_ < 0) throw std::domain_error("IntPoly: eval needs ordinary polynomial");
    BigInt acc;
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    for (long k = 0; k < low_exp_; ++k) acc = acc * x;
    return acc;
}

BigInt IntPoly::content() const {
    BigInt g;
    for (const auto& c : coeffs_) g = BigInt::gcd(g, c);
    return g;
}

std::vector<uint64_t> IntPoly::reduce_mod(uint64_t m) const {
    if (low_exp_ < 0) throw std::domain_error("IntPoly: reduce_mod needs ordinary polynomial");
    if (is_zero()) return {};
    std::vector<uint64_t> c(static_cast<size_t>(low_exp_) + coeffs_.size(), 0);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        BigInt red = coeffs_[i] % BigInt(static_cast<unsigned long long>(m));
        long long ll = red.to_ll();
        if (ll < 0) ll += static_cast<long long>(m);
        c[static_cast<size_t>(low_exp_) + i] = static_cast<uint64_t>(ll);
    }
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        const BigInt& c = coeffs_[i];
        if (c.is_zero()) continue;
        long e = low_exp_ + static_cast<long>(i);
        BigInt a = c.abs();
        if (s.empty()) {
            if (c.sign() < 0) s += "-";
        } else {
            s += c.sign() < 0 ? "-" : "+";
        }
        bool unit = a.is_one();
        if (!unit || e == 0) s += a.to_string();
        if (e != 0) {
            if (!unit) s += "*";
            s += "t";
            if (e != 1) s += "^" + std::to_string(e);
        }
    }
    return s;
}

namespace {

struct PolyParser {
    const std::string& text;
    size_t pos = 0;

    explicit PolyParser(const std::string& t) : text(t) {}

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("polynomial syntax error at position " + std::to_string(pos) + ": " + what);
    }

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    BigInt parse_uint() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == start) fail("expected integer");
        return BigInt::from_string(text.substr(start, pos - start));
    }

    // term = [int]['*']['t'['^'int]]
    IntPoly parse_term() {
        skip_ws();
        if (pos >= text.size()) fail("expected term");
        BigInt coef(1);
        bool saw_coef = false;
        if (text[pos] >= '0' && text[pos] <= '9') {
            coef = parse_uint();
            saw_coef = true;
        }
        bool star = eat('*');
        skip_ws();
        if (pos < text.size() && text[pos] == 't') {
            ++pos;
            long e = 1;
            if (eat('^')) {
                bool neg = eat('-');
                BigInt be = parse_uint();
                if (neg) fail("negative exponent");
                if (be > BigInt(1000000)) fail("exponent too large");
                e = static_cast<long>(be.to_ll());
            }
            std::vector<BigInt> c(static_cast<size_t>(e) + 1);
            c[static_cast<size_t>(e)] = coef;
            return IntPoly(std::move(c), 0);
        }
        if (star || !saw_coef) fail("expected variable t");
        return IntPoly(coef);
    }

    IntPoly parse() {
        skip_ws();
        if (pos >= text.size()) fail("empty input");
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        IntPoly acc = parse_term();
        if (neg) acc = -acc;
        for (;;) {
            skip_ws();
            if (pos >= text.size()) break;
            if (eat('+')) acc += parse_term();
            else if (eat('-')) acc -= parse_term();
            else fail("expected '+' or '-'");
        }
        return acc;
    }
};

}  // namespace

IntPoly parse_poly(const std::string& text) {
    PolyParser p(text);
    return p.parse();
}

IntPoly cyclotomic(unsigned n) {
    if (n == 0) throw std::invalid_argument("cyclotomic: n >= 1");
    // t^n - 1 divided by Phi_d for all proper divisors d of n.
    std::vector<BigInt> c(n + 1);
    c[0] = BigInt(-1);
    c[n] = BigInt(1);
    IntPoly acc(std::move(c), 0);
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0) acc = acc.divexact(cyclotomic(d));
    return acc;
}

}  // namespace batlas
