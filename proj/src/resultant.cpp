#include "resultant.hpp"

#include <stdexcept>

namespace batlas {

namespace {

// Bareiss fraction-free determinant over an integral domain.
// T needs is_zero(), *, -, divexact, and value semantics.
template <typename T>
T bareiss_det(std::vector<std::vector<T>>& m, const T& one) {
    size_t n = m.size();
    if (n == 0) throw std::domain_error("determinant of empty matrix");
    T prev = one;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k].is_zero()) ++piv;
            if (piv == n) return T();  // singular
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).divexact(prev);
            m[i][k] = T();
        }
        prev = m[k][k];
    }
    T det = m[n - 1][n - 1];
    if (sign < 0) det = T() - det;
    return det;
}

// Standard Sylvester determinant: lc(f)^deg(g) * prod g(a) over roots a of f.
template <typename T>
T sylvester_det(const std::vector<T>& f, const std::vector<T>& g, const T& one) {
    size_t m = f.size() - 1, n = g.size() - 1;
    size_t dim = m + n;
    std::vector<std::vector<T>> s(dim, std::vector<T>(dim, T()));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j <= m; ++j) s[i][i + j] = f[m - j];
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j <= n; ++j) s[n + i][i + j] = g[n - j];
    return bareiss_det(s, one);
}

template <typename T>
T resultant_generic(std::vector<T> f, std::vector<T> g, const T& one) {
    auto trim = [](std::vector<T>& v) {
        while (!v.empty() && v.back().is_zero()) v.pop_back();
    };
    trim(f);
    trim(g);
    if (f.empty() || g.empty()) throw std::domain_error("resultant: zero polynomial");
    size_t df = f.size() - 1, dg = g.size() - 1;
    if (df == 0 && dg == 0) throw std::domain_error("resultant: both arguments constant");
    if (df == 0) {
        // res(c, g) = lc(g)^0 * c^deg(g)
        T r = one;
        for (size_t i = 0; i < dg; ++i) r = r * f[0];
        return r;
    }
    if (dg == 0) {
        T r = one;
        for (size_t i = 0; i < df; ++i) r = r * g[0];
        return r;
    }
    // res(f, g) = sylvester_det(g, f) under our convention.
    return sylvester_det(g, f, one);
}

struct ZWrap {
    BigInt v;
    bool is_zero() const { return v.is_zero(); }
    ZWrap operator*(const ZWrap& o) const { return {v * o.v}; }
    ZWrap operator-(const ZWrap& o) const { return {v - o.v}; }
    ZWrap divexact(const ZWrap& o) const { return {v.divexact(o.v)}; }
};

struct PWrap {
    IntPoly v;
    bool is_zero() const { return v.is_zero(); }
    PWrap operator*(const PWrap& o) const { return {v * o.v}; }
    PWrap operator-(const PWrap& o) const { return {v - o.v}; }
    PWrap divexact(const PWrap& o) const { return {v.divexact(o.v)}; }
};

}  // namespace

BigInt resultant_int(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) throw std::domain_error("resultant: zero polynomial");
    if (f.low_exp() < 0 || g.low_exp() < 0) throw std::domain_error("resultant: Laurent input");
    auto pack = [](const IntPoly& p) {
        std::vector<ZWrap> c(static_cast<size_t>(p.degree()) + 1);
        for (long e = 0; e <= p.degree(); ++e) c[static_cast<size_t>(e)] = {p.coeff(e)};
        return c;
    };
    return resultant_generic(pack(f), pack(g), ZWrap{BigInt(1)}).v;
}

IntPoly resultant_poly(const std::vector<IntPoly>& f, const std::vector<IntPoly>& g) {
    auto pack = [](const std::vector<IntPoly>& p) {
        std::vector<PWrap> c(p.size());
        for (size_t i = 0; i < p.size(); ++i) c[i] = {p[i]};
        return c;
    };
    return resultant_generic(pack(f), pack(g), PWrap{IntPoly(1)}).v;
}

}  // namespace batlas
