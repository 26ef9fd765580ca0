#include "localgeom.hpp"

#include <stdexcept>

namespace batlas {

const char* vertex_kind_name(VertexKind k) {
    switch (k) {
        case VertexKind::Z: return "Z";
        case VertexKind::I1: return "I1";
        case VertexKind::I2: return "I2";
        case VertexKind::II1: return "II1";
        case VertexKind::II2: return "II2";
        case VertexKind::IIex: return "II~";
        case VertexKind::III_plus: return "III+";
        case VertexKind::III_minus: return "III-";
        case VertexKind::III_p3: return "III(p3)";
        case VertexKind::IV: return "IV";
        case VertexKind::FULL: return "full";
    }
    return "?";
}

std::string Vec2R::to_string() const { return "(" + a.to_string() + ", " + b.to_string() + ")"; }

std::string Subspace::to_string() const {
    std::string s = "dim " + std::to_string(dim);
    for (const auto& v : basis) s += " " + v.to_string();
    return s;
}

bool Subspace::contains(const Vec2R& v) const {
    if (v.is_zero()) return true;
    if (dim == 0) return false;
    if (dim == 2) return true;
    // basis[0] is (1, y) or (0, 1)
    const Vec2R& g = basis[0];
    if (!g.a.is_zero()) {
        // v = v.a * g requires v.b == v.a * g.b
        return v.b == v.a * g.b;
    }
    return v.a.is_zero();
}

bool Subspace::contains(const Subspace& other) const {
    for (const auto& v : other.basis)
        if (!contains(v)) return false;
    return true;
}

Subspace span_columns(const RingPtr& ring, const std::vector<Vec2R>& cols) {
    if (!ring->is_field()) throw std::domain_error("span_columns: ring must be a field");
    // Echelonize in ring^2: pivot on the first coordinate, then the second.
    std::optional<Vec2R> row1;  // leading 1 in coordinate a
    std::optional<Vec2R> row2;  // leading 1 in coordinate b
    for (const auto& c : cols) {
        Vec2R v = c;
        if (row1) {
            RingElem f = v.a;
            v.a = v.a - f * row1->a;
            v.b = v.b - f * row1->b;
        }
        if (row2 && !v.b.is_zero()) {
            RingElem f = v.b;
            v.b = v.b - f * row2->b;
        }
        if (v.is_zero()) continue;
        if (!v.a.is_zero()) {
            RingElem inv = v.a.inverse();
            row1 = Vec2R{RingElem::one(ring), inv * v.b};
        } else {
            RingElem inv = v.b.inverse();
            row2 = Vec2R{RingElem::zero(ring), RingElem::one(ring)};
            (void)inv;
        }
        if (row1 && row2) break;
    }
    Subspace s;
    if (row1 && row2) {
        s.dim = 2;
        s.basis = {Vec2R{RingElem::one(ring), RingElem::zero(ring)}, Vec2R{RingElem::zero(ring), RingElem::one(ring)}};
    } else if (row1) {
        s.dim = 1;
        s.basis = {*row1};
    } else if (row2) {
        s.dim = 1;
        s.basis = {*row2};
    }
    return s;
}

namespace {

RingElem neg_xi_pow(const RingElem& xi, long m) {
    RingElem v = xi.pow(static_cast<long long>(m));
    return (m % 2 + 2) % 2 == 0 ? v : -v;
}

// f_m(-xi) = sum_{k=0}^{m-1} (-xi)^k; geometric closed form when -xi - 1 is a
// unit (always the case here: xi != +-1 over a field), term sum otherwise.
RingElem gauss_at_neg_xi(const RingPtr& ring, const RingElem& xi, long m) {
    if (m < 0) throw std::invalid_argument("gauss_at_neg_xi: m >= 0");
    RingElem neg = -xi;
    RingElem denom = neg - RingElem::one(ring);
    if (auto inv = denom.try_inverse())
        return (neg.pow(static_cast<long long>(m)) - RingElem::one(ring)) * *inv;
    RingElem acc = RingElem::zero(ring);
    RingElem pw = RingElem::one(ring);
    for (long k = 0; k < m; ++k) {
        acc = acc + pw;
        pw = pw * neg;
    }
    return acc;
}

Vec2R canonical_line_generator(const Subspace& s) { return s.basis.at(0); }

unsigned order_of(const RingElem& x, const char* what) {
    auto o = mul_order(x);
    if (!o || !o->fits_u64()) throw std::domain_error(std::string(what) + ": order not finite");
    return static_cast<unsigned>(o->abs_u64());
}

}  // namespace

VertexClass classify_trivalent(long m, long n, long r, long s, const RingPtr& ring, const RingElem& xi) {
    if (!ring->is_field()) throw std::domain_error("classify_trivalent: ring must be a field");
    if (m < 1 || n < 1) throw std::invalid_argument("classify_trivalent: widths must be >= 1");
    RingElem one = RingElem::one(ring);
    if (xi == one || xi == -one) throw std::domain_error("classify_trivalent: xi must differ from +-1");

    RingElem xr = xi.pow(static_cast<long long>(r));
    RingElem xs = xi.pow(static_cast<long long>(s));
    RingElem a11 = xr * neg_xi_pow(xi, m) - one;
    RingElem a12 = xr * gauss_at_neg_xi(ring, xi, m);
    RingElem a13 = xs - one;
    RingElem a21 = RingElem::zero(ring);
    RingElem a22 = xr - one;
    RingElem a23 = xs * xi * gauss_at_neg_xi(ring, xi, n);
    RingElem a24 = xs * neg_xi_pow(xi, n) - one;

    std::vector<Vec2R> cols = {{a11, a21}, {a12, a22}, {a13, a23}, {RingElem::zero(ring), a24}};
    Subspace span = span_columns(ring, cols);

    VertexClass out;
    out.dim = span.dim;
    if (span.dim == 0) {
        out.kind = VertexKind::Z;
        return out;
    }
    if (span.dim == 2) {
        out.kind = VertexKind::FULL;
        return out;
    }
    out.generator = canonical_line_generator(span);
    bool row1_zero = a11.is_zero() && a12.is_zero() && a13.is_zero();
    bool row2_zero = a22.is_zero() && a23.is_zero() && a24.is_zero();
    if (row1_zero) {
        out.kind = VertexKind::I1;
    } else if (row2_zero) {
        out.kind = VertexKind::I2;
    } else if (xr.is_one()) {
        out.kind = VertexKind::II1;
    } else if (xs.is_one()) {
        out.kind = VertexKind::II2;
    } else {
        RingElem phi3 = xi * xi + xi + one;
        if (!phi3.is_zero()) throw std::logic_error("classify_trivalent: rank-1 case without xi^2+xi+1 = 0");
        out.kind = VertexKind::IIex;
    }
    return out;
}

namespace {

VertexClass classify_monovalent(long r, const RingPtr& ring, const RingElem& xi, bool black) {
    if (!ring->is_field()) throw std::domain_error("classify_monovalent: ring must be a field");
    RingElem one = RingElem::one(ring);
    RingElem xr = xi.pow(static_cast<long long>(r));
    RingElem xi2 = xi * xi;
    // sigma_2 sigma_1 = [-t, 1; -t^2, 0], sigma_2 sigma_1 sigma_2 = [0, -t; -t^2, 0]
    RingElem m00 = black ? -xi : RingElem::zero(ring);
    RingElem m01 = black ? one : -xi;
    RingElem m10 = -xi2;
    RingElem m11 = RingElem::zero(ring);

    std::vector<Vec2R> cols = {{xr * m00 - one, xr * m10}, {xr * m01, xr * m11 - one}};
    Subspace span = span_columns(ring, cols);
    VertexClass out;
    out.dim = span.dim;
    if (span.dim == 2) {
        out.kind = VertexKind::FULL;
        return out;
    }
    if (span.dim != 1) throw std::logic_error("classify_monovalent: impossible rank 0");
    out.generator = canonical_line_generator(span);
    unsigned M = order_of(xi, "classify_monovalent");
    if (black) {
        uint64_t p = ring->modulus();
        if (p == 3) {
            if (M % 3 == 0 || (r + 1) % static_cast<long>(M) != 0)
                throw std::logic_error("classify_monovalent_black: p=3 conditions violated");
            out.kind = VertexKind::III_p3;
        } else {
            if (M % 3 != 0) throw std::logic_error("classify_monovalent_black: 3 | M required");
            long rm = ((r + 1) % static_cast<long>(M) + static_cast<long>(M)) % static_cast<long>(M);
            if (rm == static_cast<long>(M / 3)) out.kind = VertexKind::III_plus;
            else if (rm == static_cast<long>(2 * M / 3)) out.kind = VertexKind::III_minus;
            else throw std::logic_error("classify_monovalent_black: r+1 not +-M/3 mod M");
        }
    } else {
        if (M % 2 == 0) throw std::logic_error("classify_monovalent_white: M must be odd");
        long rm = ((2 * r + 3) % static_cast<long>(M) + static_cast<long>(M)) % static_cast<long>(M);
        if (rm != 0) throw std::logic_error("classify_monovalent_white: M | 2r+3 required");
        out.kind = VertexKind::IV;
    }
    return out;
}

}  // namespace

VertexClass classify_monovalent_black(long r, const RingPtr& ring, const RingElem& xi) {
    return classify_monovalent(r, ring, xi, true);
}

VertexClass classify_monovalent_white(long r, const RingPtr& ring, const RingElem& xi) {
    return classify_monovalent(r, ring, xi, false);
}

RingElem specialize_poly(const IntPoly& p, const RingPtr& ring, const RingElem& xi) {
    if (p.is_zero()) return RingElem::zero(ring);
    long lo = p.low_exp();
    IntPoly shifted = lo < 0 ? p.shifted(-lo) : p;
    RingElem acc = RingElem::zero(ring);
    std::vector<uint64_t> c = shifted.reduce_mod(ring->modulus());
    for (size_t i = c.size(); i-- > 0;) acc = acc * xi + RingElem::scalar(ring, c[i]);
    if (lo < 0) acc = acc * xi.pow(static_cast<long long>(lo));
    return acc;
}

Vec2R specialize_vec(const ModuleVec& v, const RingPtr& ring, const RingElem& xi) {
    return Vec2R{specialize_poly(v.c1, ring, xi), specialize_poly(v.c2, ring, xi)};
}

std::vector<Vec2R> image_submodule_generators(const std::vector<BraidWord>& gens, const RingPtr& ring,
                                              const RingElem& xi) {
    std::vector<Vec2R> cols;
    for (const auto& w : gens) {
        RingMat m = specialize(burau_of_word(w), ring, xi);
        cols.push_back({m.at(0, 0) - RingElem::one(ring), m.at(1, 0)});
        cols.push_back({m.at(0, 1), m.at(1, 1) - RingElem::one(ring)});
    }
    return cols;
}

Subspace image_submodule(const std::vector<BraidWord>& gens, const RingPtr& ring, const RingElem& xi) {
    return span_columns(ring, image_submodule_generators(gens, ring, xi));
}

Subspace tilde_image_submodule(const std::vector<BraidWord>& gens, const RingPtr& ring, const RingElem& xi) {
    std::vector<Vec2R> cols = image_submodule_generators(gens, ring, xi);
    for (const auto& w : gens) cols.push_back(specialize_vec(tilde_class(w, 1), ring, xi));
    return span_columns(ring, cols);
}

unsigned distance_modulus(CharMode mode, unsigned N) {
    return mode == CharMode::char2 ? N : ee_involution(0, N);
}

bool type_valid_for(VertexKind type, CharMode mode, unsigned M) {
    switch (type) {
        case VertexKind::I1:
        case VertexKind::II1:
            return true;
        case VertexKind::III_plus:
        case VertexKind::III_minus:
            return mode != CharMode::char3 && M % 3 == 0;
        case VertexKind::III_p3:
            return mode == CharMode::char3 && M % 3 != 0;
        case VertexKind::IV:
            return M % 2 == 1;
        default:
            return false;
    }
}

IntPoly distance_coefficient(VertexKind type, CharMode mode, unsigned M) {
    if (!type_valid_for(type, mode, M)) throw std::invalid_argument("distance_coefficient: type invalid for mode/M");
    switch (type) {
        case VertexKind::I1:
            return IntPoly();
        case VertexKind::II1:
            return IntPoly::t_power(static_cast<long>(M) - 1) + IntPoly(1);  // t^-1 + 1 mod t^M = 1
        case VertexKind::III_plus:
            return -IntPoly::t_power((static_cast<long>(M) / 3 - 1 + static_cast<long>(M)) % static_cast<long>(M));
        case VertexKind::III_minus:
            return -IntPoly::t_power(2 * static_cast<long>(M) / 3 - 1);
        case VertexKind::III_p3:
            return -IntPoly::t_power(static_cast<long>(M) - 1);
        case VertexKind::IV:
            return IntPoly::t_power((static_cast<long>(M) - 1) / 2);
        default:
            throw std::invalid_argument("distance_coefficient: not a boundary-vertex type");
    }
}

IntPoly distance_equation(VertexKind type_u, VertexKind type_v, unsigned d, unsigned N, CharMode mode) {
    unsigned M = distance_modulus(mode, N);
    IntPoly a_u = distance_coefficient(type_u, mode, M);
    IntPoly a_v = distance_coefficient(type_v, mode, M);
    IntPoly f_d = IntPoly::gauss_sum(static_cast<long>(d)).substitute_neg_t();
    IntPoly e = f_d * (parse_poly("t+1") * a_v - IntPoly(1)) - (a_v - a_u);
    if (e.is_zero()) return e;
    if (e.low_exp() < 0) e = e.shifted(-e.low_exp());
    return e;
}

}  // namespace batlas
