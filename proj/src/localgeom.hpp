#pragma once

#include <optional>
#include <string>
#include <vector>

#include "burau.hpp"
#include "freegroup.hpp"
#include "ring.hpp"

namespace batlas {

enum class VertexKind { Z, I1, I2, II1, II2, IIex, III_plus, III_minus, III_p3, IV, FULL };

const char* vertex_kind_name(VertexKind k);

// Column vector a*e1 + b*e2 over a quotient ring.
struct Vec2R {
    RingElem a, b;
    friend bool operator==(const Vec2R& x, const Vec2R& y) { return x.a == y.a && x.b == y.b; }
    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    std::string to_string() const;
};

// Subspace of ring^2 in reduced echelon form; rank statements need a field.
struct Subspace {
    int dim = 0;
    std::vector<Vec2R> basis;

    bool contains(const Vec2R& v) const;
    bool contains(const Subspace& other) const;
    friend bool operator==(const Subspace& x, const Subspace& y) { return x.dim == y.dim && x.basis == y.basis; }
    std::string to_string() const;
};

Subspace span_columns(const RingPtr& ring, const std::vector<Vec2R>& cols);

struct VertexClass {
    VertexKind kind = VertexKind::FULL;
    int dim = 2;
    std::optional<Vec2R> generator;  // canonical projective generator when dim == 1
};

// Rank analysis of [t^r sigma_1^m - id | t^s sigma_2^n - id] specialized at xi.
// Requires a field and xi != +-1.
VertexClass classify_trivalent(long m, long n, long r, long s, const RingPtr& ring, const RingElem& xi);

// Monovalent vertices: t^r (sigma_2 sigma_1) resp. t^r (sigma_2 sigma_1 sigma_2).
VertexClass classify_monovalent_black(long r, const RingPtr& ring, const RingElem& xi);
VertexClass classify_monovalent_white(long r, const RingPtr& ring, const RingElem& xi);

// Span of the columns of beta(xi) - id over all generator words (field only).
Subspace image_submodule(const std::vector<BraidWord>& gens, const RingPtr& ring, const RingElem& xi);
// Raw generating columns, usable over non-field rings; no dimension claim.
std::vector<Vec2R> image_submodule_generators(const std::vector<BraidWord>& gens, const RingPtr& ring,
                                              const RingElem& xi);
// image_submodule plus the specialized tilde classes [beta(a1) a1^-1].
Subspace tilde_image_submodule(const std::vector<BraidWord>& gens, const RingPtr& ring, const RingElem& xi);

RingElem specialize_poly(const IntPoly& p, const RingPtr& ring, const RingElem& xi);
Vec2R specialize_vec(const ModuleVec& v, const RingPtr& ring, const RingElem& xi);

enum class CharMode { char0, char2, char3, generic_odd };

bool type_valid_for(VertexKind type, CharMode mode, unsigned M);

// a_v(t) with exponents reduced into 0..M-1.
IntPoly distance_coefficient(VertexKind type, CharMode mode, unsigned M);

// E(t) = f_d(-t) ((t+1) a_v(t) - 1) - (a_v(t) - a_u(t)); the linear-dependence
// equation between the local generators of two boundary vertices at distance d.
IntPoly distance_equation(VertexKind type_u, VertexKind type_v, unsigned d, unsigned N, CharMode mode);

unsigned distance_modulus(CharMode mode, unsigned N);  // M = ee_char(N)

}  // namespace batlas
