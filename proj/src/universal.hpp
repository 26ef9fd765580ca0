#pragma once

#include <array>
#include <optional>

#include "localgeom.hpp"
#include "skeleton.hpp"

namespace batlas {

enum class EnumMode { extended, braid };

// Coset enumeration task for the universal subgroup G_V, V = span(v), in the
// specialized braid image. Classes are scalar-orbits of the seed row covector
// v_perp = (b, -a) under right multiplication by the generator matrices; the
// scalar set is all powers of xi in extended mode and the cubes in braid mode.
struct EnumTask {
    RingPtr ring;
    RingElem xi;
    Vec2R v;  // defaults to e2 when constructed via make()
    EnumMode mode = EnumMode::extended;
    uint32_t cap = 1000000;
    bool expand_with_artin = false;  // expand with {s1, s2} instead of {s2 s1, s1 s2 s1}

    static EnumTask make(const RingPtr& ring, EnumMode mode = EnumMode::extended);
};

struct EnumResult {
    bool cap_exceeded = false;
    uint32_t classes = 0;
    std::vector<std::vector<uint64_t>> class_keys;  // canonical covectors in discovery order
    Perm map_black;   // right multiplication by s2 s1
    Perm map_white;   // right multiplication by s2 s1^2
    Perm map_region;  // right multiplication by s1
    std::vector<std::array<uint32_t, 3>> discovery;  // (class, parent, generator slot)
    std::optional<Skeleton> skeleton;
    std::optional<SkelSignature> signature;
    unsigned scalar_order = 0;  // size of the scalar set used
};

EnumResult enumerate_universal(const EnumTask& task);

// The direct procedure: breadth-first search over full matrices with the
// linear equivalence v_perp (M1 - t^s M2) = 0. Used as a cross-check.
EnumResult enumerate_universal_fullmatrix(const EnumTask& task);

// True iff span(v2) lies in the orbit of span(v1) under the group generated by
// the specialized s1, s2 (scalars act trivially on lines, so the mode does not
// change the answer; it is accepted for symmetry with the enumeration API).
bool line_orbit_conjugacy(const RingPtr& ring, const RingElem& xi, const Vec2R& v1, const Vec2R& v2,
                          EnumMode mode = EnumMode::extended);

// Exactly one monovalent vertex of each colour, one monogon, hexagons otherwise.
bool six_significant_check(const SkelSignature& sig);

}  // namespace batlas
