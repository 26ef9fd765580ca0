#pragma once

#include <string>
#include <vector>

#include "burau.hpp"
#include "intpoly.hpp"

namespace batlas {

// Freely reduced word in the generators a1, a2, a3.
class FreeWord {
public:
    struct Letter {
        int idx;   // 1..3
        long exp;  // nonzero
    };

    FreeWord() = default;
    static FreeWord generator(int idx, long exp = 1);
    static FreeWord parse(const std::string& text);  // tokens a1, a2^-1, ...

    const std::vector<Letter>& letters() const { return letters_; }
    bool is_identity() const { return letters_.empty(); }
    long total_degree() const;
    size_t length() const;  // sum of |exp|

    FreeWord operator*(const FreeWord& o) const;
    FreeWord inverse() const;
    friend bool operator==(const FreeWord& a, const FreeWord& b);

    std::string to_string() const;

    void push(Letter l);

private:
    std::vector<Letter> letters_;
};

// Element of the universal module A = Lambda e1 + Lambda e2 together with the
// degree component of A semidirect Z.
struct ModuleVec {
    IntPoly c1, c2;
    long deg = 0;

    friend bool operator==(const ModuleVec& a, const ModuleVec& b) {
        return a.c1 == b.c1 && a.c2 == b.c2 && a.deg == b.deg;
    }
    std::string to_string() const;
};

ModuleVec module_vec_add(const ModuleVec& a, const ModuleVec& b);  // adds vectors, keeps a.deg + b.deg

// Artin action: s1: a1 -> a1 a2 a1^-1, a2 -> a1; s2: a2 -> a2 a3 a2^-1, a3 -> a2.
// The last letter of the braid word acts first. Scalar twists must be divisible
// by 3 and act as conjugation by rho^(s/3), rho = a1 a2 a3. Words longer than
// length_cap letters abort with std::length_error.
FreeWord artin_apply(const BraidWord& b, const FreeWord& w, size_t length_cap = 100000);

// The homomorphism to A semidirect Z determined by a1 -> (0, 1), a2 -> (e1, 1),
// a3 -> (e1 + e2, 1), with (v1, d1)(v2, d2) = (v1 + t^d1 v2, d1 + d2).
ModuleVec psi(const FreeWord& w);

// [b(a_i) a_i^-1] as a module vector.
ModuleVec tilde_class(const BraidWord& b, int generator_idx, size_t length_cap = 100000);

// Multiply a module vector by the Burau matrix of a braid (left action on columns).
ModuleVec burau_act(const BurauMat& m, const ModuleVec& v);

}  // namespace batlas
