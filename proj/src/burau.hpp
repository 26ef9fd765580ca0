#pragma once

#include <array>
#include <string>

#include "intpoly.hpp"
#include "ring.hpp"

namespace batlas {

// Word in the Artin generators s1, s2 with an optional central scalar twist
// t^s. Adjacent letters with equal generator index are merged, zero exponents
// dropped. Matrices multiply in word order (leftmost letter leftmost).
struct BraidLetter {
    int gen;   // 1 or 2
    long exp;  // nonzero
};

class BraidWord {
public:
    BraidWord() = default;
    BraidWord(std::initializer_list<BraidLetter> letters, long twist = 0);

    static BraidWord sigma(int gen, long exp = 1);
    static BraidWord twist(long s);
    // Tokens: s1, s2, s1^-3, t^4, whitespace separated.
    static BraidWord parse(const std::string& text);

    const std::vector<BraidLetter>& letters() const { return letters_; }
    long scalar_twist() const { return twist_; }
    long bdeg() const;  // sum of exponents + 2 * twist
    bool is_identity() const { return letters_.empty() && twist_ == 0; }

    BraidWord operator*(const BraidWord& o) const;
    BraidWord inverse() const;
    friend bool operator==(const BraidWord& a, const BraidWord& b);

    std::string to_string() const;

private:
    void push(BraidLetter l);
    std::vector<BraidLetter> letters_;
    long twist_ = 0;
};

// 2x2 matrix over Laurent polynomials with the braid degree; the Burau image
// satisfies det = (-t)^bdeg.
struct BurauMat {
    std::array<IntPoly, 4> a;  // row major
    long bdeg = 0;

    static BurauMat identity();
    static BurauMat generator(int gen, long exp);  // sigma_i^exp, exact Laurent inverse for exp < 0

    const IntPoly& at(int r, int c) const { return a[2 * r + c]; }
    IntPoly& at(int r, int c) { return a[2 * r + c]; }
    IntPoly det() const;

    BurauMat operator*(const BurauMat& o) const;
    friend bool operator==(const BurauMat& x, const BurauMat& y);

    std::string to_string() const;
};

BurauMat burau_of_word(const BraidWord& w);

// 2x2 matrix over a quotient ring (specialized Burau image).
struct RingMat {
    std::array<RingElem, 4> a;
    long bdeg = 0;

    const RingElem& at(int r, int c) const { return a[2 * r + c]; }
    RingElem& at(int r, int c) { return a[2 * r + c]; }
    RingElem det() const;
    RingMat operator*(const RingMat& o) const;
    friend bool operator==(const RingMat& x, const RingMat& y);
    static RingMat identity(const RingPtr& ring);
};

// Entrywise evaluation t -> xi; xi must be a unit (negative exponents use xi^-1).
RingMat specialize(const BurauMat& m, const RingPtr& ring, const RingElem& xi);

// 2x2 integer matrices for the modular projection at t = -1.
struct IntMat {
    std::array<BigInt, 4> a;
    IntMat mul(const IntMat& o) const;
    friend bool operator==(const IntMat& x, const IntMat& y);
};

IntMat modular_project(const BraidWord& w);      // image in SL(2, Z)
IntMat psl_canonical(const IntMat& m);           // fix the sign of the first nonzero entry

}  // namespace batlas
