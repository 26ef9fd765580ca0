#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace batlas {

using Perm = std::vector<uint32_t>;

Perm perm_inverse(const Perm& p);
std::vector<std::vector<uint32_t>> perm_cycles(const Perm& p);

// Connected bipartite ribbon graph given by its edge permutations. Black
// cycles have length 1 or 3, white cycles length 1 or 2, and the permutations
// satisfy white = "black, then region" edgewise: region[black[e]] = white[e].
class Skeleton {
public:
    // region is derived from the other two; throws std::invalid_argument on a
    // valency violation or a disconnected edge set.
    static Skeleton from_permutations(uint32_t n_edges, Perm black, Perm white);
    // validates the supplied region permutation against the derived one
    static Skeleton from_permutations(uint32_t n_edges, Perm black, Perm white, const Perm& region);

    uint32_t n_edges() const { return n_; }
    const Perm& black() const { return black_; }
    const Perm& white() const { return white_; }
    const Perm& region() const { return region_; }

    std::string to_dot() const;  // deterministic, byte-stable

private:
    Skeleton() = default;
    uint32_t n_ = 0;
    Perm black_, white_, region_;
};

// Index, torsion counts, cusp widths and genus of a skeleton.
struct SkelSignature {
    uint32_t index = 0;
    uint32_t c2 = 0;  // white fixed points
    uint32_t c3 = 0;  // black fixed points
    std::vector<std::pair<uint32_t, uint32_t>> widths;  // (width, multiplicity), ascending
    long genus = 0;

    std::string partition_string() const;  // "1^2 12^1"
    std::string to_string() const;         // "(14; 0, 2; 1^2 12^1)" style
    std::string to_json() const;
    friend bool operator==(const SkelSignature& a, const SkelSignature& b) {
        return a.index == b.index && a.c2 == b.c2 && a.c3 == b.c3 && a.widths == b.widths && a.genus == b.genus;
    }
};

SkelSignature signature_of(const Skeleton& sk);

// Parse "(14;0;2;1^2 12^1)" (with optional genus omitted) into a signature
// with genus recomputed from the Euler characteristic.
SkelSignature parse_signature(const std::string& text);

}  // namespace batlas
