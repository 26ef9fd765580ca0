#pragma once

#include <map>
#include <optional>
#include <set>
#include <tuple>

#include "intfactor.hpp"
#include "localgeom.hpp"
#include "resultant.hpp"
#include "tables.hpp"
#include "universal.hpp"

namespace batlas {

enum class Verdict { unset, genus0, genusPos, beyondCap };

struct Candidate {
    uint64_t p = 0;
    unsigned N = 0;
    std::vector<uint64_t> minpoly;  // monic, ascending coefficients over F_p
    std::set<std::tuple<unsigned, VertexKind, VertexKind>> witnesses;  // (d, T_u, T_v)
    Verdict verdict = Verdict::unset;
    std::optional<SkelSignature> signature;

    std::string minpoly_text() const;
    std::string key() const;  // "p=13 N=12 t+2"
};

struct SearchWarning {
    unsigned N = 0;
    unsigned d = 0;
    VertexKind tu = VertexKind::I1, tv = VertexKind::I1;
    std::string message;
};

struct KappaReport {
    std::vector<VertexKind> valid_types;
    std::vector<std::pair<VertexKind, VertexKind>> edges;  // witnessed unordered pairs
    std::vector<VertexKind> best_clique;
    unsigned kappa = 0;
    bool kept = false;
};

struct SearchConfig {
    unsigned n_min = 11;
    unsigned n_max = 26;
    bool char0_only = false;
    uint32_t enum_cap = 1000000;
    FactorConfig factor{1000000, 200000};
};

struct Char0Cell {
    unsigned N, d;
    VertexKind tu, tv;
};

struct SearchResult {
    SearchConfig config;
    std::vector<Candidate> candidates;            // canonical order: (N, p, coefficients)
    std::map<std::string, KappaReport> kappa;     // keyed by Candidate::key(), set by kappa_filter
    std::vector<std::string> dropped;             // keys removed by the filter
    std::vector<SearchWarning> warnings;
    uint64_t char0_cells_checked = 0;
    std::vector<Char0Cell> char0_anomalies;       // cells with a vanishing resultant (expected none)
};

// Resultant-driven candidate generation over 11 <= N <= 26 (or a subrange).
// In char-0 mode only the nonvanishing of every resultant is recorded; in the
// positive-characteristic mode the resultants' prime divisors >= 5 feed a gcd
// pipeline over F_p, with characteristics 2 and 3 scanned separately.
SearchResult candidate_search(const SearchConfig& cfg);

// Coexistence-clique pruning: keep a triple iff N < 6 + kappa.
void kappa_filter(SearchResult& sr);

// Genus verdicts by coset enumeration (extended mode, v = e2).
void classify_candidates(SearchResult& sr);

// Comparison against the built-in fixture tables.
struct TableExpectation {
    bool ok = false;
    std::vector<std::string> missing;       // fixture triples absent from the kept candidates
    std::vector<std::string> misclassified; // fixture triples with the wrong verdict or signature
    std::vector<std::string> extras;        // kept candidates outside the fixtures (reported, not an error)
    size_t genus0_count = 0;
    size_t genuspos_count = 0;
};
TableExpectation expect_tables(const SearchResult& sr);

// Resultants R_n(xi) of the cyclotomic Phi_n(lambda) against the
// characteristic polynomial of the specialized t s1^-1 s2, reduced modulo
// Phi_target(xi); target 14 or 18.
struct N79Report {
    unsigned target = 0;
    std::vector<std::pair<unsigned, IntPoly>> residues;
    bool all_nonzero = false;
};
N79Report n79_check(unsigned target);

const char* verdict_name(Verdict v);

}  // namespace batlas
