#include "skeleton.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace batlas {

Perm perm_inverse(const Perm& p) {
    Perm inv(p.size());
    for (uint32_t i = 0; i < p.size(); ++i) inv[p[i]] = i;
    return inv;
}

std::vector<std::vector<uint32_t>> perm_cycles(const Perm& p) {
    std::vector<std::vector<uint32_t>> cycles;
    std::vector<bool> seen(p.size(), false);
    for (uint32_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        std::vector<uint32_t> cyc;
        uint32_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            cyc.push_back(j);
            j = p[j];
        }
        cycles.push_back(std::move(cyc));
    }
    return cycles;
}

namespace {

void check_perm(const Perm& p, uint32_t n, const char* name) {
    if (p.size() != n) throw std::invalid_argument(std::string("Skeleton: ") + name + " has wrong size");
    std::vector<bool> hit(n, false);
    for (uint32_t v : p) {
        if (v >= n || hit[v]) throw std::invalid_argument(std::string("Skeleton: ") + name + " is not a permutation");
        hit[v] = true;
    }
}

}  // namespace

Skeleton Skeleton::from_permutations(uint32_t n_edges, Perm black, Perm white) {
    if (n_edges == 0) throw std::invalid_argument("Skeleton: empty edge set");
    check_perm(black, n_edges, "black");
    check_perm(white, n_edges, "white");
    for (const auto& c : perm_cycles(black))
        if (c.size() != 1 && c.size() != 3)
            throw std::invalid_argument("Skeleton: black valency must be 1 or 3");
    for (const auto& c : perm_cycles(white))
        if (c.size() != 1 && c.size() != 2)
            throw std::invalid_argument("Skeleton: white valency must be 1 or 2");

    Skeleton sk;
    sk.n_ = n_edges;
    // white = black then region, so region[black[e]] = white[e]
    sk.region_.assign(n_edges, 0);
    for (uint32_t e = 0; e < n_edges; ++e) sk.region_[black[e]] = white[e];
    sk.black_ = std::move(black);
    sk.white_ = std::move(white);

    // connectedness under <black, white>
    std::vector<bool> seen(n_edges, false);
    std::vector<uint32_t> stack = {0};
    seen[0] = true;
    uint32_t count = 0;
    while (!stack.empty()) {
        uint32_t e = stack.back();
        stack.pop_back();
        ++count;
        for (uint32_t nb : {sk.black_[e], sk.white_[e]}) {
            if (!seen[nb]) {
                seen[nb] = true;
                stack.push_back(nb);
            }
        }
    }
    if (count != n_edges) throw std::invalid_argument("Skeleton: edge set is not transitive");
    return sk;
}

Skeleton Skeleton::from_permutations(uint32_t n_edges, Perm black, Perm white, const Perm& region) {
    Skeleton sk = from_permutations(n_edges, std::move(black), std::move(white));
    if (region != sk.region_)
        throw std::invalid_argument("Skeleton: region permutation violates white = region o black");
    return sk;
}

std::string Skeleton::to_dot() const {
    auto blacks = perm_cycles(black_);
    auto whites = perm_cycles(white_);
    auto regions = perm_cycles(region_);
    std::vector<uint32_t> black_of(n_), white_of(n_), region_of(n_);
    for (uint32_t i = 0; i < blacks.size(); ++i)
        for (uint32_t e : blacks[i]) black_of[e] = i;
    for (uint32_t i = 0; i < whites.size(); ++i)
        for (uint32_t e : whites[i]) white_of[e] = i;
    for (uint32_t i = 0; i < regions.size(); ++i)
        for (uint32_t e : regions[i]) region_of[e] = i;

    std::ostringstream out;
    out << "graph skeleton {\n";
    out << "  // edges are cosets; labels carry the edge id and its region\n";
    for (uint32_t i = 0; i < blacks.size(); ++i)
        out << "  b" << i << " [shape=point, width=0.12, label=\"\"];\n";
    for (uint32_t i = 0; i < whites.size(); ++i)
        out << "  w" << i << " [shape=circle, width=0.10, label=\"\"];\n";
    for (uint32_t e = 0; e < n_; ++e)
        out << "  b" << black_of[e] << " -- w" << white_of[e] << " [label=\"e" << e << " r" << region_of[e]
            << "\"];\n";
    out << "}\n";
    return out.str();
}

SkelSignature signature_of(const Skeleton& sk) {
    SkelSignature sig;
    sig.index = sk.n_edges();
    auto blacks = perm_cycles(sk.black());
    auto whites = perm_cycles(sk.white());
    auto regions = perm_cycles(sk.region());
    for (const auto& c : blacks)
        if (c.size() == 1) ++sig.c3;
    for (const auto& c : whites)
        if (c.size() == 1) ++sig.c2;
    std::map<uint32_t, uint32_t> mult;
    uint32_t total = 0;
    for (const auto& c : regions) {
        ++mult[static_cast<uint32_t>(c.size())];
        total += static_cast<uint32_t>(c.size());
    }
    if (total != sig.index) throw std::logic_error("signature: widths do not sum to the index");
    for (auto& [w, m] : mult) sig.widths.push_back({w, m});
    long chi = static_cast<long>(blacks.size()) + static_cast<long>(whites.size()) -
               static_cast<long>(sk.n_edges()) + static_cast<long>(regions.size());
    if (chi % 2 != 0) throw std::logic_error("signature: odd Euler characteristic");
    sig.genus = (2 - chi) / 2;
    return sig;
}

std::string SkelSignature::partition_string() const {
    std::string s;
    for (const auto& [w, m] : widths) {
        if (!s.empty()) s += " ";
        s += std::to_string(w) + "^" + std::to_string(m);
    }
    return s;
}

std::string SkelSignature::to_string() const {
    return "(" + std::to_string(index) + "; " + std::to_string(c2) + ", " + std::to_string(c3) + "; " +
           partition_string() + "; genus " + std::to_string(genus) + ")";
}

std::string SkelSignature::to_json() const {
    std::string s = "{\"index\":" + std::to_string(index) + ",\"c2\":" + std::to_string(c2) +
                    ",\"c3\":" + std::to_string(c3) + ",\"widths\":[";
    for (size_t i = 0; i < widths.size(); ++i) {
        if (i) s += ",";
        s += "[" + std::to_string(widths[i].first) + "," + std::to_string(widths[i].second) + "]";
    }
    s += "],\"genus\":" + std::to_string(genus) + "}";
    return s;
}

SkelSignature parse_signature(const std::string& text) {
    SkelSignature sig;
    std::string body = text;
    body.erase(std::remove_if(body.begin(), body.end(), [](char c) { return c == '(' || c == ')'; }), body.end());
    std::vector<std::string> parts;
    std::string cur;
    for (char c : body) {
        if (c == ';') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    if (parts.size() != 4) throw std::invalid_argument("parse_signature: expected 4 fields");
    sig.index = static_cast<uint32_t>(std::stoul(parts[0]));
    sig.c2 = static_cast<uint32_t>(std::stoul(parts[1]));
    sig.c3 = static_cast<uint32_t>(std::stoul(parts[2]));
    std::istringstream widths(parts[3]);
    std::string tok;
    long region_count = 0;
    uint32_t width_sum = 0;
    while (widths >> tok) {
        size_t caret = tok.find('^');
        uint32_t w = static_cast<uint32_t>(std::stoul(tok.substr(0, caret)));
        uint32_t m = caret == std::string::npos ? 1 : static_cast<uint32_t>(std::stoul(tok.substr(caret + 1)));
        sig.widths.push_back({w, m});
        region_count += m;
        width_sum += w * m;
    }
    std::sort(sig.widths.begin(), sig.widths.end());
    if (width_sum != sig.index) throw std::invalid_argument("parse_signature: widths do not sum to the index");
    if ((sig.index - sig.c3) % 3 != 0 || (sig.index - sig.c2) % 2 != 0)
        throw std::invalid_argument("parse_signature: inconsistent torsion counts");
    long vertex_count = sig.c3 + (sig.index - sig.c3) / 3 + sig.c2 + (sig.index - sig.c2) / 2;
    long chi = vertex_count - static_cast<long>(sig.index) + region_count;
    if (chi % 2 != 0) throw std::invalid_argument("parse_signature: odd Euler characteristic");
    sig.genus = (2 - chi) / 2;
    return sig;
}

}  // namespace batlas
