#include "universal.hpp"

#include <map>
#include <stdexcept>

namespace batlas {

namespace {

struct Cov {
    RingElem a, b;
};

std::vector<uint64_t> flatten(const Cov& c) {
    std::vector<uint64_t> key = c.a.value();
    const auto& vb = c.b.value();
    key.insert(key.end(), vb.begin(), vb.end());
    return key;
}

Cov unflatten(const RingPtr& ring, const std::vector<uint64_t>& key) {
    size_t d = ring->deg();
    std::vector<uint64_t> a(key.begin(), key.begin() + d), b(key.begin() + d, key.end());
    return Cov{RingElem(ring, std::move(a)), RingElem(ring, std::move(b))};
}

Cov mul_cov(const Cov& w, const RingMat& m) {
    return Cov{w.a * m.at(0, 0) + w.b * m.at(1, 0), w.a * m.at(0, 1) + w.b * m.at(1, 1)};
}

std::vector<RingElem> scalar_set(const RingPtr& ring, const RingElem& xi, EnumMode mode, unsigned M) {
    RingElem step = mode == EnumMode::braid ? xi * xi * xi : xi;
    std::vector<RingElem> scalars;
    RingElem cur = RingElem::one(ring);
    for (unsigned k = 0; k < M; ++k) {
        scalars.push_back(cur);
        cur = cur * step;
        if (cur.is_one()) break;
    }
    return scalars;
}

std::vector<uint64_t> canonical_key(const Cov& w, const std::vector<RingElem>& scalars) {
    std::vector<uint64_t> best;
    for (const auto& c : scalars) {
        std::vector<uint64_t> cand = flatten(Cov{c * w.a, c * w.b});
        if (best.empty() || cand < best) best = std::move(cand);
    }
    return best;
}

struct GenSet {
    std::vector<RingMat> expand;            // generator matrices used for the search
    RingMat black, white, region;           // s2 s1, s2 s1^2, s1
};

GenSet build_gens(const EnumTask& task) {
    GenSet g;
    RingMat s1 = specialize(burau_of_word(BraidWord::sigma(1)), task.ring, task.xi);
    RingMat s2 = specialize(burau_of_word(BraidWord::sigma(2)), task.ring, task.xi);
    g.black = s2 * s1;
    g.white = g.black * s1;
    g.region = s1;
    if (task.expand_with_artin) {
        g.expand = {s1, s2};
    } else {
        g.expand = {g.black, s1 * s2 * s1};
    }
    return g;
}

void validate_task(const EnumTask& task, unsigned& M_out) {
    if (!task.ring) throw std::invalid_argument("enumerate: null ring");
    if (!task.xi.try_inverse()) throw std::domain_error("enumerate: xi is not a unit");
    if (task.v.is_zero()) throw std::invalid_argument("enumerate: v must be nonzero");
    if (!task.v.a.try_inverse() && !task.v.b.try_inverse())
        throw std::invalid_argument("enumerate: v needs at least one unit coordinate");
    auto M = mul_order(task.xi);
    if (!M || !M->fits_u64()) throw std::domain_error("enumerate: xi has no finite order");
    M_out = static_cast<unsigned>(M->abs_u64());
}

void finish_result(EnumResult& res, const RingPtr& ring, const std::vector<RingElem>& scalars, const GenSet& gens,
                   const std::map<std::vector<uint64_t>, uint32_t>& index,
                   const std::vector<std::vector<uint64_t>>& keys) {
    uint32_t n = static_cast<uint32_t>(keys.size());
    res.classes = n;
    res.class_keys = keys;
    auto lookup = [&](const Cov& w) {
        auto it = index.find(canonical_key(w, scalars));
        if (it == index.end()) throw std::logic_error("enumerate: orbit not closed under a permutation map");
        return it->second;
    };
    res.map_black.resize(n);
    res.map_white.resize(n);
    res.map_region.resize(n);
    for (uint32_t i = 0; i < n; ++i) {
        Cov w = unflatten(ring, keys[i]);
        res.map_black[i] = lookup(mul_cov(w, gens.black));
        res.map_white[i] = lookup(mul_cov(w, gens.white));
        res.map_region[i] = lookup(mul_cov(w, gens.region));
    }
    Skeleton sk = Skeleton::from_permutations(n, res.map_black, res.map_white, res.map_region);
    res.signature = signature_of(sk);
    res.skeleton = std::move(sk);
}

}  // namespace

EnumTask EnumTask::make(const RingPtr& ring, EnumMode mode) {
    EnumTask t;
    t.ring = ring;
    t.xi = RingElem::t_class(ring);
    t.v = Vec2R{RingElem::zero(ring), RingElem::one(ring)};
    t.mode = mode;
    return t;
}

EnumResult enumerate_universal(const EnumTask& task) {
    unsigned M = 0;
    validate_task(task, M);
    std::vector<RingElem> scalars = scalar_set(task.ring, task.xi, task.mode, M);
    GenSet gens = build_gens(task);

    EnumResult res;
    res.scalar_order = static_cast<unsigned>(scalars.size());
    Cov seed{task.v.b, -task.v.a};

    std::map<std::vector<uint64_t>, uint32_t> index;
    std::vector<std::vector<uint64_t>> keys;
    std::vector<uint32_t> queue;
    keys.push_back(canonical_key(seed, scalars));
    index.emplace(keys[0], 0);
    queue.push_back(0);
    res.discovery.push_back({0, 0, 0});

    for (size_t qi = 0; qi < queue.size(); ++qi) {
        uint32_t cur = queue[qi];
        Cov w = unflatten(task.ring, keys[cur]);
        for (uint32_t gi = 0; gi < gens.expand.size(); ++gi) {
            Cov next = mul_cov(w, gens.expand[gi]);
            std::vector<uint64_t> key = canonical_key(next, scalars);
            auto [it, inserted] = index.emplace(key, static_cast<uint32_t>(keys.size()));
            if (inserted) {
                if (keys.size() >= task.cap) {
                    res.cap_exceeded = true;
                    res.classes = static_cast<uint32_t>(keys.size());
                    return res;
                }
                keys.push_back(std::move(key));
                queue.push_back(it->second);
                res.discovery.push_back({it->second, cur, gi + 1});
            }
        }
    }
    finish_result(res, task.ring, scalars, gens, index, keys);
    return res;
}

EnumResult enumerate_universal_fullmatrix(const EnumTask& task) {
    unsigned M = 0;
    validate_task(task, M);
    std::vector<RingElem> scalars = scalar_set(task.ring, task.xi, task.mode, M);
    GenSet gens = build_gens(task);

    EnumResult res;
    res.scalar_order = static_cast<unsigned>(scalars.size());
    Cov vperp{task.v.b, -task.v.a};

    auto key_of = [&](const RingMat& m) {
        return canonical_key(mul_cov(vperp, m), scalars);
    };

    std::map<std::vector<uint64_t>, uint32_t> index;
    std::vector<std::vector<uint64_t>> keys;
    std::vector<RingMat> reps;
    std::vector<uint32_t> queue;

    RingMat id = RingMat::identity(task.ring);
    keys.push_back(key_of(id));
    index.emplace(keys[0], 0);
    reps.push_back(id);
    queue.push_back(0);
    res.discovery.push_back({0, 0, 0});

    for (size_t qi = 0; qi < queue.size(); ++qi) {
        uint32_t cur = queue[qi];
        RingMat m = reps[cur];
        for (uint32_t gi = 0; gi < gens.expand.size(); ++gi) {
            RingMat next = m * gens.expand[gi];
            std::vector<uint64_t> key = key_of(next);
            auto [it, inserted] = index.emplace(key, static_cast<uint32_t>(keys.size()));
            if (inserted) {
                if (keys.size() >= task.cap) {
                    res.cap_exceeded = true;
                    res.classes = static_cast<uint32_t>(keys.size());
                    return res;
                }
                keys.push_back(std::move(key));
                reps.push_back(next);
                queue.push_back(it->second);
                res.discovery.push_back({it->second, cur, gi + 1});
            }
        }
    }
    finish_result(res, task.ring, scalars, gens, index, keys);
    return res;
}

bool line_orbit_conjugacy(const RingPtr& ring, const RingElem& xi, const Vec2R& v1, const Vec2R& v2, EnumMode mode) {
    (void)mode;  // scalars stabilize every line
    if (v1.is_zero() || v2.is_zero()) throw std::invalid_argument("line_orbit_conjugacy: zero vector");
    auto canonical_line = [&](const Vec2R& v) -> std::vector<uint64_t> {
        Vec2R norm;
        if (auto inv = v.a.try_inverse()) norm = Vec2R{RingElem::one(ring), *inv * v.b};
        else if (auto inv2 = v.b.try_inverse()) norm = Vec2R{v.a * *inv2, RingElem::one(ring)};
        else throw std::domain_error("line_orbit_conjugacy: vector has no unit coordinate");
        return flatten(Cov{norm.a, norm.b});
    };
    RingMat s1 = specialize(burau_of_word(BraidWord::sigma(1)), ring, xi);
    RingMat s2 = specialize(burau_of_word(BraidWord::sigma(2)), ring, xi);
    std::vector<RingMat> gens = {s1, s2};

    std::vector<uint64_t> target = canonical_line(v2);
    std::map<std::vector<uint64_t>, uint32_t> seen;
    std::vector<Vec2R> reps;
    std::vector<uint64_t> start = canonical_line(v1);
    if (start == target) return true;
    seen.emplace(start, 0);
    reps.push_back(v1);
    for (size_t qi = 0; qi < reps.size(); ++qi) {
        Vec2R w = reps[qi];
        for (const auto& g : gens) {
            Vec2R img{g.at(0, 0) * w.a + g.at(0, 1) * w.b, g.at(1, 0) * w.a + g.at(1, 1) * w.b};
            std::vector<uint64_t> key = canonical_line(img);
            if (key == target) return true;
            if (seen.emplace(key, static_cast<uint32_t>(reps.size())).second) reps.push_back(img);
        }
    }
    return false;
}

bool six_significant_check(const SkelSignature& sig) {
    if (sig.c3 != 1 || sig.c2 != 1) return false;
    bool monogon = false;
    for (const auto& [w, m] : sig.widths) {
        if (w == 1) {
            if (m != 1) return false;
            monogon = true;
        } else if (w != 6) {
            return false;
        }
    }
    return monogon;
}

}  // namespace batlas
