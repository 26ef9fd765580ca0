#include "burau_atlas.h"

#include <algorithm>
#include <cstring>
#include <functional>
#include <string>

#include "json.hpp"
#include "search.hpp"
#include "verify.hpp"

using json = nlohmann::ordered_json;
using namespace batlas;

namespace {

thread_local std::string g_last_error;

int fail(int code, const std::string& message) {
    g_last_error = message;
    return code;
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

int guarded(const std::function<void()>& body) {
    try {
        body();
        return BA_OK;
    } catch (const std::invalid_argument& e) {
        return fail(BA_E_INVALID, e.what());
    } catch (const std::length_error& e) {
        return fail(BA_E_INVALID, e.what());
    } catch (const std::domain_error& e) {
        return fail(BA_E_DOMAIN, e.what());
    } catch (const std::exception& e) {
        return fail(BA_E_INTERNAL, e.what());
    }
}

RingPtr make_field_ring(uint64_t modulus, const char* min_poly) {
    if (!min_poly) throw std::invalid_argument("min_poly is null");
    if (!is_prime_u64(modulus)) throw std::domain_error("modulus " + std::to_string(modulus) + " is not prime");
    IntPoly f = parse_poly(min_poly);
    ModPoly fm = ModPoly::from_intpoly(f, modulus);
    if (fm.deg() < 1) throw std::invalid_argument("minimal polynomial must have degree >= 1 mod p");
    if (!irreducible_mod_p(fm)) {
        auto fac = factor_mod_p(fm);
        std::string msg = "reducible minimal polynomial over F_" + std::to_string(modulus) + ":";
        for (const auto& [g, mult] : fac.factors) {
            msg += " (" + g.to_string() + ")";
            if (mult > 1) msg += "^" + std::to_string(mult);
        }
        throw std::domain_error(msg);
    }
    return RingDescriptor::make(modulus, fm);
}

json signature_json(const SkelSignature& sig) {
    json widths = json::array();
    for (const auto& [w, m] : sig.widths) widths.push_back({w, m});
    return json{{"index", sig.index}, {"c2", sig.c2}, {"c3", sig.c3}, {"widths", widths}, {"genus", sig.genus}};
}

json vec_json(const Vec2R& v) { return json::array({v.a.to_string(), v.b.to_string()}); }

}  // namespace

struct ba_enum_result {
    uint64_t modulus;
    std::string min_poly;
    EnumMode mode;
    EnumResult res;
    bool six = false;
};

struct ba_search_result {
    SearchResult sr;
    TableExpectation ex;
};

extern "C" {

const char* ba_last_error(void) { return g_last_error.c_str(); }

void ba_string_free(char* s) { delete[] s; }

int ba_poly_canonical(const char* text, char** out) {
    if (!text || !out) return fail(BA_E_INVALID, "null argument");
    return guarded([&] { *out = dup_string(parse_poly(text).to_string()); });
}

int ba_enumerate(uint64_t modulus, const char* min_poly, int braid_mode, const char* v_pair, uint64_t cap,
                 ba_enum_result** out) {
    if (!out) return fail(BA_E_INVALID, "null out pointer");
    return guarded([&] {
        RingPtr ring = make_field_ring(modulus, min_poly);
        EnumTask task = EnumTask::make(ring, braid_mode ? EnumMode::braid : EnumMode::extended);
        if (cap > 0) task.cap = static_cast<uint32_t>(std::min<uint64_t>(cap, 100000000ULL));
        if (v_pair) {
            std::string pair(v_pair);
            size_t semi = pair.find(';');
            if (semi == std::string::npos) throw std::invalid_argument("v must be given as \"a;b\"");
            RingElem xi = RingElem::t_class(ring);
            task.v = Vec2R{specialize_poly(parse_poly(pair.substr(0, semi)), ring, xi),
                           specialize_poly(parse_poly(pair.substr(semi + 1)), ring, xi)};
        }
        auto* r = new ba_enum_result{modulus, parse_poly(min_poly).to_string(),
                                     braid_mode ? EnumMode::braid : EnumMode::extended, enumerate_universal(task),
                                     false};
        if (r->res.signature) r->six = six_significant_check(*r->res.signature);
        *out = r;
    });
}

void ba_enum_result_free(ba_enum_result* r) { delete r; }

int ba_enum_cap_exceeded(const ba_enum_result* r) { return r && r->res.cap_exceeded ? 1 : 0; }

uint32_t ba_enum_index(const ba_enum_result* r) { return r ? r->res.classes : 0; }

long ba_enum_genus(const ba_enum_result* r) { return r && r->res.signature ? r->res.signature->genus : -1; }

uint32_t ba_enum_c2(const ba_enum_result* r) { return r && r->res.signature ? r->res.signature->c2 : 0; }

uint32_t ba_enum_c3(const ba_enum_result* r) { return r && r->res.signature ? r->res.signature->c3 : 0; }

int ba_enum_six_significant(const ba_enum_result* r) { return r && r->six ? 1 : 0; }

int ba_enum_json(const ba_enum_result* r, char** out) {
    if (!r || !out) return fail(BA_E_INVALID, "null argument");
    return guarded([&] {
        json j{{"p", r->modulus},
               {"min_poly", r->min_poly},
               {"mode", r->mode == EnumMode::braid ? "braid" : "extended"},
               {"cap_exceeded", r->res.cap_exceeded}};
        if (r->res.cap_exceeded) {
            j["classes_at_cap"] = r->res.classes;
        } else {
            const SkelSignature& sig = *r->res.signature;
            j["index"] = sig.index;
            j["c2"] = sig.c2;
            j["c3"] = sig.c3;
            json widths = json::array();
            for (const auto& [w, m] : sig.widths) widths.push_back({w, m});
            j["widths"] = widths;
            j["partition"] = sig.partition_string();
            j["genus"] = sig.genus;
            j["six_significant"] = r->six;
            j["scalar_order"] = r->res.scalar_order;
        }
        *out = dup_string(j.dump());
    });
}

int ba_enum_dot(const ba_enum_result* r, char** out) {
    if (!r || !out) return fail(BA_E_INVALID, "null argument");
    if (!r->res.skeleton) return fail(BA_E_CAP, "no skeleton: enumeration exceeded the class cap");
    return guarded([&] { *out = dup_string(r->res.skeleton->to_dot()); });
}

int ba_search(unsigned n_min, unsigned n_max, int char0_only, uint64_t enum_cap, ba_search_result** out) {
    if (!out) return fail(BA_E_INVALID, "null out pointer");
    return guarded([&] {
        SearchConfig cfg;
        cfg.n_min = n_min;
        cfg.n_max = n_max;
        cfg.char0_only = char0_only != 0;
        if (enum_cap > 0) cfg.enum_cap = static_cast<uint32_t>(std::min<uint64_t>(enum_cap, 100000000ULL));
        auto* r = new ba_search_result;
        r->sr = candidate_search(cfg);
        if (!cfg.char0_only) {
            kappa_filter(r->sr);
            classify_candidates(r->sr);
            r->ex = expect_tables(r->sr);
        } else {
            r->ex.ok = r->sr.char0_anomalies.empty();
        }
        *out = r;
    });
}

void ba_search_result_free(ba_search_result* r) { delete r; }

uint32_t ba_search_candidate_count(const ba_search_result* r) {
    return r ? static_cast<uint32_t>(r->sr.candidates.size()) : 0;
}

uint32_t ba_search_genus0_count(const ba_search_result* r) {
    return r ? static_cast<uint32_t>(r->ex.genus0_count) : 0;
}

uint32_t ba_search_genuspos_count(const ba_search_result* r) {
    return r ? static_cast<uint32_t>(r->ex.genuspos_count) : 0;
}

uint32_t ba_search_warning_count(const ba_search_result* r) {
    return r ? static_cast<uint32_t>(r->sr.warnings.size()) : 0;
}

int ba_search_expect_tables_ok(const ba_search_result* r) { return r && r->ex.ok ? 1 : 0; }

int ba_search_json(const ba_search_result* r, char** out) {
    if (!r || !out) return fail(BA_E_INVALID, "null argument");
    return guarded([&] {
        json j;
        j["config"] = {{"n_min", r->sr.config.n_min},
                       {"n_max", r->sr.config.n_max},
                       {"char0_only", r->sr.config.char0_only},
                       {"enum_cap", r->sr.config.enum_cap}};
        j["char0_cells_checked"] = r->sr.char0_cells_checked;
        json anomalies = json::array();
        for (const auto& a : r->sr.char0_anomalies)
            anomalies.push_back({{"N", a.N}, {"d", a.d}, {"t_u", vertex_kind_name(a.tu)}, {"t_v", vertex_kind_name(a.tv)}});
        j["char0_anomalies"] = anomalies;
        json cands = json::array();
        for (const auto& c : r->sr.candidates) {
            json jc{{"p", c.p}, {"N", c.N}, {"min_poly", c.minpoly_text()}, {"witnesses", c.witnesses.size()}};
            auto it = r->sr.kappa.find(c.key());
            if (it != r->sr.kappa.end()) jc["kappa"] = it->second.kappa;
            jc["verdict"] = verdict_name(c.verdict);
            if (c.signature) jc["signature"] = signature_json(*c.signature);
            cands.push_back(jc);
        }
        j["candidates"] = cands;
        j["dropped_by_filter"] = r->sr.dropped.size();
        json warns = json::array();
        for (const auto& w : r->sr.warnings)
            warns.push_back({{"N", w.N}, {"d", w.d}, {"message", w.message}});
        j["warnings"] = warns;
        if (!r->sr.config.char0_only) {
            j["summary"] = {{"genus0", r->ex.genus0_count},
                            {"genus_pos", r->ex.genuspos_count},
                            {"missing", r->ex.missing},
                            {"misclassified", r->ex.misclassified},
                            {"extras", r->ex.extras},
                            {"tables_ok", r->ex.ok}};
        }
        *out = dup_string(j.dump());
    });
}

int ba_classify_trivalent(uint64_t modulus, const char* min_poly, long m, long n, long r, long s, char** json_out) {
    if (!json_out) return fail(BA_E_INVALID, "null argument");
    return guarded([&] {
        RingPtr ring = make_field_ring(modulus, min_poly);
        VertexClass c = classify_trivalent(m, n, r, s, ring, RingElem::t_class(ring));
        json j{{"kind", vertex_kind_name(c.kind)}, {"dim", c.dim}};
        if (c.generator) j["generator"] = vec_json(*c.generator);
        *json_out = dup_string(j.dump());
    });
}

int ba_classify_black(uint64_t modulus, const char* min_poly, long r, char** json_out) {
    if (!json_out) return fail(BA_E_INVALID, "null argument");
    return guarded([&] {
        RingPtr ring = make_field_ring(modulus, min_poly);
        VertexClass c = classify_monovalent_black(r, ring, RingElem::t_class(ring));
        json j{{"kind", vertex_kind_name(c.kind)}, {"dim", c.dim}};
        if (c.generator) j["generator"] = vec_json(*c.generator);
        *json_out = dup_string(j.dump());
    });
}

int ba_classify_white(uint64_t modulus, const char* min_poly, long r, char** json_out) {
    if (!json_out) return fail(BA_E_INVALID, "null argument");
    return guarded([&] {
        RingPtr ring = make_field_ring(modulus, min_poly);
        VertexClass c = classify_monovalent_white(r, ring, RingElem::t_class(ring));
        json j{{"kind", vertex_kind_name(c.kind)}, {"dim", c.dim}};
        if (c.generator) j["generator"] = vec_json(*c.generator);
        *json_out = dup_string(j.dump());
    });
}

int ba_verify(const char* suite, char** json_out, int* all_ok) {
    if (!json_out || !all_ok) return fail(BA_E_INVALID, "null argument");
    return guarded([&] {
        std::vector<VerifyItem> items = verify_suite(suite ? suite : "all");
        json arr = json::array();
        for (const auto& it : items) arr.push_back({{"name", it.name}, {"ok", it.ok}});
        bool ok = verify_all_ok(items);
        json j{{"suite", suite ? suite : "all"}, {"items", arr}, {"ok", ok}};
        *all_ok = ok ? 1 : 0;
        *json_out = dup_string(j.dump());
    });
}

int ba_n79(unsigned target, char** json_out, int* all_nonzero) {
    if (!json_out || !all_nonzero) return fail(BA_E_INVALID, "null argument");
    return guarded([&] {
        std::vector<unsigned> targets = target == 0 ? std::vector<unsigned>{14, 18} : std::vector<unsigned>{target};
        json arr = json::array();
        bool ok = true;
        for (unsigned t : targets) {
            N79Report rep = n79_check(t);
            json rows = json::array();
            for (const auto& [n, residue] : rep.residues)
                rows.push_back({{"n", n}, {"residue", residue.to_string()}, {"nonzero", !residue.is_zero()}});
            arr.push_back({{"target", t}, {"residues", rows}, {"all_nonzero", rep.all_nonzero}});
            ok = ok && rep.all_nonzero;
        }
        json j{{"targets", arr}, {"ok", ok}};
        *all_nonzero = ok ? 1 : 0;
        *json_out = dup_string(j.dump());
    });
}

}  // extern "C"
