// Command-line front end for the burau_atlas shared library. Talks to the
// library exclusively through the C API in burau_atlas.h.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "burau_atlas.h"
#include "json.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCap = 2;
constexpr int kExitAlgebraic = 3;
constexpr int kExitUsage = 64;

uint64_t default_cap() {
    if (const char* env = std::getenv("BURAU_ATLAS_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        std::cerr << "warning: ignoring malformed BURAU_ATLAS_CAP='" << env << "'\n";
    }
    return 1000000;
}

int fail_algebraic() {
    std::cerr << "error: " << ba_last_error() << "\n";
    return kExitAlgebraic;
}

struct OwnedString {
    char* s = nullptr;
    ~OwnedString() { ba_string_free(s); }
};

int run_enumerate(uint64_t p, const std::string& min_poly, bool braid, const std::string& v, uint64_t cap,
                  const std::string& format, const std::string& dot_file) {
    ba_enum_result* res = nullptr;
    int rc = ba_enumerate(p, min_poly.c_str(), braid ? 1 : 0, v.empty() ? nullptr : v.c_str(), cap, &res);
    if (rc != BA_OK) return fail_algebraic();

    int exit_code = kExitOk;
    if (ba_enum_cap_exceeded(res)) exit_code = kExitCap;

    if (format == "dot") {
        OwnedString dot;
        if (ba_enum_dot(res, &dot.s) == BA_OK) std::cout << dot.s;
        else exit_code = kExitCap;
    } else if (format == "text") {
        OwnedString js;
        ba_enum_json(res, &js.s);
        json j = json::parse(js.s);
        if (j["cap_exceeded"].get<bool>()) {
            std::cout << "cap exceeded after " << j["classes_at_cap"] << " classes\n";
        } else {
            std::cout << "index " << j["index"] << ", c2 " << j["c2"] << ", c3 " << j["c3"] << ", widths "
                      << j["partition"].get<std::string>() << ", genus " << j["genus"]
                      << (j["six_significant"].get<bool>() ? ", 6-significant" : "") << "\n";
        }
    } else {
        OwnedString js;
        ba_enum_json(res, &js.s);
        std::cout << js.s << "\n";
    }
    if (!dot_file.empty()) {
        OwnedString dot;
        if (ba_enum_dot(res, &dot.s) == BA_OK) {
            std::ofstream out(dot_file);
            out << dot.s;
        } else if (exit_code == kExitOk) {
            exit_code = kExitCap;
        }
    }
    ba_enum_result_free(res);
    return exit_code;
}

int run_search(unsigned n_min, unsigned n_max, bool char0, bool expect_tables, uint64_t cap,
               const std::string& format) {
    ba_search_result* res = nullptr;
    int rc = ba_search(n_min, n_max, char0 ? 1 : 0, cap, &res);
    if (rc != BA_OK) return fail_algebraic();

    OwnedString js;
    ba_search_json(res, &js.s);
    if (format == "text") {
        json j = json::parse(js.s);
        if (char0) {
            std::cout << j["char0_cells_checked"] << " cells checked, " << j["char0_anomalies"].size()
                      << " vanishing resultants, " << j["candidates"].size() << " candidates\n";
        } else {
            std::cout << j["candidates"].size() << " candidates kept (" << j["dropped_by_filter"]
                      << " dropped by the kappa filter): " << j["summary"]["genus0"] << " genus-0, "
                      << j["summary"]["genus_pos"] << " positive-genus\n";
            for (const auto& c : j["candidates"])
                std::cout << "  p=" << c["p"] << " N=" << c["N"] << " " << c["min_poly"].get<std::string>() << " -> "
                          << c["verdict"].get<std::string>() << "\n";
        }
    } else {
        std::cout << js.s << "\n";
    }

    int exit_code = kExitOk;
    if (expect_tables && !ba_search_expect_tables_ok(res)) {
        std::cerr << "error: search results do not match the built-in tables\n";
        exit_code = 1;
    }
    ba_search_result_free(res);
    return exit_code;
}

int run_verify(const std::string& suite, const std::string& format) {
    OwnedString js;
    int ok = 0;
    int rc = ba_verify(suite.c_str(), &js.s, &ok);
    if (rc != BA_OK) return fail_algebraic();
    if (format == "text") {
        json j = json::parse(js.s);
        for (const auto& item : j["items"])
            std::cout << (item["ok"].get<bool>() ? "pass" : "FAIL") << "  " << item["name"].get<std::string>() << "\n";
        std::cout << (ok ? "all identities hold" : "FAILURES present") << "\n";
    } else {
        std::cout << js.s << "\n";
    }
    return ok ? kExitOk : 1;
}

int run_classify(uint64_t p, const std::string& min_poly, const std::vector<long>& trivalent, bool has_black,
                 long black_r, bool has_white, long white_r) {
    OwnedString js;
    int rc;
    if (!trivalent.empty()) {
        rc = ba_classify_trivalent(p, min_poly.c_str(), trivalent[0], trivalent[1], trivalent[2], trivalent[3], &js.s);
    } else if (has_black) {
        rc = ba_classify_black(p, min_poly.c_str(), black_r, &js.s);
    } else if (has_white) {
        rc = ba_classify_white(p, min_poly.c_str(), white_r, &js.s);
    } else {
        std::cerr << "error: one of --trivalent / --black / --white is required\n";
        return kExitUsage;
    }
    if (rc != BA_OK) return fail_algebraic();
    std::cout << js.s << "\n";
    return kExitOk;
}

int run_n79(unsigned target, const std::string& format) {
    OwnedString js;
    int ok = 0;
    int rc = ba_n79(target, &js.s, &ok);
    if (rc != BA_OK) return fail_algebraic();
    if (format == "text") {
        json j = json::parse(js.s);
        for (const auto& t : j["targets"]) {
            std::cout << "Phi_" << t["target"] << ":\n";
            for (const auto& row : t["residues"])
                std::cout << "  n=" << row["n"] << "  R_n mod Phi = " << row["residue"].get<std::string>() << "\n";
            std::cout << "  all nonzero: " << (t["all_nonzero"].get<bool>() ? "yes" : "NO") << "\n";
        }
    } else {
        std::cout << js.s << "\n";
    }
    return ok ? kExitOk : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"burau-atlas: Burau-image coset enumeration and the exceptional Alexander-factor search"};
    app.require_subcommand(1);

    // enumerate
    auto* enum_cmd = app.add_subcommand("enumerate", "enumerate the cosets of a universal subgroup");
    uint64_t p = 0;
    std::string min_poly, v_pair, mode = "extended", format = "json", dot_file;
    uint64_t cap = default_cap();
    enum_cmd->add_option("--p", p, "prime modulus")->required();
    enum_cmd->add_option("--min-poly", min_poly, "minimal polynomial of xi over F_p")->required();
    enum_cmd->add_option("--mode", mode, "extended | braid")->check(CLI::IsMember({"extended", "braid"}));
    enum_cmd->add_option("--v", v_pair, "module line as \"a;b\" (default e2)");
    enum_cmd->add_option("--cap", cap, "class cap (env BURAU_ATLAS_CAP)");
    enum_cmd->add_option("--format", format, "json | text | dot")->check(CLI::IsMember({"json", "text", "dot"}));
    enum_cmd->add_option("--dot", dot_file, "write the skeleton in DOT format to a file");

    // search
    auto* search_cmd = app.add_subcommand("search", "run the exceptional-factor pipeline");
    unsigned n_min = 11, n_max = 26;
    bool char0 = false, expect = false;
    std::string sformat = "json";
    search_cmd->add_option("--n-min", n_min, "lower bound of the N range (default 11)");
    search_cmd->add_option("--n-max", n_max, "upper bound of the N range (default 26)");
    search_cmd->add_flag("--char0", char0, "characteristic-zero scan only");
    search_cmd->add_flag("--expect-tables", expect, "fail unless the results reproduce the built-in tables");
    search_cmd->add_option("--cap", cap, "enumeration class cap");
    search_cmd->add_option("--format", sformat, "json | text")->check(CLI::IsMember({"json", "text"}));

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the symbolic identity suites");
    std::string suite = "all", vformat = "text";
    verify_cmd->add_option("--suite", suite, "all | burau | freegroup | localgeom")
        ->check(CLI::IsMember({"all", "burau", "freegroup", "localgeom"}));
    verify_cmd->add_option("--format", vformat, "json | text")->check(CLI::IsMember({"json", "text"}));

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "classify a local vertex contribution");
    uint64_t cp = 0;
    std::string cpoly;
    std::vector<long> trivalent;
    long black_r = 0, white_r = 0;
    classify_cmd->add_option("--p", cp, "prime modulus")->required();
    classify_cmd->add_option("--min-poly", cpoly, "minimal polynomial of xi")->required();
    auto* triv_opt = classify_cmd->add_option("--trivalent", trivalent, "widths and twists: m n r s")->expected(4);
    auto* black_opt = classify_cmd->add_option("--black", black_r, "twist r of a monovalent black vertex");
    auto* white_opt = classify_cmd->add_option("--white", white_r, "twist r of a monovalent white vertex");

    // n79
    auto* n79_cmd = app.add_subcommand("n79", "resultant checks eliminating N = 7 and 9");
    unsigned target = 0;
    std::string nformat = "text";
    n79_cmd->add_option("--target", target, "14 | 18 (default: both)")->check(CLI::IsMember({14u, 18u}));
    n79_cmd->add_option("--format", nformat, "json | text")->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (enum_cmd->parsed())
        return run_enumerate(p, min_poly, mode == "braid", v_pair, cap, format, dot_file);
    if (search_cmd->parsed()) return run_search(n_min, n_max, char0, expect, cap, sformat);
    if (verify_cmd->parsed()) return run_verify(suite, vformat);
    if (classify_cmd->parsed())
        return run_classify(cp, cpoly, trivalent, black_opt->count() > 0, black_r, white_opt->count() > 0, white_r);
    if (n79_cmd->parsed()) return run_n79(target, nformat);
    (void)triv_opt;
    return kExitUsage;
}
