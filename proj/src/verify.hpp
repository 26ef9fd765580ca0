#pragma once

#include <string>
#include <vector>

namespace batlas {

struct VerifyItem {
    std::string name;
    bool ok;
};

// Symbolic and oracle-backed identity suites; every item is deterministic.
std::vector<VerifyItem> verify_burau();
std::vector<VerifyItem> verify_freegroup();
std::vector<VerifyItem> verify_localgeom();
std::vector<VerifyItem> verify_suite(const std::string& name);  // "all" runs the three

bool verify_all_ok(const std::vector<VerifyItem>& items);

}  // namespace batlas
