#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace batlas {

// Fixture rows for the exceptional-factor tables. One row groups the minimal
// polynomials sharing (p, N); realized rows carry the printed signature of the
// projection of the universal subgroup, starred rows are the ones realized by
// genuine trigonal curves (braid mode splits with index ratio 3).
struct TableRow {
    uint64_t p;
    unsigned N;
    std::vector<std::string> factors;
    std::string signature;  // "(17;1;2;1^2 15^1)"; empty when the row is not realized
    bool starred;
};

const std::vector<TableRow>& table1();  // N > 10, realized (genus zero)
const std::vector<TableRow>& table2();  // N > 10, eliminated by enumeration
const std::vector<TableRow>& table4();  // 7 <= N <= 10 examples

size_t table_triple_count(const std::vector<TableRow>& rows);

}  // namespace batlas
