#include "tables.hpp"

namespace batlas {

const std::vector<TableRow>& table1() {
    static const std::vector<TableRow> rows = {
        {2, 15, {"t^4+t+1", "t^4+t^3+1"}, "(17;1;2;1^2 15^1)", true},
        {5, 12, {"t^2+2t+4", "t^2+3t+4"}, "(52;0;4;1^4 12^4)", false},
        {13, 12, {"t+2", "t+6", "t+7", "t+11"}, "(14;0;2;1^2 12^1)", true},
        {19, 18, {"t+2", "t+3", "t+10", "t+13", "t+14", "t+15"}, "(40;2;4;1^2 2^1 18^2)", false},
    };
    return rows;
}

const std::vector<TableRow>& table2() {
    static const std::vector<TableRow> rows = {
        {3, 13, {"t^3+2t+1", "t^3+2t^2+1", "t^3+t^2+2t+1", "t^3+2t^2+t+1"}, "", false},
        {23, 11, {"t+2", "t+4", "t+6", "t+9", "t+12", "t+18"}, "", false},
        {29, 14, {"t+4", "t+22"}, "", false},
        {31, 15, {"t+14", "t+18", "t+19", "t+20"}, "", false},
        {37, 12, {"t+8", "t+14", "t+23", "t+29"}, "", false},
        {43, 14, {"t+32", "t+39"}, "", false},
        {43, 21, {"t+14", "t+40"}, "", false},
        {53, 13, {"t+28", "t+36"}, "", false},
        {61, 15, {"t+16", "t+42"}, "", false},
        {79, 13, {"t+38", "t+52"}, "", false},
        {127, 21, {"t+47", "t+100"}, "", false},
        {211, 15, {"t+83", "t+150"}, "", false},
    };
    return rows;
}

const std::vector<TableRow>& table4() {
    static const std::vector<TableRow> rows = {
        {2, 7, {"t^3+t+1", "t^3+t^2+1"}, "(9;1;0;1^2 7^1)", true},
        {3, 8, {"t^2+2t+2", "t^2+t+2"}, "(10;0;1;1^2 8^1)", true},
        {5, 8, {"t^2+2", "t^2+3"}, "(78;0;0;1^6 8^9)", true},
        {11, 10, {"t+2", "t+6", "t+7", "t+8"}, "(24;2;0;1^2 2^1 10^2)", true},
        {17, 8, {"t+2", "t+8", "t+9", "t+15"}, "(36;0;0;1^4 8^4)", true},
        {19, 9, {"t+4", "t+5", "t+6", "t+16", "t+9", "t+17"}, "(20;0;2;1^2 9^2)", false},
        {29, 7, {"t+7", "t+16", "t+20", "t+23", "t+24", "t+25"}, "(60;0;0;1^4 7^8)", true},
        {37, 9, {"t+7", "t+9", "t+12", "t+16", "t+33", "t+34"}, "(76;0;4;1^4 9^8)", false},
        {43, 7, {"t+4", "t+11", "t+16", "t+21", "t+35", "t+41"}, "(132;0;0;1^6 7^18)", true},
    };
    return rows;
}

size_t table_triple_count(const std::vector<TableRow>& rows) {
    size_t n = 0;
    for (const auto& r : rows) n += r.factors.size();
    return n;
}

}  // namespace batlas
