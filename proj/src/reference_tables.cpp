#include "gkm21/reference_tables.hpp"

namespace gkm21::ref {

const std::array<std::array<long long, 8>, 8>& transcribed_intersection_table() {
    // rows/cols: E0, F0, V0, pi0, E0', F0', V0', pi0'
    static const std::array<std::array<long long, 8>, 8> t = {{
        {0, 2, 2, 2, 1, 1, 1, 3},
        {2, 0, 2, 2, 1, 3, 1, 2},
        {2, 2, 0, 2, 1, 1, 3, 2},
        {2, 2, 2, 0, 3, 1, 1, 1},
        {1, 1, 1, 3, 0, 2, 2, 2},
        {1, 3, 1, 1, 2, 0, 2, 1},
        {1, 1, 3, 1, 2, 2, 0, 1},
        {3, 2, 2, 1, 2, 1, 1, 0},
    }};
    return t;
}

const std::array<std::array<NameCell, 3>, 3>& transcribed_f2_cells() {
    // cells[row][col] lists the curves through P_col x P_row
    static const std::array<std::array<NameCell, 3>, 3> t = {{
        {{
            {"E0", "F0", "V0", "pi0", "E0'", "F0'", "V0'", "pi0'"},
            {"E1", "F1", "V1", "pi0", "E0'", "F2'", "V1'", "pi1'"},
            {"E2", "F2", "V2", "pi0", "E0'", "F1'", "V1'", "pi2'"},
        }},
        {{
            {"E0", "F2", "V1", "pi1", "E1'", "F1'", "V1'", "pi0'"},
            {"E1", "F0", "V2", "pi1", "E1'", "F0'", "V2'", "pi1'"},
            {"E2", "F1", "V0", "pi1", "E1'", "F2'", "V0'", "pi2'"},
        }},
        {{
            {"E0", "F1", "V2", "pi2", "E2'", "F2'", "V2'", "pi0'"},
            {"E1", "F2", "V0", "pi2", "E2'", "F1'", "V0'", "pi1'"},
            {"E2", "F0", "V1", "pi2", "E2'", "F0'", "V1'", "pi2'"},
        }},
    }};
    return t;
}

const std::array<std::array<NameCell, 9>, 9>& transcribed_f4_cells() {
    // axis order: (1,w), (1,w^2), (w,w), (w,w^2), (w^2,w), (w^2,w^2), P0, P1, P2;
    // cells[row][col] lists the two curves through axis[col] x axis[row]
    static const std::array<std::array<NameCell, 9>, 9> t = {{
        {{{"V1", "V2'"}, {"F1", "F1'"}, {"V2", "V0'"}, {"F0", "F2'"}, {"V0", "V1'"},
          {"F2", "F0'"}, {"E0", "pi2'"}, {"E1", "pi0'"}, {"E2", "pi1'"}}},
        {{{"F2", "F2'"}, {"V2", "V1'"}, {"F0", "F1'"}, {"V1", "V0'"}, {"F1", "F0'"},
          {"V0", "V2'"}, {"E0", "pi1'"}, {"E1", "pi2'"}, {"E2", "pi0'"}}},
        {{{"V2", "V0'"}, {"F0", "F2'"}, {"V0", "V1'"}, {"F2", "F0'"}, {"V1", "V2'"},
          {"F1", "F1'"}, {"E0", "pi2'"}, {"E1", "pi0'"}, {"E2", "pi1'"}}},
        {{{"F0", "F1'"}, {"V1", "V0'"}, {"F1", "F0'"}, {"V0", "V2'"}, {"F2", "F2'"},
          {"V2", "V1'"}, {"E0", "pi1'"}, {"E1", "pi2'"}, {"E2", "pi0'"}}},
        {{{"V0", "V1'"}, {"F2", "F0'"}, {"V1", "V2'"}, {"F1", "F1'"}, {"V2", "V0'"},
          {"F0", "F2'"}, {"E0", "pi2'"}, {"E1", "pi0'"}, {"E2", "pi1'"}}},
        {{{"F1", "F0'"}, {"V0", "V2'"}, {"F2", "F2'"}, {"V2", "V1'"}, {"F0", "F1'"},
          {"V1", "V0'"}, {"E0", "pi1'"}, {"E1", "pi2'"}, {"E2", "pi0'"}}},
        {{{"pi2", "E0'"}, {"pi1", "E0'"}, {"pi2", "E0'"}, {"pi1", "E0'"}, {"pi2", "E0'"},
          {"pi1", "E0'"}, {}, {}, {}}},
        {{{"pi0", "E1'"}, {"pi2", "E1'"}, {"pi0", "E1'"}, {"pi2", "E1'"}, {"pi0", "E1'"},
          {"pi2", "E0'"}, {}, {}, {}}},
        {{{"pi1", "E2'"}, {"pi0", "E2'"}, {"pi1", "E2'"}, {"pi0", "E2'"}, {"pi1", "E2'"},
          {"pi0", "E2'"}, {}, {}, {}}},
    }};
    return t;
}

const std::vector<std::pair<int, int>>& expected_intersection_discrepancies() {
    // pi0' against F0, V0, F0', V0' plus mirror images
    static const std::vector<std::pair<int, int>> cells = {
        {1, 7}, {2, 7}, {5, 7}, {6, 7}, {7, 1}, {7, 2}, {7, 5}, {7, 6}};
    return cells;
}

const std::vector<std::pair<int, int>>& expected_f2_discrepancies() {
    // point P2 x P0: the transcription lists V1' where the derivation
    // (and the exceptional-curve rules) give V2'
    static const std::vector<std::pair<int, int>> cells = {{0, 2}};
    return cells;
}

const std::vector<std::pair<int, int>>& expected_f4_discrepancies() {
    // 18 cells of the E/pi' block, where the transcribed pi' indices follow
    // the opposite sign convention for the projection, plus the stray E0'
    // at P1 x (w^2,w^2) (row 7, col 5) that should read E1'
    static const std::vector<std::pair<int, int>> cells = [] {
        std::vector<std::pair<int, int>> v;
        for (int row = 0; row < 6; ++row)
            for (int col = 6; col < 9; ++col) v.emplace_back(row, col);
        v.emplace_back(7, 5);
        return v;
    }();
    return cells;
}

const std::array<std::string, 8>& base_curve_labels() {
    static const std::array<std::string, 8> l = {"E0",  "F0",  "V0",  "pi0",
                                                 "E0'", "F0'", "V0'", "pi0'"};
    return l;
}

const std::array<std::string, 3>& rational_labels() {
    static const std::array<std::string, 3> l = {"P0", "P1", "P2"};
    return l;
}

const std::array<std::string, 9>& f4_axis_labels() {
    static const std::array<std::string, 9> l = {"(1,w)",   "(1,w^2)", "(w,w)",
                                                 "(w,w^2)", "(w^2,w)", "(w^2,w^2)",
                                                 "P0",      "P1",      "P2"};
    return l;
}

}  // namespace gkm21::ref
