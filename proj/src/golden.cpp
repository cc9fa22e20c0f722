#include "cyclic/golden.hpp"

namespace cyclic::golden {

const std::vector<MdsRow>& mds_table() {
    static const std::vector<MdsRow> table = {
        {3, {{1}}},
        {5, {{2, 1}}},
        {7, {{2, 3, 1}}},
        {9, {{2, 4, 1}}},
        {11, {{2, 4, 3, 5, 1}}},
        {13, {{2, 4, 5, 3, 6, 1}}},
        {15, {{2, 4, 7, 1}}},
        {17, {{2, 4, 8, 1}, {6, 5, 7, 3}}},
        {19, {{2, 4, 8, 3, 6, 7, 5, 9, 1}}},
        {21, {{2, 4, 8, 5, 10, 1}}},
        {23, {{2, 4, 8, 7, 9, 5, 10, 3, 6, 11, 1}}},
        {25, {{2, 4, 8, 9, 7, 11, 3, 6, 12, 1}}},
        {27, {{2, 4, 8, 11, 5, 10, 7, 13, 1}}},
        {29, {{2, 4, 8, 13, 3, 6, 12, 5, 10, 9, 11, 7, 14, 1}}},
        {31, {{2, 4, 8, 15, 1}, {6, 12, 7, 14, 3}, {10, 11, 9, 13, 5}}},
        {33, {{2, 4, 8, 16, 1}, {10, 13, 7, 14, 5}}},
        {35, {{2, 4, 8, 16, 3, 6, 12, 11, 13, 9, 17, 1}}},
        {37, {{2, 4, 8, 16, 5, 10, 17, 3, 6, 12, 13, 11, 15, 7, 14, 9, 18, 1}}},
        {39, {{2, 4, 8, 16, 7, 14, 11, 17, 5, 10, 19, 1}}},
        {41, {{2, 4, 8, 16, 9, 18, 5, 10, 20, 1},
              {6, 12, 17, 7, 14, 13, 15, 11, 19, 3}}},
        {43, {{2, 4, 8, 16, 11, 21, 1},
              {6, 12, 19, 5, 10, 20, 3},
              {14, 15, 13, 17, 9, 18, 7}}},
        {45, {{2, 4, 8, 16, 13, 19, 7, 14, 17, 11, 22, 1}}},
        {47, {{2, 4, 8, 16, 15, 17, 13, 21, 5, 10, 20, 7, 14, 19, 9, 18, 11, 22,
               3, 6, 12, 23, 1}}},
        {49, {{2, 4, 8, 16, 17, 15, 19, 11, 22, 5, 10, 20, 9, 18, 13, 23, 3, 6,
               12, 24, 1}}},
        {51, {{2, 4, 8, 16, 19, 13, 25, 1}, {10, 20, 11, 22, 7, 14, 23, 5}}},
        {53, {{2, 4, 8, 16, 21, 11, 22, 9, 18, 17, 19, 15, 23, 7, 14, 25, 3, 6,
               12, 24, 5, 10, 20, 13, 26, 1}}},
        {55, {{2, 4, 8, 16, 23, 9, 18, 19, 17, 21, 13, 26, 3, 6, 12, 24, 7, 14,
               27, 1}}},
        {57, {{2, 4, 8, 16, 25, 7, 14, 28, 1},
              {10, 20, 17, 23, 11, 22, 13, 26, 5}}},
        {59, {{2, 4, 8, 16, 27, 5, 10, 20, 19, 21, 17, 25, 9, 18, 23, 13, 26, 7,
               14, 28, 3, 6, 12, 24, 11, 22, 15, 29, 1}}},
        {61, {{2, 4, 8, 16, 29, 3, 6, 12, 24, 13, 26, 9, 18, 25, 11, 22, 17, 27,
               7, 14, 28, 5, 10, 20, 21, 19, 23, 15, 30, 1}}},
        {63, {{2, 4, 8, 16, 31, 1}, {10, 20, 23, 17, 29, 5},
              {22, 19, 25, 13, 26, 11}}},
        {65, {{2, 4, 8, 16, 32, 1}, {6, 12, 24, 17, 31, 3},
              {14, 28, 9, 18, 29, 7}, {22, 21, 23, 19, 27, 11}}},
        {67, {{2, 4, 8, 16, 32, 3, 6, 12, 24, 19, 29, 9, 18, 31, 5, 10, 20, 27,
               13, 26, 15, 30, 7, 14, 28, 11, 22, 23, 21, 25, 17, 33, 1}}},
        {69, {{2, 4, 8, 16, 32, 5, 10, 20, 29, 11, 22, 25, 19, 31, 7, 14, 28, 13,
               26, 17, 34, 1}}},
        {71, {{2, 4, 8, 16, 32, 7, 14, 28, 15, 30, 11, 22, 27, 17, 34, 3, 6, 12,
               24, 23, 25, 21, 29, 13, 26, 19, 33, 5, 10, 20, 31, 9, 18, 35, 1}}},
    };
    return table;
}

const std::vector<PstarRow>& pstar_table() {
    static const std::vector<PstarRow> table = {
        {3, "x - 1"},
        {5, "x^2 + (1 - 2*rho)*x + 1"},
        {7, "x^3 + (3 - 2*rho^2)*x^2 + 2*rho*x - 1"},
        {9, "x^3 - 2*rho*x^2 + (-3 + 2*rho^2)*x - 1"},
        {11,
         "x^5 + (-1 + 6*rho^2 - 2*rho^4)*x^4 + (-4 - 2*rho + 2*rho^2 + 2*rho^3)*x^3"
         " + (1 + 8*rho - 8*rho^2 - 4*rho^3 + 2*rho^4)*x^2"
         " + (3 + 4*rho - 12*rho^2 - 2*rho^3 + 4*rho^4)*x - 1"},
        {13,
         "x^6 + (1 - 6*rho + 8*rho^3 - 2*rho^5)*x^5"
         " + (-3 - 2*rho - 4*rho^2 + 2*rho^3 + 2*rho^4)*x^4"
         " + (-6 + 14*rho + 10*rho^2 - 12*rho^3 - 4*rho^4 + 2*rho^5)*x^3"
         " + (2 + 16*rho - 24*rho^3 + 6*rho^5)*x^2"
         " + (1 - 14*rho + 10*rho^3 - 2*rho^5)*x + 1"},
        {15,
         "x^4 + (3 - 8*rho - 2*rho^2 + 2*rho^3)*x^3 + (-18*rho + 6*rho^3)*x^2"
         " + (-2 - 10*rho + 2*rho^3)*x + 1"},
        {17,
         "x^8 + (1 + 8*rho - 20*rho^3 + 12*rho^5 - 2*rho^7)*x^7"
         " + (-7 + 4*rho + 8*rho^2 - 6*rho^3 - 8*rho^4 + 2*rho^5 + 2*rho^6)*x^6"
         " + (-26*rho - 38*rho^2 + 60*rho^3 + 36*rho^4 - 30*rho^5 - 8*rho^6 + 4*rho^7)*x^5"
         " + (9 - 46*rho + 124*rho^3 - 6*rho^4 - 80*rho^5 + 2*rho^6 + 14*rho^7)*x^4"
         " + (52*rho + 32*rho^2 - 142*rho^3 - 24*rho^4 + 84*rho^5 + 4*rho^6 - 14*rho^7)*x^3"
         " + (-12 + 8*rho + 68*rho^2 - 52*rho^3 - 52*rho^4 + 36*rho^5 + 10*rho^6 - 6*rho^7)*x^2"
         " + (-20*rho + 6*rho^2 + 20*rho^3 - 2*rho^4 - 4*rho^5)*x + 1"},
        {19,
         "x^9 + (-1 + 20*rho^2 - 30*rho^4 + 14*rho^6 - 2*rho^8)*x^8"
         " + (-8 - 4*rho + 8*rho^2 + 14*rho^3 - 8*rho^4 - 10*rho^5 + 2*rho^6 + 2*rho^7)*x^7"
         " + (3 + 22*rho - 78*rho^2 - 60*rho^3 + 96*rho^4 + 42*rho^5 - 36*rho^6 - 8*rho^7"
         " + 4*rho^8)*x^6"
         " + (29 - 14*rho - 156*rho^2 + 38*rho^3 + 244*rho^4 - 30*rho^5 - 120*rho^6 + 6*rho^7"
         " + 18*rho^8)*x^5"
         " + (-17 - 8*rho + 254*rho^2 - 8*rho^3 - 350*rho^4 + 8*rho^5 + 156*rho^6 - 2*rho^7"
         " - 22*rho^8)*x^4"
         " + (-20 - 30*rho + 112*rho^2 + 90*rho^3 - 136*rho^4 - 56*rho^5 + 52*rho^6 + 10*rho^7"
         " - 6*rho^8)*x^3"
         " + (8 + 22*rho - 90*rho^2 - 28*rho^3 + 84*rho^4 + 20*rho^5 - 24*rho^6 - 4*rho^7"
         " + 2*rho^8)*x^2"
         " + (5 + 10*rho - 54*rho^2 - 10*rho^3 + 54*rho^4 + 2*rho^5 - 18*rho^6 + 2*rho^8)*x - 1"},
        {21,
         "x^6 + (-1 - 12*rho + 10*rho^3 - 2*rho^5)*x^5"
         " + (-10 - 26*rho - 2*rho^2 + 16*rho^3 + 2*rho^4 - 2*rho^5)*x^4"
         " + (36*rho + 16*rho^2 - 26*rho^3 - 6*rho^4 + 4*rho^5)*x^3"
         " + (18 + 60*rho - 10*rho^2 - 44*rho^3 + 2*rho^4 + 8*rho^5)*x^2"
         " + (10 + 10*rho - 18*rho^2 - 4*rho^3 + 4*rho^4)*x + 1"},
    };
    return table;
}

const std::vector<CoachRow>& coach_65() {
    static const std::vector<CoachRow> rows = {
        {{1}, {6}},
        {{3, 31, 17}, {1, 1, 4}},
        {{7, 29, 9}, {1, 2, 3}},
        {{11, 27, 19, 23, 21}, {1, 1, 1, 1, 2}},
    };
    return rows;
}

const std::vector<i64>& tour_7_1() {
    static const std::vector<i64> labels = {
        0, 1, 6, 9, 10, 1, 4, 5, 10, 13, 0, 5, 8, 9, 0, 3, 4, 9, 12, 13, 4,
        7, 8, 13, 2, 3, 8, 11, 12, 3, 6, 7, 12, 1, 2, 7, 10, 11, 2, 5, 6, 11,
    };
    return labels;
}

const std::vector<i64>& mpr2_65() {
    static const std::vector<i64> coeffs = {
        1,      -12,    -180,  -101,  2085,  1802,  -9126, -7168, 20886,
        13653,  -28667, -15001, 25284, 10282, -14822, -4540, 5832,  1292,
        -1521,  -229,   252,   23,    -24,   -1,    1,
    };
    return coeffs;
}

} // namespace cyclic::golden
