#pragma once

// Golden sets transcribed from the worked examples, lexicographically sorted
// on construction. The three starred triples in gamma_513() correct printing
// slips in the source ((2,2,9) and its rotations violate the membership
// criterion; the dimension oracle and the closed form both yield (2,2,8)).

#include <algorithm>
#include <vector>

#include "kummer/intmath.hpp"

namespace kummer::testing {

using Tuples = std::vector<std::vector<Int>>;

inline Tuples sorted(Tuples t) {
    std::sort(t.begin(), t.end());
    return t;
}

inline std::vector<Int> ints(std::vector<long long> xs) {
    return std::vector<Int>(xs.begin(), xs.end());
}

// Equal multiplicity, q = 25, m = 6, r = 5: Gamma(Q_inf, Q_1)
inline Tuples gamma_512() {
    return sorted({{1, 19}, {2, 14}, {3, 9}, {4, 4}, {7, 13},
                   {8, 8}, {9, 3}, {13, 7}, {14, 2}, {19, 1}});
}

// Gamma(Q_inf, Q_1, Q_2); see the header note on the corrected triples.
inline Tuples gamma_513() {
    return sorted({{1, 1, 13},
                   {2, 2, 8},  // *
                   {3, 3, 3},
                   {1, 13, 1},
                   {2, 8, 2},  // *
                   {13, 1, 1},
                   {8, 2, 2},  // *
                   {1, 7, 7},
                   {7, 7, 1},
                   {7, 1, 7}});
}

inline Tuples gamma_514() {
    return sorted({{1, 1, 1, 7}, {1, 1, 7, 1}, {1, 7, 1, 1}, {7, 1, 1, 1}, {2, 2, 2, 2}});
}

inline Tuples gamma_515() { return {{1, 1, 1, 1, 1}}; }

// GGS(2, 3)
inline std::vector<Int> ggs_gaps() { return ints({1, 2, 3, 4, 5, 7, 10, 11, 13, 19}); }

inline std::vector<Int> ggs_generators() { return ints({28, 20, 12, 22, 14, 6, 16, 8, 9}); }

inline Tuples ggs_gamma12() {
    return sorted({{1, 19}, {19, 1}, {2, 11}, {11, 2}, {3, 3},
                   {4, 13}, {13, 4}, {5, 5}, {7, 7}, {10, 10}});
}

// BM subcover, q = 3, n = 3, d = 4, m = 7
inline std::vector<Int> bm_gaps() {
    return ints({1, 2, 3, 4, 5, 6, 8, 9, 10, 11, 13, 15,
                 16, 17, 18, 20, 22, 23, 25, 29, 30, 32, 37, 44});
}

inline std::vector<Int> bm_generators() { return ints({7, 36, 51, 24, 39, 12, 27}); }

inline Tuples bm_gamma12() {
    return sorted({{1, 29},  {8, 22},  {15, 15}, {22, 8},  {29, 1},  {2, 44},
                   {9, 37},  {16, 30}, {23, 23}, {30, 16}, {37, 9},  {44, 2},
                   {3, 17},  {10, 10}, {17, 3},  {4, 32},  {11, 25}, {18, 18},
                   {25, 11}, {32, 4},  {5, 5},   {6, 20},  {13, 13}, {20, 6}});
}

inline Tuples bm_gamma123() {
    return sorted({{1, 1, 22},  {1, 8, 15},  {1, 15, 8},  {1, 22, 1},  {8, 1, 15},  {8, 8, 8},
                   {8, 15, 1},  {15, 1, 8},  {15, 8, 1},  {22, 1, 1},  {2, 2, 37},  {2, 9, 30},
                   {2, 16, 23}, {2, 23, 16}, {2, 30, 9},  {2, 37, 2},  {9, 2, 30},  {9, 9, 23},
                   {9, 16, 16}, {9, 23, 9},  {9, 30, 2},  {16, 2, 23}, {16, 9, 16}, {16, 16, 9},
                   {16, 23, 2}, {23, 2, 16}, {23, 9, 9},  {23, 16, 2}, {30, 2, 9},  {30, 9, 2},
                   {37, 2, 2},  {3, 3, 10},  {3, 10, 3},  {10, 3, 3},  {4, 4, 25},  {4, 11, 18},
                   {4, 18, 11}, {4, 25, 4},  {11, 4, 18}, {11, 11, 11}, {11, 18, 4},
                   {18, 4, 11}, {18, 11, 4}, {25, 4, 4},  {6, 6, 13},  {6, 13, 6},  {13, 6, 6}});
}

inline Tuples bm_gamma1234() {
    return sorted({{1, 1, 1, 15},  {1, 1, 8, 8},   {1, 1, 15, 1},  {1, 8, 1, 8},   {1, 8, 8, 1},
                   {1, 15, 1, 1},  {8, 1, 1, 8},   {8, 1, 8, 1},   {8, 8, 1, 1},   {15, 1, 1, 1},
                   {2, 2, 2, 30},  {2, 2, 9, 23},  {2, 2, 16, 16}, {2, 2, 23, 9},  {2, 2, 30, 2},
                   {2, 9, 2, 23},  {2, 9, 9, 16},  {2, 9, 16, 9},  {2, 9, 23, 2},  {2, 16, 2, 16},
                   {2, 16, 9, 9},  {2, 16, 16, 2}, {2, 23, 2, 9},  {2, 23, 9, 2},  {2, 30, 2, 2},
                   {9, 2, 2, 23},  {9, 2, 9, 16},  {9, 2, 16, 9},  {9, 2, 23, 2},  {9, 9, 2, 16},
                   {9, 9, 9, 9},   {9, 9, 16, 2},  {9, 16, 2, 9},  {9, 16, 9, 2},  {9, 23, 2, 2},
                   {16, 2, 2, 16}, {16, 2, 9, 9},  {16, 2, 16, 2}, {16, 9, 2, 9},  {16, 9, 9, 2},
                   {16, 16, 2, 2}, {23, 2, 2, 9},  {23, 2, 9, 2},  {23, 9, 2, 2},  {30, 2, 2, 2},
                   {3, 3, 3, 3},   {4, 4, 4, 18},  {4, 4, 11, 11}, {4, 4, 18, 4},  {4, 11, 4, 11},
                   {4, 11, 11, 4}, {4, 18, 4, 4},  {11, 4, 4, 11}, {11, 4, 11, 4}, {11, 11, 4, 4},
                   {18, 4, 4, 4},  {6, 6, 6, 6}});
}

inline std::vector<Int> eqmult_gaps() { return ints({1, 2, 3, 4, 7, 8, 9, 13, 14, 19}); }

}  // namespace kummer::testing
