#pragma once

#include <array>
#include <string_view>
#include <utility>
#include <vector>

// Published reference values, transcribed once and kept verbatim so that a
// failure in the generators cannot silently rewrite the expectations the
// suite checks against. Everything below is data, no logic.

namespace entringer::fixtures {

// Entringer triangle rows n = 1..7.
inline const std::vector<std::vector<long long>> triangle_rows = {
    {1},
    {0, 1},
    {0, 1, 1},
    {0, 1, 2, 2},
    {0, 2, 4, 5, 5},
    {0, 5, 10, 14, 16, 16},
    {0, 16, 32, 46, 56, 61, 61},
};

// Euler numbers E_0..E_8 (tan + sec series coefficients).
inline constexpr std::array<long long, 9> euler_series = {1, 1, 1, 2, 5, 16, 61, 272, 1385};

// The five down-up permutations of [4].
inline const std::vector<std::vector<int>> du4 = {
    {2, 1, 4, 3}, {3, 2, 4, 1}, {3, 1, 4, 2}, {4, 2, 3, 1}, {4, 1, 3, 2}};

// Encoding sequences of [4], grouped by k = 2, 3, 4. Triples are (j,i,star).
using DominoTriple = std::array<int, 3>;
inline const std::vector<std::vector<std::vector<DominoTriple>>> es4_by_k = {
    // k = 2
    {{{2, 1, 1}, {4, 3, 1}}},
    // k = 3
    {{{3, 2, 1}, {4, 1, 1}}, {{3, 2, 0}, {2, 1, 1}, {4, 3, 1}}},
    // k = 4
    {{{4, 3, 0}, {3, 2, 1}, {4, 1, 1}}, {{4, 3, 0}, {3, 2, 0}, {2, 1, 1}, {4, 3, 1}}},
};

// The five min-max alternating permutations of [4].
inline const std::vector<std::vector<int>> mm4 = {
    {1, 4, 2, 3}, {1, 3, 2, 4}, {3, 1, 4, 2}, {2, 3, 1, 4}, {2, 1, 4, 3}};

// Primitive G-words and R-words on [6].
inline const std::vector<std::vector<int>> gw4 = {{6, 3, 4, 2, 1, 5},
                                                  {6, 4, 2, 3, 1, 5},
                                                  {6, 2, 3, 4, 1, 5},
                                                  {6, 4, 3, 2, 1, 5},
                                                  {6, 2, 4, 3, 1, 5}};
inline const std::vector<std::vector<int>> rw4 = {{6, 2, 1, 4, 3, 5},
                                                  {6, 2, 3, 1, 4, 5},
                                                  {6, 1, 4, 2, 3, 5},
                                                  {6, 3, 1, 2, 4, 5},
                                                  {6, 2, 4, 1, 3, 5}};

// The five U-words of length 4.
inline const std::vector<std::vector<int>> uw4 = {
    {1, 1, 1, 1}, {1, 1, 1, 2}, {1, 1, 1, 3}, {1, 1, 2, 1}, {1, 1, 2, 2}};

// Worked example: the left-to-right code of 7 4 8 5 9 1 6 2 3 and the tree
// it maps to, whose minimal path is (1,2,4,5,7).
inline const std::vector<int> example_word = {7, 4, 8, 5, 9, 1, 6, 2, 3};
inline const std::vector<DominoTriple> example_code = {
    {7, 6, 0}, {6, 5, 0}, {5, 4, 1}, {8, 7, 0}, {7, 6, 1}, {9, 8, 0},
    {8, 3, 0}, {3, 2, 0}, {2, 1, 1}, {9, 8, 0}, {8, 3, 1}, {9, 9, 1}};
inline const std::vector<std::pair<int, int>> example_tree = {
    {2, 1}, {3, 1}, {4, 2}, {5, 4}, {6, 3}, {7, 5}, {8, 4}, {9, 5}};
inline const std::vector<int> example_minimal_path = {1, 2, 4, 5, 7};

// The tree built from the G-word 8 2 5 4 6 3 1 7, and its route.
inline const std::vector<int> gword_example = {8, 2, 5, 4, 6, 3, 1, 7};
inline const std::vector<std::pair<int, int>> gword_example_tree = {
    {2, 1}, {3, 2}, {4, 1}, {5, 2}, {6, 4}};
inline const std::vector<int> gword_example_route = {8, 7, 6, 5, 4, 4, 4, 4};

// ---------------------------------------------------------------------------
// The twelve-interpretation table for n = 4: five columns (k = 2, 3, 3, 4, 4),
// twelve rows. Cells are rendered in the notation used throughout the CLI:
// permutations and integer sequences as digit strings, encoding sequences in
// domino notation, trees as (child,parent) edge lists.
//
// Row 8, column 5 is misprinted in the source ("2324" repeats a letter); the
// checker treats that one cell as a known erratum and expects 2314 instead.
// ---------------------------------------------------------------------------

inline constexpr int golden_rows = 12;
inline constexpr int golden_cols = 5;
inline constexpr std::array<int, golden_cols> golden_k = {2, 3, 3, 4, 4};

inline constexpr std::array<std::string_view, golden_rows> golden_row_label = {
    "du", "es", "bt", "btp", "dup", "mm", "mmp", "mmpp", "gw", "rw", "uw", "uwp"};

inline const std::array<std::array<std::string_view, golden_cols>, golden_rows> golden_table = {{
    // (1) DU
    {"2143", "3241", "3142", "4231", "4132"},
    // (2) ES
    {"(2,1)* (4,3)*", "(3,2)* (4,1)*", "(3,2) (2,1)* (4,3)*", "(4,3) (3,2)* (4,1)*",
     "(4,3) (3,2) (2,1)* (4,3)*"},
    // (3) BT, leaf statistic
    {"(2,1)(3,1)(4,3)", "(2,1)(3,2)(4,2)", "(2,1)(3,2)(4,1)", "(2,1)(3,2)(4,3)",
     "(2,1)(3,1)(4,2)"},
    // (4) BT', parent-of-n statistic
    {"(2,1)(3,2)(4,1)", "(2,1)(3,2)(4,2)", "(2,1)(3,1)(4,2)", "(2,1)(3,2)(4,3)",
     "(2,1)(3,1)(4,3)"},
    // (5) DU'
    {"4132", "4231", "3142", "3241", "2143"},
    // (6) MM
    {"1423", "1324", "3142", "2314", "2143"},
    // (7) MM'
    {"2143", "2314", "3142", "1324", "1423"},
    // (8) MM''  (last cell: source misprint, computed value is 2314)
    {"2143", "1423", "3142", "1324", "2324"},
    // (9) GW
    {"634215", "642315", "623415", "643215", "624315"},
    // (10) RW
    {"621435", "623145", "614235", "631245", "624135"},
    // (11) UW
    {"1113", "1122", "1112", "1121", "1111"},
    // (12) UW'
    {"1111", "1121", "1112", "1122", "1113"},
}};

inline constexpr int golden_erratum_row = 7;  // 0-based: row (8)
inline constexpr int golden_erratum_col = 4;
inline constexpr std::string_view golden_erratum_computed = "2314";

}  // namespace entringer::fixtures
