#pragma once

/**
 * @file tables.hpp
 * @brief Published pinch sequences for K_1..K_5 and J_2..J_5, kept as
 *        literal data so that the verifier compares the engine against
 *        them rather than against itself.
 */

#include <array>
#include <span>
#include <utility>

#include "pinchknot/families.hpp"

namespace pinchknot::tables {

using pair = std::pair<integer, integer>;

struct Row {
    Family family;
    integer n;
    std::span<const pair> chain;  // start first, unknot last
};

inline constexpr std::array<pair, 3> k1{{{4, 9}, {2, 5}, {0, 1}}};
inline constexpr std::array<pair, 5> k2{{{8, 25}, {6, 19}, {4, 13}, {2, 7}, {0, 1}}};
inline constexpr std::array<pair, 7> k3{{{12, 49}, {10, 41}, {8, 33}, {6, 25}, {4, 17}, {2, 9}, {0, 1}}};
inline constexpr std::array<pair, 9> k4{{{16, 81}, {14, 71}, {12, 61}, {10, 51}, {8, 41}, {6, 31}, {4, 21}, {2, 11}, {0, 1}}};
inline constexpr std::array<pair, 11> k5{
    {{20, 121}, {18, 109}, {16, 97}, {14, 85}, {12, 73}, {10, 61}, {8, 49}, {6, 37}, {4, 25}, {2, 13}, {0, 1}}};

inline constexpr std::array<pair, 5> j2{{{8, 9}, {6, 7}, {4, 5}, {2, 3}, {0, 1}}};
inline constexpr std::array<pair, 7> j3{{{12, 25}, {10, 21}, {8, 17}, {6, 13}, {4, 9}, {2, 5}, {0, 1}}};
inline constexpr std::array<pair, 9> j4{{{16, 49}, {14, 43}, {12, 37}, {10, 31}, {8, 25}, {6, 19}, {4, 13}, {2, 7}, {0, 1}}};
inline constexpr std::array<pair, 11> j5{
    {{20, 81}, {18, 73}, {16, 65}, {14, 57}, {12, 49}, {10, 41}, {8, 33}, {6, 25}, {4, 17}, {2, 9}, {0, 1}}};

inline const std::array<Row, 5> k_rows{{
    {Family::K, 1, k1}, {Family::K, 2, k2}, {Family::K, 3, k3}, {Family::K, 4, k4}, {Family::K, 5, k5},
}};

inline const std::array<Row, 4> j_rows{{
    {Family::J, 2, j2}, {Family::J, 3, j3}, {Family::J, 4, j4}, {Family::J, 5, j5},
}};

}  // namespace pinchknot::tables
