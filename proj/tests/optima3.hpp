#pragma once

// Optimal sizes for three-variable tuples with s_hat <= 15 (sums 4 and 8 are
// covered by the power-of-two rule and not listed).

#include <array>

struct Optimum3 {
    std::array<long, 3> s;
    int size;
};

inline constexpr Optimum3 kOptima3[] = {
    {{1, 1, 1}, 3},
    {{2, 2, 1}, 4}, {{3, 1, 1}, 4},
    {{3, 2, 1}, 3}, {{4, 1, 1}, 3},
    {{3, 2, 2}, 4}, {{3, 3, 1}, 4}, {{4, 2, 1}, 3}, {{5, 1, 1}, 4},
    {{4, 3, 2}, 4}, {{4, 4, 1}, 5}, {{5, 2, 2}, 5}, {{5, 3, 1}, 5}, {{6, 2, 1}, 4}, {{7, 1, 1}, 5},
    {{4, 3, 3}, 4}, {{5, 3, 2}, 4}, {{5, 4, 1}, 4}, {{6, 3, 1}, 4}, {{7, 2, 1}, 4}, {{8, 1, 1}, 4},
    {{4, 4, 3}, 5}, {{5, 3, 3}, 5}, {{5, 4, 2}, 4}, {{5, 5, 1}, 5}, {{6, 3, 2}, 4},
    {{6, 4, 1}, 4}, {{7, 2, 2}, 5}, {{7, 3, 1}, 5}, {{8, 2, 1}, 4}, {{9, 1, 1}, 5},
    {{5, 4, 3}, 4}, {{5, 5, 2}, 4}, {{6, 5, 1}, 4}, {{7, 3, 2}, 4},
    {{7, 4, 1}, 4}, {{8, 3, 1}, 4}, {{9, 2, 1}, 4}, {{10, 1, 1}, 4},
    {{5, 4, 4}, 5}, {{5, 5, 3}, 5}, {{6, 4, 3}, 4}, {{6, 5, 2}, 5}, {{6, 6, 1}, 5},
    {{7, 3, 3}, 5}, {{7, 4, 2}, 4}, {{7, 5, 1}, 5}, {{8, 3, 2}, 4}, {{8, 4, 1}, 4},
    {{9, 2, 2}, 5}, {{9, 3, 1}, 5}, {{10, 2, 1}, 5}, {{11, 1, 1}, 5},
    {{5, 5, 4}, 4}, {{6, 5, 3}, 4}, {{7, 4, 3}, 4}, {{7, 5, 2}, 4}, {{7, 6, 1}, 4},
    {{8, 3, 3}, 4}, {{8, 5, 1}, 4}, {{9, 3, 2}, 5}, {{9, 4, 1}, 4}, {{10, 3, 1}, 5},
    {{11, 2, 1}, 4}, {{12, 1, 1}, 4},
    {{6, 5, 4}, 5}, {{7, 4, 4}, 5}, {{7, 5, 3}, 6}, {{7, 6, 2}, 5}, {{7, 7, 1}, 5},
    {{8, 4, 3}, 4}, {{8, 5, 2}, 4}, {{8, 6, 1}, 4}, {{9, 4, 2}, 4}, {{9, 5, 1}, 5},
    {{10, 3, 2}, 5}, {{10, 4, 1}, 4}, {{11, 2, 2}, 5}, {{11, 3, 1}, 5}, {{12, 2, 1}, 4}, {{13, 1, 1}, 5},
};
