// Table of Conway polynomials C_{p,n} over F_p, coefficients low to high
// (degree-n entry has n+1 coefficients; the top coefficient is 1).
// Generated once and kept as fixed data so that extension-field
// representations are reproducible across implementations.
#pragma once

#include <cstdint>
#include <cstddef>

namespace dmf {

struct ConwayEntry {
    uint32_t p;
    uint32_t n;
    const uint8_t* coeffs;  // n+1 entries, low to high
};

inline constexpr uint8_t kConway_2_1[] = {1, 1};
inline constexpr uint8_t kConway_2_2[] = {1, 1, 1};
inline constexpr uint8_t kConway_2_3[] = {1, 1, 0, 1};
inline constexpr uint8_t kConway_2_4[] = {1, 1, 0, 0, 1};
inline constexpr uint8_t kConway_2_5[] = {1, 0, 1, 0, 0, 1};
inline constexpr uint8_t kConway_2_6[] = {1, 1, 0, 1, 1, 0, 1};
inline constexpr uint8_t kConway_2_7[] = {1, 1, 0, 0, 0, 0, 0, 1};
inline constexpr uint8_t kConway_2_8[] = {1, 0, 1, 1, 1, 0, 0, 0, 1};
inline constexpr uint8_t kConway_2_9[] = {1, 0, 0, 0, 1, 0, 0, 0, 0, 1};
inline constexpr uint8_t kConway_2_10[] = {1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1};
inline constexpr uint8_t kConway_2_11[] = {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1};
inline constexpr uint8_t kConway_2_12[] = {1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1};
inline constexpr uint8_t kConway_2_13[] = {1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1};
inline constexpr uint8_t kConway_2_14[] = {1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 1};
inline constexpr uint8_t kConway_2_15[] = {1, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1};
inline constexpr uint8_t kConway_2_16[] = {1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1};
inline constexpr uint8_t kConway_3_1[] = {1, 1};
inline constexpr uint8_t kConway_3_2[] = {2, 2, 1};
inline constexpr uint8_t kConway_3_3[] = {1, 2, 0, 1};
inline constexpr uint8_t kConway_3_4[] = {2, 0, 0, 2, 1};
inline constexpr uint8_t kConway_3_5[] = {1, 2, 0, 0, 0, 1};
inline constexpr uint8_t kConway_3_6[] = {2, 2, 1, 0, 2, 0, 1};
inline constexpr uint8_t kConway_3_7[] = {1, 0, 2, 0, 0, 0, 0, 1};
inline constexpr uint8_t kConway_3_8[] = {2, 2, 2, 0, 1, 2, 0, 0, 1};
inline constexpr uint8_t kConway_3_9[] = {1, 1, 2, 2, 0, 0, 0, 0, 0, 1};
inline constexpr uint8_t kConway_3_10[] = {2, 1, 0, 0, 2, 2, 2, 0, 0, 0, 1};
inline constexpr uint8_t kConway_5_1[] = {3, 1};
inline constexpr uint8_t kConway_5_2[] = {2, 4, 1};
inline constexpr uint8_t kConway_5_3[] = {3, 3, 0, 1};
inline constexpr uint8_t kConway_5_4[] = {2, 4, 4, 0, 1};
inline constexpr uint8_t kConway_5_5[] = {3, 4, 0, 0, 0, 1};
inline constexpr uint8_t kConway_5_6[] = {2, 0, 1, 4, 1, 0, 1};
inline constexpr uint8_t kConway_7_1[] = {4, 1};
inline constexpr uint8_t kConway_7_2[] = {3, 6, 1};
inline constexpr uint8_t kConway_7_3[] = {4, 0, 6, 1};
inline constexpr uint8_t kConway_7_4[] = {3, 4, 5, 0, 1};
inline constexpr uint8_t kConway_7_5[] = {4, 1, 0, 0, 0, 1};
inline constexpr uint8_t kConway_11_1[] = {9, 1};
inline constexpr uint8_t kConway_11_2[] = {2, 7, 1};
inline constexpr uint8_t kConway_11_3[] = {9, 2, 0, 1};
inline constexpr uint8_t kConway_13_1[] = {11, 1};
inline constexpr uint8_t kConway_13_2[] = {2, 12, 1};
inline constexpr uint8_t kConway_13_3[] = {11, 2, 0, 1};

inline constexpr ConwayEntry kConwayTable[] = {
    {2, 1, kConway_2_1},
    {2, 2, kConway_2_2},
    {2, 3, kConway_2_3},
    {2, 4, kConway_2_4},
    {2, 5, kConway_2_5},
    {2, 6, kConway_2_6},
    {2, 7, kConway_2_7},
    {2, 8, kConway_2_8},
    {2, 9, kConway_2_9},
    {2, 10, kConway_2_10},
    {2, 11, kConway_2_11},
    {2, 12, kConway_2_12},
    {2, 13, kConway_2_13},
    {2, 14, kConway_2_14},
    {2, 15, kConway_2_15},
    {2, 16, kConway_2_16},
    {3, 1, kConway_3_1},
    {3, 2, kConway_3_2},
    {3, 3, kConway_3_3},
    {3, 4, kConway_3_4},
    {3, 5, kConway_3_5},
    {3, 6, kConway_3_6},
    {3, 7, kConway_3_7},
    {3, 8, kConway_3_8},
    {3, 9, kConway_3_9},
    {3, 10, kConway_3_10},
    {5, 1, kConway_5_1},
    {5, 2, kConway_5_2},
    {5, 3, kConway_5_3},
    {5, 4, kConway_5_4},
    {5, 5, kConway_5_5},
    {5, 6, kConway_5_6},
    {7, 1, kConway_7_1},
    {7, 2, kConway_7_2},
    {7, 3, kConway_7_3},
    {7, 4, kConway_7_4},
    {7, 5, kConway_7_5},
    {11, 1, kConway_11_1},
    {11, 2, kConway_11_2},
    {11, 3, kConway_11_3},
    {13, 1, kConway_13_1},
    {13, 2, kConway_13_2},
    {13, 3, kConway_13_3},
};

inline constexpr size_t kConwayTableSize = sizeof(kConwayTable) / sizeof(kConwayTable[0]);

}  // namespace dmf
