// Published reference values the suites check against.
#pragma once

#include <cstdint>
#include <vector>

namespace golden {

// exponent triples for b = 3..12, truncated to four decimals
struct ExponentRow {
    int base;
    double z, z_plus, z_star;
};
inline const std::vector<ExponentRow> kExponents = {
    {3, .3690, .5257, .4318},  {4, .2075, .4024, .3018},
    {5, .4560, .6634, .4361},  {6, .3727, .5948, .3866},
    {7, .4604, .6885, .4559},  {8, .2483, .4988, .3304},
    {9, .3625, .6081, .4017},  {10, .4197, .6657, .4416},
    {11, .4481, .6977, .4653}, {12, .3537, .6130, .4068},
};

// count tables: counts[b] lists |Z_{b,N}| for N = 1..caps[b]
struct CountColumn {
    int base;
    std::vector<uint64_t> counts;
};
inline const std::vector<CountColumn> kCounts = {
    {3, {2, 2, 4, 6, 9, 10, 14, 33, 46, 43, 72, 171, 211, 252, 428, 728, 986,
         1400, 2214, 3450, 5007, 7370, 11234, 16981}},
    {4, {3, 2, 4, 7, 6, 8, 16, 18, 22, 36, 38, 53, 77, 96, 129, 177, 237, 317,
         425, 558, 772, 997, 1305, 1817, 2305, 3096, 4164, 5495}},
    {5, {4, 3, 14, 10, 42, 78, 184, 385, 795, 1570, 3208, 6411, 13741, 29200}},
    {6, {5, 4, 8, 20, 27, 55, 109, 188, 364, 653, 1095, 2076, 3866, 7373,
         14622, 27972}},
    {7, {6, 3, 23, 29, 96, 203, 533, 1295, 3299, 7630, 19130, 43687}},
    {8, {7, 4, 15, 9, 38, 49, 78, 163, 294, 376, 631, 1246, 1966, 3408, 6038,
         8291, 13470, 28419}},
    {9, {8, 5, 18, 33, 107, 191, 518, 914, 1959, 4903, 11129}},
    {10, {9, 5, 20, 40, 117, 285, 747, 1951, 5229, 13493, 35009, 91792}},
    {11, {10, 5, 33, 63, 224, 645, 2000, 5411, 16532}},
    {12, {11, 6, 21, 43, 107, 222, 544, 1213, 2718, 6267, 13738}},
};

// largest published (base, N, count) rows with the printed empirical
// exponent (8 truncated decimals) and relative error (2 significant digits)
struct ErrorRow {
    int base;
    int digits;
    uint64_t count;
    const char* empirical; // ".XXXXXXXX"
    double err_mant;       // leading two significant digits
    int err_exp;
};
inline const std::vector<ErrorRow> kErrors = {
    {3, 59, 24512322843ULL, "0.36907025", 1.7, -8},
    {4, 51, 4119790ULL, "0.21543273", 3.8, -2},
    {5, 31, 7612395846ULL, "0.45604067", 2.8, -8},
    {6, 31, 598683507ULL, "0.36385650", 2.3, -2},
    {7, 25, 5390633926ULL, "0.46061589", 2.5, -4},
    {8, 27, 2717026ULL, "0.26387156", 6.2, -2},
    {9, 23, 151573306ULL, "0.37273465", 2.8, -2},
    {10, 22, 1414773364ULL, "0.41594031", 9.1, -3},
    {11, 19, 737799286ULL, "0.44818212", 4.0, -5},
    {12, 16, 845908ULL, "0.34327662", 2.9, -2},
};

} // namespace golden
