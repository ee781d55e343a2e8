#pragma once

#include "zuck/zc.hpp"

namespace zuck {

// Product-size split and fixed complexity exponent of the base-10 counter.
inline constexpr double kAlpha10 = 0.57992;
inline constexpr double kGamma10 = 0.37938;

// hi/mi/lo block lengths for one composition: the lo block is forced from
// the mi block through the power of 2 dividing the digit product.
struct Split10 {
    int n_lo = 0, n_mi = 0, n_hi = 0;
    int u = 0; // forced-bit count: least u with 2^u >= 10^n_lo
    int v = 0; // exponent of 2 in the composition's product
};

Split10 choose_split(const DigitComposition& comp, int digits);

// The unique lo candidate for a given mi block value, or nothing when the
// forced value does not render as n_lo nonzero digits.
std::optional<std::pair<uint64_t, std::vector<uint8_t>>> forced_lo(
    u128 mi_value, const Split10& split);

// Count of N-digit multiples of the composition's product with exactly that
// composition, meet-in-the-middle over hi and mi blocks only.
u128 small_product_10(int digits, const DigitComposition& comp,
                      CountMode mode = CountMode::Count,
                      std::vector<u128>* witnesses = nullptr,
                      uint64_t* nodes = nullptr, const Budget& budget = {});

CountResult zuckerman_count_10(int digits, const ZcOptions& opt = {});

} // namespace zuck
