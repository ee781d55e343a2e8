#pragma once

#include <functional>
#include <vector>

#include "zuck/digits.hpp"
#include "zuck/omega.hpp"

namespace zuck {

enum class CountMode { Count, Enumerate };

struct Budget {
    uint64_t max_nodes = 4'000'000'000ULL;
    uint64_t max_dp_states = 100'000'000ULL;
};

struct CountStats {
    uint64_t nodes = 0;
    double wall_ms = 0;
};

struct CountResult {
    u128 count = 0;
    std::vector<u128> witnesses; // sorted ascending, Enumerate mode only
    CountStats stats;
};

// Streams every composition of N nonzero digits; with admissible_only, skips
// the ones whose product the base divides. The callback gets the composition
// and its exact product.
void for_each_composition(
    Base base, int digits, bool admissible_only,
    const std::function<void(const DigitComposition&, u128)>& fn);

// Distinct achievable digit products over admissible compositions, sorted.
std::vector<u128> achievable_products(Base base, int digits);

// Largest integer <= b^(alpha*digits), saturating at the 128-bit limit.
u128 product_threshold(Base base, double alpha, int digits);

// Tests every string of N nonzero digits against the definitional check.
CountResult count_brute(Base base, int digits,
                        CountMode mode = CountMode::Count,
                        const Budget& budget = {});

// Walks multiples of each large achievable product; small products fall to a
// digit-string search with divisibility tested at the leaves.
CountResult count_multiples(Base base, int digits, double alpha,
                            CountMode mode = CountMode::Count,
                            unsigned threads = 1, const Budget& budget = {});

// Same split as count_multiples, small-product side replaced by a dynamic
// program over (residue mod p, running-product divisor of p). Count only.
CountResult count_dp(Base base, int digits, double alpha, unsigned threads = 1,
                     const Budget& budget = {});

// Meet-in-the-middle over half-length digit products.
CountResult count_mitm(Base base, int digits,
                       CountMode mode = CountMode::Count, unsigned threads = 1,
                       const Budget& budget = {});

} // namespace zuck
