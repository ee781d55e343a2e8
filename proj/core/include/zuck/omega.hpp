#pragma once

#include <vector>

#include "zuck/digits.hpp"

namespace zuck {

// Subset of the nonzero digits {1, ..., b-1}, kept as a bitmask.
struct DigitSet {
    int base;
    uint32_t mask = 0;

    DigitSet() : base(0) {}
    DigitSet(Base b, uint32_t m) : base(b.value), mask(m) {}
    DigitSet(Base b, const std::vector<int>& digits) : base(b.value) {
        for (int d : digits) mask |= 1u << d;
    }

    bool contains(int d) const { return (mask >> d) & 1u; }
    int size() const { return __builtin_popcount(mask); }
    std::vector<int> members() const {
        std::vector<int> out;
        for (int d = 1; d < base; ++d)
            if (contains(d)) out.push_back(d);
        return out;
    }
    bool operator==(const DigitSet& o) const {
        return base == o.base && mask == o.mask;
    }
};

struct OmegaStarFamily {
    std::vector<DigitSet> sets;
};

std::vector<std::pair<int, int>> prime_factorization(int n);

// True iff no finite product of members (repetitions allowed) is divisible
// by the base; equivalently, some prime factor of the base divides no member.
bool is_in_omega(Base base, const DigitSet& set);

// The maximal members of the family: one set {d : p does not divide d} per
// prime factor p of the base, deduplicated.
OmegaStarFamily omega_star(Base base);

// Minimal possible max exponent v such that b | d_1^{v_1} ... d_k^{v_k}
// with all v_i >= 1 and max(v_i) = v; 0 when no exponents work.
int v_b(Base base, const std::vector<int>& digits);

// Maximum of v_b over all nonempty digit subsets.
int w_b(Base base);

// True iff b does not divide the composition's digit product. Compositions
// failing this contain no Zuckerman numbers and are skipped by the counters.
bool composition_admissible(Base base, const DigitComposition& comp);

} // namespace zuck
