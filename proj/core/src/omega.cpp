#include "zuck/omega.hpp"

#include <algorithm>

namespace zuck {

std::vector<std::pair<int, int>> prime_factorization(int n) {
    std::vector<std::pair<int, int>> out;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

bool is_in_omega(Base base, const DigitSet& set) {
    for (auto [p, e] : prime_factorization(base.value)) {
        (void)e;
        bool divides_some = false;
        for (int d = 1; d < base.value; ++d)
            if (set.contains(d) && d % p == 0) { divides_some = true; break; }
        if (!divides_some) return true;
    }
    return false;
}

OmegaStarFamily omega_star(Base base) {
    OmegaStarFamily family;
    for (auto [p, e] : prime_factorization(base.value)) {
        (void)e;
        DigitSet set(base, 0u);
        for (int d = 1; d < base.value; ++d)
            if (d % p != 0) set.mask |= 1u << d;
        if (std::find(family.sets.begin(), family.sets.end(), set) ==
            family.sets.end())
            family.sets.push_back(set);
    }
    return family;
}

int v_b(Base base, const std::vector<int>& digits) {
    int result = 0;
    for (auto [p, a] : prime_factorization(base.value)) {
        uint64_t s = 0;
        for (int d : digits) s += valuation(p, d);
        if (s == 0) return 0; // b can never divide a product of these digits
        int need = static_cast<int>((a + s - 1) / s);
        result = std::max(result, need);
    }
    return result;
}

int w_b(Base base) {
    int b = base.value;
    int best = 0;
    // even masks only: digit 0 never participates
    for (uint32_t mask = 2; mask < (1u << b); mask += 2) {
        std::vector<int> digits;
        for (int d = 1; d < b; ++d)
            if ((mask >> d) & 1u) digits.push_back(d);
        best = std::max(best, v_b(base, digits));
    }
    return best;
}

bool composition_admissible(Base base, const DigitComposition& comp) {
    for (auto [p, a] : prime_factorization(base.value)) {
        uint64_t s = 0;
        for (int d = 1; d < base.value; ++d)
            s += static_cast<uint64_t>(comp.counts[d]) * valuation(p, d);
        if (s < static_cast<uint64_t>(a)) return true;
    }
    return false;
}

} // namespace zuck
