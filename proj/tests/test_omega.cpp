#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <set>

#include "zuck/omega.hpp"

using namespace zuck;

namespace {

// independent membership oracle: walk products of members mod b until a
// fixpoint; divisibility by b is reachability of residue 0
bool omega_oracle(int b, uint32_t mask) {
    std::set<int> reach{1 % b};
    bool grew = true;
    while (grew) {
        grew = false;
        for (int r : std::set<int>(reach))
            for (int d = 1; d < b; ++d)
                if ((mask >> d) & 1u)
                    if (reach.insert(r * d % b).second) grew = true;
    }
    return reach.count(0) == 0;
}

// literal min-max oracle with iterative deepening on the exponent cap
int v_oracle(int b, const std::vector<int>& digits) {
    auto factors = prime_factorization(b);
    int cap = 0;
    for (auto [p, a] : factors) cap = std::max(cap, 2 * a);
    for (int m = 1; m <= cap; ++m) {
        std::vector<int> v(digits.size(), 1);
        while (true) {
            bool ok = true;
            for (auto [p, a] : factors) {
                int64_t e = 0;
                for (size_t i = 0; i < digits.size(); ++i)
                    e += static_cast<int64_t>(v[i]) *
                         valuation(static_cast<uint32_t>(p),
                                   static_cast<uint32_t>(digits[i]));
                if (e < a) { ok = false; break; }
            }
            if (ok) return m;
            size_t i = 0;
            while (i < v.size() && v[i] == m) v[i++] = 1;
            if (i == v.size()) break;
            ++v[i];
        }
    }
    return 0;
}

} // namespace

TEST_CASE("membership examples") {
    CHECK_FALSE(is_in_omega(Base(10), DigitSet(Base(10), {2, 5})));
    CHECK(is_in_omega(Base(10), DigitSet(Base(10), {1, 3, 5, 7, 9})));
    CHECK(is_in_omega(Base(10), DigitSet(Base(10), 0u))); // empty set
}

TEST_CASE("membership matches the product-reachability oracle") {
    for (int b = 3; b <= 12; ++b)
        for (uint32_t mask = 0; mask < (1u << b); mask += 2)
            CHECK(is_in_omega(Base(b), DigitSet(Base(b), mask)) ==
                  omega_oracle(b, mask));
}

TEST_CASE("maximal family") {
    auto f7 = omega_star(Base(7));
    REQUIRE(f7.sets.size() == 1);
    CHECK(f7.sets[0].members() == std::vector<int>{1, 2, 3, 4, 5, 6});

    auto f10 = omega_star(Base(10));
    REQUIRE(f10.sets.size() == 2);
    CHECK(f10.sets[0].members() == std::vector<int>{1, 3, 5, 7, 9});
    CHECK(f10.sets[1].members() ==
          std::vector<int>{1, 2, 3, 4, 6, 7, 8, 9});

    auto f12 = omega_star(Base(12));
    REQUIRE(f12.sets.size() == 2);
    CHECK(f12.sets[0].members() == std::vector<int>{1, 3, 5, 7, 9, 11});
    CHECK(f12.sets[1].members() ==
          std::vector<int>{1, 2, 4, 5, 7, 8, 10, 11});
}

TEST_CASE("family members are maximal and pairwise incomparable") {
    for (int b = 3; b <= 16; ++b) {
        auto family = omega_star(Base(b));
        for (const DigitSet& set : family.sets) {
            CHECK(is_in_omega(Base(b), set));
            CHECK(set.size() >= 2);
            // every digit coprime to b is present
            for (int d = 1; d < b; ++d)
                if (std::gcd(d, b) == 1) CHECK(set.contains(d));
            // adding any missing digit must leave the family
            for (int d = 1; d < b; ++d) {
                if (set.contains(d)) continue;
                DigitSet larger = set;
                larger.mask |= 1u << d;
                CHECK_FALSE(is_in_omega(Base(b), larger));
            }
        }
        for (const DigitSet& a : family.sets)
            for (const DigitSet& c : family.sets)
                if (!(a == c)) CHECK((a.mask & ~c.mask) != 0);
    }
}

TEST_CASE("minimal uniform exponent examples") {
    CHECK(v_b(Base(10), {2, 5}) == 1);
    CHECK(v_b(Base(10), {3, 7}) == 0);
    CHECK(v_b(Base(8), {2}) == 3);
}

TEST_CASE("closed form matches the exponent-tuple oracle") {
    for (int b = 3; b <= 12; ++b)
        for (uint32_t mask = 2; mask < (1u << b); mask += 2) {
            std::vector<int> digits;
            for (int d = 1; d < b; ++d)
                if ((mask >> d) & 1u) digits.push_back(d);
            CHECK(v_b(Base(b), digits) == v_oracle(b, digits));
        }
}

TEST_CASE("maximum over subsets") {
    CHECK(w_b(Base(10)) == 1);
    CHECK(w_b(Base(8)) == 3);
    CHECK(w_b(Base(3)) == 0); // no digit of base 3 is a multiple of 3
}

TEST_CASE("digit-log inequality across the family") {
    // sum of log d over D exceeds |D| log(b)/2 from base 6 on, and the
    // bound genuinely fails below that
    auto holds = [](int b, const std::vector<int>& members) {
        double lhs = 0;
        for (int d : members) lhs += std::log(static_cast<double>(d));
        return lhs > members.size() * std::log(static_cast<double>(b)) / 2;
    };
    for (int b = 6; b <= 16; ++b)
        for (const DigitSet& set : omega_star(Base(b)).sets)
            CHECK(holds(b, set.members()));
    // larger radixes: build the sets straight from the prime complements
    for (int b = 17; b <= 50; ++b)
        for (auto [p, e] : prime_factorization(b)) {
            (void)e;
            std::vector<int> members;
            for (int d = 1; d < b; ++d)
                if (d % p != 0) members.push_back(d);
            CHECK(holds(b, members));
        }
    for (int b : {3, 4, 5}) {
        bool some_failure = false;
        for (const DigitSet& set : omega_star(Base(b)).sets)
            if (!holds(b, set.members())) some_failure = true;
        CHECK(some_failure);
    }
}

TEST_CASE("admissibility") {
    DigitComposition bad(Base(10));
    bad.counts[2] = 1;
    bad.counts[5] = 1;
    CHECK_FALSE(composition_admissible(Base(10), bad));

    DigitComposition odd(Base(10));
    odd.counts[9] = 5;
    CHECK(composition_admissible(Base(10), odd));

    DigitComposition mixed(Base(8));
    mixed.counts[2] = 2;
    mixed.counts[3] = 1;
    CHECK(composition_admissible(Base(8), mixed));
    DigitComposition eight(Base(8));
    eight.counts[2] = 3;
    CHECK_FALSE(composition_admissible(Base(8), eight));
}

TEST_CASE("admissibility equals direct divisibility") {
    for (int b = 3; b <= 12; ++b) {
        // exhaustive over strings of length 4
        for (int n = b * b * b; n < b * b * b * b; ++n) {
            DigitComposition comp{Base(b)};
            int m = n;
            bool zero = false;
            while (m > 0) {
                int d = m % b;
                if (d == 0) { zero = true; break; }
                comp.counts[d] += 1;
                m /= b;
            }
            if (zero) continue;
            BigInt p = 1;
            for (int d = 1; d < b; ++d)
                for (uint32_t i = 0; i < comp.counts[d]; ++i) p *= d;
            CHECK(composition_admissible(Base(b), comp) == (p % b != 0));
        }
    }
}
