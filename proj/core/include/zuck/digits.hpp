#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "zuck/bigint.hpp"
#include "zuck/int128.hpp"

namespace zuck {

// Radix in [3, 16]. Base 2 is excluded on purpose: its digit-product
// divisibility degenerates to the repunit case.
struct Base {
    int value;

    explicit Base(int b) : value(b) {
        if (b < 3 || b > 16)
            throw std::invalid_argument("base must be in [3, 16]");
    }
};

// Digits most-significant first, no leading zero.
struct DigitString {
    int base;
    std::vector<uint8_t> digits;

    BigInt value() const;
    // Canonical form: one char per digit (0-9 then a-f).
    // Verbose form: comma-separated decimal digits.
    std::string str(bool verbose = false) const;
};

// Multiplicities N_d of the nonzero digits d in [1, b-1]; counts[0] stays 0.
struct DigitComposition {
    int base;
    std::vector<uint32_t> counts; // indexed by digit, size == base

    DigitComposition() : base(0) {}
    explicit DigitComposition(Base b) : base(b.value), counts(b.value, 0) {}

    uint64_t total() const {
        uint64_t n = 0;
        for (uint32_t c : counts) n += c;
        return n;
    }
    bool operator==(const DigitComposition& o) const {
        return base == o.base && counts == o.counts;
    }
};

// Exact digit product with its factorization over the primes below the base.
struct DigitProduct {
    u128 value = 1;
    std::map<int, uint32_t> factorization;

    // Throws std::overflow_error("product-overflow") past 128 bits.
    static DigitProduct of(const DigitComposition& comp);
};

DigitString to_digits(const BigInt& n, Base base);
BigInt digit_product(const BigInt& n, Base base);
bool is_zuckerman(const BigInt& n, Base base);
DigitComposition composition_of(const BigInt& n, Base base);
std::set<int> digit_set(const BigInt& n, Base base);

// Fast paths for numbers that fit 128 bits (the counters never leave them).
std::vector<uint8_t> to_digits_u128(u128 n, int base);
u128 digit_product_u128(u128 n, int base);
bool is_zuckerman_u128(u128 n, int base);

// p-adic valuation of a digit (or any small integer)
inline uint32_t valuation(uint32_t p, uint32_t d) {
    uint32_t v = 0;
    while (d % p == 0) { d /= p; ++v; }
    return v;
}

} // namespace zuck
