#pragma once

#include <gmpxx.h>

#include "zuck/int128.hpp"

namespace zuck {

using BigInt = mpz_class;

inline BigInt bigint_from_u128(u128 v) {
    BigInt hi(static_cast<unsigned long>(v >> 64));
    BigInt lo(static_cast<unsigned long>(v));
    return (hi << 64) + lo;
}

inline bool fits_u128(const BigInt& n) {
    return sgn(n) >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 128;
}

inline u128 u128_from_bigint(const BigInt& n) {
    if (!fits_u128(n)) throw std::overflow_error("value exceeds 128 bits");
    BigInt hi = n >> 64;
    BigInt lo = n - (hi << 64);
    return (static_cast<u128>(hi.get_ui()) << 64) | lo.get_ui();
}

} // namespace zuck
