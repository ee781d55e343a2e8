#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace zuck {

using u128 = unsigned __int128;

inline std::string to_string(u128 v) {
    if (v == 0) return "0";
    char buf[40];
    int i = 40;
    while (v > 0) {
        buf[--i] = static_cast<char>('0' + static_cast<unsigned>(v % 10));
        v /= 10;
    }
    return std::string(buf + i, buf + 40);
}

inline u128 u128_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty decimal string");
    u128 v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') throw std::invalid_argument("bad decimal digit");
        u128 next = v * 10 + static_cast<unsigned>(c - '0');
        if (next / 10 != v) throw std::overflow_error("u128 overflow in parse");
        v = next;
    }
    return v;
}

inline bool mul_overflow(u128 a, u128 b, u128& out) {
    return __builtin_mul_overflow(a, b, &out);
}

// (base^exp), nullopt on overflow
inline std::optional<u128> checked_pow(u128 base, unsigned exp) {
    u128 r = 1;
    while (exp > 0) {
        if (exp & 1) {
            if (mul_overflow(r, base, r)) return std::nullopt;
        }
        exp >>= 1;
        if (exp > 0 && mul_overflow(base, base, base)) return std::nullopt;
    }
    return r;
}

inline u128 addmod(u128 a, u128 b, u128 m) {
    // a, b < m; m may use all 128 bits
    a %= m;
    b %= m;
    u128 s = a + b;
    if (s < a || s >= m) s -= m;
    return s;
}

// (a * b) mod m for arbitrary 128-bit operands; shift-and-add
inline u128 mulmod(u128 a, u128 b, u128 m) {
    a %= m;
    if (a == 0 || b == 0) return 0;
    if (m <= UINT64_MAX || b <= (~u128{0}) / a) return (a * b) % m;
    u128 r = 0;
    while (b > 0) {
        if (b & 1) r = addmod(r, a, m);
        b >>= 1;
        if (b > 0) a = addmod(a, a, m);
    }
    return r;
}

inline u128 powmod(u128 base, unsigned exp, u128 m) {
    u128 r = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

struct U128Hash {
    size_t operator()(u128 v) const noexcept {
        uint64_t lo = static_cast<uint64_t>(v);
        uint64_t hi = static_cast<uint64_t>(v >> 64);
        uint64_t x = lo ^ (hi * 0x9e3779b97f4a7c15ULL);
        x ^= x >> 30; x *= 0xbf58476d1ce4e5b9ULL;
        x ^= x >> 27; x *= 0x94d049bb133111ebULL;
        x ^= x >> 31;
        return static_cast<size_t>(x);
    }
};

} // namespace zuck
