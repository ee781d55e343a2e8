#pragma once

#include <cstdint>
#include <vector>

#include "zuck/int128.hpp"

namespace zuck::detail {

// Residue arithmetic with a fixed modulus below 2^59: Barrett reduction,
// valid for any 64-bit operand.
struct Mod64 {
    using Res = uint64_t;
    uint64_t m;
    uint64_t magic;

    explicit Mod64(uint64_t mod) : m(mod) {
        magic = m >= 2 ? static_cast<uint64_t>((u128{1} << 64) / m) : 0;
    }

    uint64_t reduce(uint64_t x) const {
        if (m == 1) return 0;
        uint64_t q = static_cast<uint64_t>((static_cast<u128>(x) * magic) >> 64);
        uint64_t r = x - q * m;
        if (r >= m) r -= m;
        return r;
    }

    Res one() const { return 1 % m; }

    // (r * base + d) mod m; r < m, base <= 16
    Res append(Res r, unsigned base, unsigned d) const {
        return reduce(r * base + d);
    }
    // (s + d * p) mod m; s < m, p < m, d <= 16
    Res add_scaled(Res s, unsigned d, Res p) const { return reduce(s + d * p); }
    Res mul(Res a, Res b) const {
        return static_cast<uint64_t>((static_cast<u128>(a) * b) % m);
    }
    Res neg(Res s) const { return s == 0 ? 0 : m - s; }
};

// Fallback for products that need all 128 bits.
struct Mod128 {
    using Res = u128;
    u128 m;

    explicit Mod128(u128 mod) : m(mod) {}

    Res one() const { return u128{1} % m; }
    Res append(Res r, unsigned base, unsigned d) const {
        return addmod(mulmod(r, base, m), static_cast<u128>(d) % m, m);
    }
    Res add_scaled(Res s, unsigned d, Res p) const {
        return addmod(s, mulmod(p, d, m), m);
    }
    Res mul(Res a, Res b) const { return mulmod(a, b, m); }
    Res neg(Res s) const { return s == 0 ? 0 : m - s; }
};

constexpr uint64_t kMod64Limit = uint64_t{1} << 59;

// Open-addressing residue -> multiplicity counter. Keys are residues mod P,
// so the all-ones sentinel can never be a key.
template <class Res>
class FlatCounter {
public:
    void reserve(size_t n) {
        size_t cap = 16;
        while (cap * 7 < n * 10) cap *= 2;
        if (cap > keys_.size()) rehash(cap);
    }

    void add(Res key) {
        if (keys_.empty()) rehash(16);
        size_t i = slot(key);
        while (true) {
            if (keys_[i] == kFree) {
                keys_[i] = key;
                cnt_[i] = 1;
                if (++size_ * 10 >= keys_.size() * 7) rehash(keys_.size() * 2);
                return;
            }
            if (keys_[i] == key) {
                ++cnt_[i];
                return;
            }
            i = (i + 1) & (keys_.size() - 1);
        }
    }

    uint64_t lookup(Res key) const {
        if (keys_.empty()) return 0;
        size_t i = slot(key);
        while (true) {
            if (keys_[i] == kFree) return 0;
            if (keys_[i] == key) return cnt_[i];
            i = (i + 1) & (keys_.size() - 1);
        }
    }

    size_t entries() const { return size_; }

private:
    static constexpr Res kFree = ~Res{0};

    size_t slot(Res key) const {
        uint64_t x = static_cast<uint64_t>(key) ^
                     (static_cast<uint64_t>(key >> 32) * 0x9e3779b97f4a7c15ULL);
        x ^= x >> 29;
        x *= 0xbf58476d1ce4e5b9ULL;
        x ^= x >> 32;
        return static_cast<size_t>(x) & (keys_.size() - 1);
    }

    void rehash(size_t n) {
        std::vector<Res> old_keys = std::move(keys_);
        std::vector<uint64_t> old_cnt = std::move(cnt_);
        keys_.assign(n, kFree);
        cnt_.assign(n, 0);
        for (size_t i = 0; i < old_keys.size(); ++i) {
            if (old_keys[i] == kFree) continue;
            size_t j = slot(old_keys[i]);
            while (keys_[j] != kFree) j = (j + 1) & (n - 1);
            keys_[j] = old_keys[i];
            cnt_[j] = old_cnt[i];
        }
    }

    std::vector<Res> keys_;
    std::vector<uint64_t> cnt_;
    size_t size_ = 0;
};

} // namespace zuck::detail
