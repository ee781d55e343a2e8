#include "zuck/zc10.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <unordered_map>

#include "zuck/exponents.hpp"
#include "zuck/parallel.hpp"

namespace zuck {

namespace {

using Clock = std::chrono::steady_clock;

constexpr u128 kSaturated = ~u128{0};

u128 sat_mul(u128 a, u128 b) {
    u128 r;
    return mul_overflow(a, b, r) ? kSaturated : r;
}

u128 sat_add(u128 a, u128 b) {
    u128 r = a + b;
    return r < a ? kSaturated : r;
}

uint64_t pow10_u64(int e) {
    uint64_t r = 1;
    while (e-- > 0) r *= 10;
    return r;
}

// number of distinct digit strings of each length drawable from the
// composition (saturating at 2^128-1)
std::vector<u128> arrangement_counts(const DigitComposition& comp, int max_len) {
    std::vector<std::vector<u128>> binom(static_cast<size_t>(max_len) + 1);
    for (int i = 0; i <= max_len; ++i) {
        binom[static_cast<size_t>(i)].assign(static_cast<size_t>(i) + 1, 1);
        for (int j = 1; j < i; ++j)
            binom[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                sat_add(binom[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)],
                        binom[static_cast<size_t>(i - 1)][static_cast<size_t>(j)]);
    }
    std::vector<u128> ways(static_cast<size_t>(max_len) + 1, 0);
    ways[0] = 1;
    for (int d = 1; d < comp.base; ++d) {
        uint32_t cap = comp.counts[d];
        if (cap == 0) continue;
        std::vector<u128> next(static_cast<size_t>(max_len) + 1, 0);
        for (int j = 0; j <= max_len; ++j) {
            if (ways[static_cast<size_t>(j)] == 0) continue;
            for (uint32_t t = 0; t <= cap && j + static_cast<int>(t) <= max_len;
                 ++t) {
                int j2 = j + static_cast<int>(t);
                u128 c = binom[static_cast<size_t>(j2)][static_cast<size_t>(t)];
                next[static_cast<size_t>(j2)] =
                    sat_add(next[static_cast<size_t>(j2)],
                            sat_mul(ways[static_cast<size_t>(j)], c));
            }
        }
        ways = std::move(next);
    }
    return ways;
}

} // namespace

Split10 choose_split(const DigitComposition& comp, int digits) {
    if (comp.base != 10)
        throw std::invalid_argument("split is specific to base 10");
    Split10 split;
    for (int d : {2, 4, 6, 8})
        split.v += static_cast<int>(comp.counts[d]) * static_cast<int>(valuation(2, static_cast<uint32_t>(d)));

    const double log2_ = std::log(2.0), log5 = std::log(5.0);
    const double log8 = std::log(8.0), log10 = std::log(10.0);
    double cap_v = split.v * log2_ / log10;
    double cap_gamma = kGamma10 * digits * (log10 * log2_) / (log8 * log5);
    int n_lo = static_cast<int>(std::floor(std::min(cap_v, cap_gamma)));
    if (n_lo < 0) n_lo = 0;
    // the forced-bit count must not exceed v; integer-check the float floor
    while (n_lo > 0) {
        u128 p10 = *checked_pow(10, static_cast<unsigned>(n_lo));
        int shift = std::min(split.v, 120);
        if (p10 <= (u128{1} << shift)) break;
        --n_lo;
    }
    split.n_lo = n_lo;
    if (n_lo == 0) {
        split.n_mi = 0;
        split.n_hi = digits;
        return split;
    }
    int u = 0;
    while ((u128{1} << u) < *checked_pow(10, static_cast<unsigned>(n_lo))) ++u;
    split.u = u;

    int rest = digits - n_lo;
    std::vector<u128> ways = arrangement_counts(comp, rest);
    u128 target = ways[static_cast<size_t>(rest)];
    int balanced = rest;
    for (int m = 0; m <= rest; ++m) {
        u128 sq = sat_mul(ways[static_cast<size_t>(m)], ways[static_cast<size_t>(m)]);
        if (sq >= target) { balanced = m; break; }
    }
    int n_mi = static_cast<int>(std::floor(
        std::max(log10 / log8 * kGamma10 * digits, static_cast<double>(balanced))));
    n_mi = std::max(n_mi, u - n_lo);
    n_mi = std::min(n_mi, rest);
    split.n_mi = n_mi;
    split.n_hi = rest - n_mi;
    return split;
}

std::optional<std::pair<uint64_t, std::vector<uint8_t>>> forced_lo(
    u128 mi_value, const Split10& split) {
    if (split.n_lo < 1) throw std::invalid_argument("split has no lo block");
    if (split.u >= 63) throw std::overflow_error("forced-bit count too large");
    uint64_t mask = (uint64_t{1} << split.u) - 1;
    uint64_t p10 = pow10_u64(split.n_lo) & mask;
    uint64_t mi_low = static_cast<uint64_t>(mi_value) & mask;
    uint64_t prod = static_cast<uint64_t>(
        (static_cast<u128>(p10) * mi_low) & mask);
    uint64_t lo = (~prod + 1) & mask; // (-prod) mod 2^u
    uint64_t lower = pow10_u64(split.n_lo - 1);
    if (lo < lower || lo >= lower * 10) return std::nullopt;
    std::vector<uint8_t> digits(static_cast<size_t>(split.n_lo));
    uint64_t rest = lo;
    for (int i = split.n_lo - 1; i >= 0; --i) {
        uint8_t d = static_cast<uint8_t>(rest % 10);
        if (d == 0) return std::nullopt;
        digits[static_cast<size_t>(i)] = d;
        rest /= 10;
    }
    return std::make_pair(lo, std::move(digits));
}

namespace {

struct Groups10 {
    struct Group {
        std::unordered_map<uint64_t, uint64_t> mult;
        std::unordered_map<uint64_t, std::vector<u128>> values;
    };
    std::unordered_map<uint64_t, Group> by_counts;
};

} // namespace

u128 small_product_10(int digits, const DigitComposition& comp, CountMode mode,
                      std::vector<u128>* witnesses, uint64_t* nodes,
                      const Budget& budget) {
    Base base(10);
    u128 product = DigitProduct::of(comp).value;
    Split10 split = choose_split(comp, digits);
    if (split.n_lo == 0 || split.n_hi == 0 || product >= (u128{1} << 59))
        return zc_small_product(base, digits, comp, 0.5, mode, witnesses,
                                nodes, budget);
    if (mode == CountMode::Enumerate && witnesses == nullptr)
        throw std::invalid_argument("enumerate mode needs a witness sink");

    uint64_t pu = static_cast<uint64_t>(product);
    std::vector<uint64_t> pow_mod(static_cast<size_t>(digits) + 1, 1 % pu);
    for (int i = 1; i <= digits; ++i)
        pow_mod[static_cast<size_t>(i)] =
            (pow_mod[static_cast<size_t>(i - 1)] * 10) % pu;

    std::vector<uint64_t> strides(10, 0);
    uint64_t s = 1;
    for (int d = 1; d < 10; ++d) {
        strides[static_cast<size_t>(d)] = s;
        u128 next = static_cast<u128>(s) * (comp.counts[d] + 1);
        if (next >> 62) throw std::length_error("budget-exceeded");
        s = static_cast<uint64_t>(next);
    }

    u128 pow_full_mid = 1, pow_full_lo = 1;
    if (mode == CountMode::Enumerate) {
        auto f1 = checked_pow(10, static_cast<unsigned>(split.n_mi + split.n_lo));
        auto f2 = checked_pow(10, static_cast<unsigned>(split.n_lo));
        if (!f1 || !f2 ||
            !checked_pow(10, static_cast<unsigned>(digits)))
            throw std::overflow_error("product-overflow");
        pow_full_mid = *f1;
        pow_full_lo = *f2;
    }

    uint64_t local_nodes = 0;
    auto bump = [&] {
        if (++local_nodes > budget.max_nodes)
            throw std::length_error("budget-exceeded");
    };

    Groups10 table;
    std::vector<uint32_t> counts(10, 0);
    uint64_t idx = 0;
    uint64_t shift_mod = pow_mod[static_cast<size_t>(split.n_mi + split.n_lo)];

    auto build = [&](auto&& self, int len, uint64_t r, u128 value) -> void {
        if (len == split.n_hi) {
            uint64_t res = static_cast<uint64_t>(
                (static_cast<u128>(r) * shift_mod) % pu);
            Groups10::Group& g = table.by_counts[idx];
            if (mode == CountMode::Enumerate)
                g.values[res].push_back(value);
            else
                g.mult[res] += 1;
            return;
        }
        for (int d = 1; d < 10; ++d) {
            if (counts[static_cast<size_t>(d)] >= comp.counts[d]) continue;
            bump();
            counts[static_cast<size_t>(d)] += 1;
            idx += strides[static_cast<size_t>(d)];
            self(self, len + 1, (r * 10 + static_cast<unsigned>(d)) % pu,
                 mode == CountMode::Enumerate ? value * 10 + static_cast<unsigned>(d)
                                              : 0);
            counts[static_cast<size_t>(d)] -= 1;
            idx -= strides[static_cast<size_t>(d)];
        }
    };
    build(build, 0, 0, 0);

    uint64_t mask = (uint64_t{1} << split.u) - 1;
    uint64_t p10_lo_masked = pow10_u64(split.n_lo) & mask;
    uint64_t lo_lower = pow10_u64(split.n_lo - 1);
    u128 total = 0;

    std::fill(counts.begin(), counts.end(), 0);
    auto sweep = [&](auto&& self, int len, uint64_t r, uint64_t low_bits,
                     u128 value) -> void {
        if (len == split.n_mi) {
            uint64_t prod = static_cast<uint64_t>(
                (static_cast<u128>(p10_lo_masked) * (low_bits & mask)) & mask);
            uint64_t lo = (~prod + 1) & mask;
            if (lo < lo_lower || lo >= lo_lower * 10) return;
            // match the remaining counts against the forced lo digits
            uint64_t need_idx = 0;
            std::array<uint32_t, 10> rem{};
            for (int d = 1; d < 10; ++d)
                rem[static_cast<size_t>(d)] =
                    comp.counts[d] - counts[static_cast<size_t>(d)];
            uint64_t rest = lo;
            for (int i = 0; i < split.n_lo; ++i) {
                unsigned dd = static_cast<unsigned>(rest % 10);
                if (dd == 0 || rem[dd] == 0) return;
                rem[dd] -= 1;
                rest /= 10;
            }
            for (int d = 1; d < 10; ++d)
                need_idx += rem[static_cast<size_t>(d)] *
                            strides[static_cast<size_t>(d)];
            auto git = table.by_counts.find(need_idx);
            if (git == table.by_counts.end()) return;
            uint64_t res = pu - (static_cast<uint64_t>(
                                     (static_cast<u128>(pow_mod[static_cast<size_t>(
                                          split.n_lo)]) *
                                          r +
                                      lo) %
                                     pu));
            if (res == pu) res = 0;
            if (mode == CountMode::Enumerate) {
                auto it = git->second.values.find(res);
                if (it == git->second.values.end()) return;
                for (u128 hi : it->second) {
                    ++total;
                    witnesses->push_back(hi * pow_full_mid +
                                         value * pow_full_lo + lo);
                }
            } else {
                auto it = git->second.mult.find(res);
                if (it != git->second.mult.end()) total += it->second;
            }
            return;
        }
        for (int d = 1; d < 10; ++d) {
            if (counts[static_cast<size_t>(d)] >= comp.counts[d]) continue;
            bump();
            counts[static_cast<size_t>(d)] += 1;
            self(self, len + 1, (r * 10 + static_cast<unsigned>(d)) % pu,
                 low_bits * 10 + static_cast<unsigned>(d),
                 mode == CountMode::Enumerate ? value * 10 + static_cast<unsigned>(d)
                                              : 0);
            counts[static_cast<size_t>(d)] -= 1;
        }
    };
    sweep(sweep, 0, 0, 0, 0);

    if (nodes) *nodes += local_nodes;
    return total;
}

CountResult zuckerman_count_10(int digits, const ZcOptions& opt) {
    auto t0 = Clock::now();
    Base base(10);
    double alpha = opt.alpha < 0 ? kAlpha10 : opt.alpha;
    if (!(alpha > 0 && alpha < 1))
        throw std::invalid_argument("alpha must be in (0,1)");

    std::vector<CompositionJob> jobs = iterate_compositions(base, digits, alpha);
    struct JobOut {
        u128 count = 0;
        uint64_t nodes = 0;
        std::vector<u128> witnesses;
    };
    std::vector<JobOut> outs(jobs.size());
    parallel_for(jobs.size(), opt.threads, [&](size_t i) {
        const CompositionJob& job = jobs[i];
        JobOut& out = outs[i];
        std::vector<u128>* wit =
            opt.mode == CountMode::Enumerate ? &out.witnesses : nullptr;
        if (job.large)
            out.count = zc_large_product(base, digits, job.comp, opt.mode, wit,
                                         &out.nodes, opt.budget);
        else
            out.count = small_product_10(digits, job.comp, opt.mode, wit,
                                         &out.nodes, opt.budget);
    });

    CountResult result;
    for (size_t i = 0; i < jobs.size(); ++i) {
        result.count += outs[i].count;
        result.stats.nodes += outs[i].nodes;
        result.witnesses.insert(result.witnesses.end(),
                                outs[i].witnesses.begin(),
                                outs[i].witnesses.end());
        if (opt.job_sink) opt.job_sink(JobReport{&jobs[i], outs[i].count});
    }
    std::sort(result.witnesses.begin(), result.witnesses.end());
    result.stats.wall_ms =
        std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return result;
}

} // namespace zuck
