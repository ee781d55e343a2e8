#include "zuck/baseline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <unordered_map>

#include "zuck/parallel.hpp"

namespace zuck {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

[[noreturn]] void throw_product_overflow(const DigitComposition& comp) {
    std::string what = "product-overflow at composition";
    for (int d = 1; d < comp.base; ++d)
        if (comp.counts[d])
            what += " " + std::to_string(d) + ":" +
                    std::to_string(comp.counts[d]);
    throw std::overflow_error(what);
}

void compose_rec(Base base, int digit, uint32_t remaining, bool admissible_only,
                 DigitComposition& comp, u128 product,
                 const std::function<void(const DigitComposition&, u128)>& fn) {
    int b = base.value;
    if (digit == b - 1) {
        comp.counts[digit] = remaining;
        u128 p = product;
        for (uint32_t i = 0; i < remaining; ++i)
            if (mul_overflow(p, static_cast<u128>(digit), p))
                throw_product_overflow(comp);
        if (!admissible_only || composition_admissible(base, comp))
            fn(comp, p);
        comp.counts[digit] = 0;
        return;
    }
    u128 p = product;
    for (uint32_t c = 0; c <= remaining; ++c) {
        comp.counts[digit] = c;
        if (c > 0 && digit > 1 &&
            mul_overflow(p, static_cast<u128>(digit), p))
            throw_product_overflow(comp);
        compose_rec(base, digit + 1, remaining - c, admissible_only, comp, p, fn);
    }
    comp.counts[digit] = 0;
}

u128 pow_or_throw(Base base, int exp, const char* what) {
    auto p = checked_pow(static_cast<u128>(base.value), static_cast<unsigned>(exp));
    if (!p) throw std::overflow_error(what);
    return *p;
}

} // namespace

void for_each_composition(
    Base base, int digits, bool admissible_only,
    const std::function<void(const DigitComposition&, u128)>& fn) {
    if (digits < 1) throw std::invalid_argument("digits must be >= 1");
    DigitComposition comp(base);
    compose_rec(base, 1, static_cast<uint32_t>(digits), admissible_only, comp,
                1, fn);
}

std::vector<u128> achievable_products(Base base, int digits) {
    std::vector<u128> products;
    for_each_composition(base, digits, /*admissible_only=*/true,
                         [&](const DigitComposition&, u128 p) {
                             products.push_back(p);
                         });
    std::sort(products.begin(), products.end());
    products.erase(std::unique(products.begin(), products.end()),
                   products.end());
    return products;
}

u128 product_threshold(Base base, double alpha, int digits) {
    long double bits = alpha * digits * std::log2(static_cast<long double>(base.value));
    if (bits >= 127.9L) return ~u128{0};
    long double v = std::floor(std::exp2(bits));
    u128 out = 0;
    // assemble from the top to keep all integer bits of the long double
    for (int i = 127; i >= 0; --i) {
        long double bit = std::exp2(static_cast<long double>(i));
        if (v >= bit) { out |= u128{1} << i; v -= bit; }
    }
    return out;
}

CountResult count_brute(Base base, int digits, CountMode mode,
                        const Budget& budget) {
    auto t0 = Clock::now();
    int b = base.value;
    long double leaves = std::pow(static_cast<long double>(b - 1), digits);
    if (leaves > static_cast<long double>(budget.max_nodes))
        throw std::length_error("too-large-for-brute");
    pow_or_throw(base, digits, "too-large-for-brute");

    CountResult result;
    // value and product evolve together down the digit string
    std::vector<uint8_t> stack(static_cast<size_t>(digits));
    struct Frame { u128 value, product; };
    std::vector<Frame> frames(static_cast<size_t>(digits) + 1);
    frames[0] = {0, 1};
    int depth = 0;
    stack[0] = 0;
    while (depth >= 0) {
        uint8_t d = ++stack[static_cast<size_t>(depth)];
        if (d >= b) { --depth; continue; }
        ++result.stats.nodes;
        Frame f = frames[static_cast<size_t>(depth)];
        f.value = f.value * static_cast<unsigned>(b) + d;
        f.product *= d;
        if (depth + 1 == digits) {
            if (f.value % f.product == 0) {
                ++result.count;
                if (mode == CountMode::Enumerate)
                    result.witnesses.push_back(f.value);
            }
        } else {
            frames[static_cast<size_t>(depth) + 1] = f;
            ++depth;
            stack[static_cast<size_t>(depth)] = 0;
        }
    }
    result.stats.wall_ms = elapsed_ms(t0);
    return result;
}

namespace {

struct PhaseOneOut {
    u128 count = 0;
    uint64_t nodes = 0;
    std::vector<u128> witnesses;
};

// For every achievable product above the threshold, walk its multiples in
// [b^(N-1), b^N) and keep the ones whose digit product matches exactly.
PhaseOneOut multiples_phase(Base base, int digits, u128 threshold,
                            CountMode mode, unsigned threads,
                            const Budget& budget) {
    int b = base.value;
    u128 hi = pow_or_throw(base, digits, "too-large-for-multiples");
    u128 lo = hi / static_cast<unsigned>(b);

    std::vector<u128> products;
    for (u128 p : achievable_products(base, digits))
        if (p > threshold) products.push_back(p);

    long double walk_estimate = 0;
    for (u128 p : products)
        walk_estimate += static_cast<long double>(hi - lo) /
                         static_cast<long double>(p) + 1;
    if (walk_estimate > static_cast<long double>(budget.max_nodes))
        throw std::length_error("budget-exceeded");

    std::vector<PhaseOneOut> per_job(products.size());
    parallel_for(products.size(), threads, [&](size_t i) {
        u128 p = products[i];
        PhaseOneOut& out = per_job[i];
        u128 first = ((lo + p - 1) / p) * p;
        for (u128 n = first; n < hi; n += p) {
            ++out.nodes;
            u128 m = n, prod = 1;
            bool ok = true;
            while (m > 0) {
                unsigned d = static_cast<unsigned>(m % static_cast<unsigned>(b));
                if (d == 0) { ok = false; break; }
                prod *= d;
                if (prod > p) { ok = false; break; }
                m /= static_cast<unsigned>(b);
            }
            if (ok && prod == p) {
                ++out.count;
                if (mode == CountMode::Enumerate) out.witnesses.push_back(n);
            }
        }
    });

    PhaseOneOut total;
    for (const PhaseOneOut& out : per_job) {
        total.count += out.count;
        total.nodes += out.nodes;
        total.witnesses.insert(total.witnesses.end(), out.witnesses.begin(),
                               out.witnesses.end());
    }
    return total;
}

} // namespace

CountResult count_multiples(Base base, int digits, double alpha,
                            CountMode mode, unsigned threads,
                            const Budget& budget) {
    if (!(alpha > 0 && alpha < 1))
        throw std::invalid_argument("alpha must be in (0,1)");
    auto t0 = Clock::now();
    int b = base.value;
    u128 threshold = product_threshold(base, alpha, digits);
    CountResult result;

    PhaseOneOut large = multiples_phase(base, digits, threshold, mode, threads,
                                        budget);
    result.count += large.count;
    result.stats.nodes += large.nodes;
    result.witnesses = std::move(large.witnesses);

    // Small products: search digit strings with running product <= threshold,
    // testing divisibility at the leaves. Split jobs on the leading digit.
    struct SmallOut {
        u128 count = 0;
        uint64_t nodes = 0;
        std::vector<u128> witnesses;
    };
    std::vector<SmallOut> per_job(static_cast<size_t>(b - 1));
    parallel_for(per_job.size(), threads, [&](size_t job) {
        SmallOut& out = per_job[job];
        unsigned lead = static_cast<unsigned>(job) + 1;
        if (static_cast<u128>(lead) > threshold) return;
        struct Node { u128 value, product; int depth; unsigned next; };
        std::vector<Node> stack;
        stack.push_back({lead, lead, 1, 1});
        ++out.nodes;
        while (!stack.empty()) {
            Node& top = stack.back();
            if (top.depth == digits) {
                if (top.value % top.product == 0) {
                    ++out.count;
                    if (mode == CountMode::Enumerate)
                        out.witnesses.push_back(top.value);
                }
                stack.pop_back();
                continue;
            }
            unsigned d = top.next++;
            if (d >= static_cast<unsigned>(b)) {
                stack.pop_back();
                continue;
            }
            u128 prod = top.product * d;
            if (prod > threshold) continue;
            ++out.nodes;
            stack.push_back({top.value * static_cast<unsigned>(b) + d, prod,
                             top.depth + 1, 1});
        }
        if (out.nodes > budget.max_nodes)
            throw std::length_error("budget-exceeded");
    });
    for (SmallOut& out : per_job) {
        result.count += out.count;
        result.stats.nodes += out.nodes;
        result.witnesses.insert(result.witnesses.end(), out.witnesses.begin(),
                                out.witnesses.end());
    }
    std::sort(result.witnesses.begin(), result.witnesses.end());
    result.stats.wall_ms = elapsed_ms(t0);
    return result;
}

namespace {

std::vector<u128> divisors_of(u128 p, int base) {
    std::vector<u128> divs{1};
    for (int q = 2; q < base; ++q) {
        bool prime = true;
        for (int f = 2; f * f <= q; ++f)
            if (q % f == 0) { prime = false; break; }
        if (!prime) continue;
        int e = 0;
        while (p % static_cast<unsigned>(q) == 0) {
            p /= static_cast<unsigned>(q);
            ++e;
        }
        if (e == 0) continue;
        size_t n = divs.size();
        u128 pw = 1;
        for (int i = 1; i <= e; ++i) {
            pw *= static_cast<unsigned>(q);
            for (size_t j = 0; j < n; ++j) divs.push_back(divs[j] * pw);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

} // namespace

CountResult count_dp(Base base, int digits, double alpha, unsigned threads,
                     const Budget& budget) {
    if (!(alpha > 0 && alpha < 1))
        throw std::invalid_argument("alpha must be in (0,1)");
    auto t0 = Clock::now();
    int b = base.value;
    u128 threshold = product_threshold(base, alpha, digits);
    CountResult result;

    PhaseOneOut large = multiples_phase(base, digits, threshold,
                                        CountMode::Count, threads, budget);
    result.count += large.count;
    result.stats.nodes += large.nodes;

    std::vector<u128> products;
    for (u128 p : achievable_products(base, digits))
        if (p <= threshold) products.push_back(p);

    struct DpOut { u128 count = 0; uint64_t nodes = 0; };
    std::vector<DpOut> per_job(products.size());
    parallel_for(products.size(), threads, [&](size_t i) {
        u128 p = products[i];
        DpOut& out = per_job[i];
        if (p >> 56) throw std::length_error("dp-state-budget-exceeded");
        uint64_t pu = static_cast<uint64_t>(p);

        std::vector<u128> divs = divisors_of(p, b);
        if (static_cast<u128>(pu) * divs.size() >= (u128{1} << 63))
            throw std::length_error("dp-state-budget-exceeded");
        std::unordered_map<uint64_t, uint32_t> div_index;
        for (size_t j = 0; j < divs.size(); ++j)
            div_index[static_cast<uint64_t>(divs[j])] = static_cast<uint32_t>(j);
        // transition: divisor index x digit -> divisor index (or -1)
        std::vector<int32_t> step(divs.size() * static_cast<size_t>(b), -1);
        for (size_t j = 0; j < divs.size(); ++j)
            for (int d = 1; d < b; ++d) {
                u128 g = divs[j] * static_cast<unsigned>(d);
                if (g <= p && p % g == 0)
                    step[j * static_cast<size_t>(b) + static_cast<size_t>(d)] =
                        static_cast<int32_t>(div_index[static_cast<uint64_t>(g)]);
            }

        // state key: residue * |divs| + divisor index
        std::unordered_map<uint64_t, u128> layer;
        layer.reserve(64);
        layer[0 * divs.size() + 0] = 1;
        for (int pos = 0; pos < digits; ++pos) {
            std::unordered_map<uint64_t, u128> next;
            next.reserve(layer.size() * 2);
            for (const auto& [key, ways] : layer) {
                uint64_t r = key / divs.size();
                size_t g = key % divs.size();
                for (int d = 1; d < b; ++d) {
                    int32_t g2 = step[g * static_cast<size_t>(b) +
                                      static_cast<size_t>(d)];
                    if (g2 < 0) continue;
                    ++out.nodes;
                    uint64_t r2 = (r * static_cast<unsigned>(b) +
                                   static_cast<unsigned>(d)) % pu;
                    next[r2 * divs.size() + static_cast<size_t>(g2)] += ways;
                }
            }
            layer = std::move(next);
            if (layer.size() > budget.max_dp_states)
                throw std::length_error("dp-state-budget-exceeded");
        }
        uint64_t target = 0 * divs.size() + div_index[pu];
        auto it = layer.find(target);
        if (it != layer.end()) out.count = it->second;
    });
    for (const DpOut& out : per_job) {
        result.count += out.count;
        result.stats.nodes += out.nodes;
    }
    result.stats.wall_ms = elapsed_ms(t0);
    return result;
}

CountResult count_mitm(Base base, int digits, CountMode mode, unsigned threads,
                       const Budget& budget) {
    auto t0 = Clock::now();
    int b = base.value;
    int n_lo = digits / 2;
    int n_hi = digits - n_lo;
    u128 shift = pow_or_throw(base, n_lo, "too-large-for-mitm");

    if (mode == CountMode::Enumerate)
        pow_or_throw(base, digits, "too-large-for-mitm");

    // group half strings by their digit product
    auto enumerate_half = [&](int len) {
        std::vector<std::pair<u128, std::vector<u128>>> groups;
        std::unordered_map<u128, size_t, U128Hash> index;
        if (len == 0) {
            groups.push_back({1, {0}});
            return groups;
        }
        auto rec = [&](auto&& self, int depth, u128 v, u128 p) -> void {
            if (depth == len) {
                auto [it, fresh] = index.try_emplace(p, groups.size());
                if (fresh) groups.push_back({p, {}});
                groups[it->second].second.push_back(v);
                return;
            }
            for (unsigned d = 1; d < static_cast<unsigned>(b); ++d)
                self(self, depth + 1, v * static_cast<unsigned>(b) + d, p * d);
        };
        rec(rec, 0, 0, 1);
        return groups;
    };

    long double half_cost = std::pow(static_cast<long double>(b - 1), n_hi);
    if (half_cost * 4 > static_cast<long double>(budget.max_nodes))
        throw std::length_error("budget-exceeded");

    auto groups_hi = enumerate_half(n_hi);
    auto groups_lo = enumerate_half(n_lo);

    struct PairOut {
        u128 count = 0;
        uint64_t nodes = 0;
        std::vector<u128> witnesses;
    };
    size_t pairs = groups_hi.size() * groups_lo.size();
    std::vector<PairOut> per_job(pairs);
    parallel_for(pairs, threads, [&](size_t job) {
        const auto& [p_hi, his] = groups_hi[job / groups_lo.size()];
        const auto& [p_lo, los] = groups_lo[job % groups_lo.size()];
        PairOut& out = per_job[job];
        u128 p;
        if (mul_overflow(p_hi, p_lo, p))
            throw std::overflow_error("product-overflow");

        if (mode == CountMode::Count) {
            std::unordered_map<u128, uint64_t, U128Hash> table;
            table.reserve(his.size() * 2);
            for (u128 hi : his) {
                ++out.nodes;
                u128 r = (p - mulmod(hi % p, shift % p, p)) % p;
                ++table[r];
            }
            for (u128 lo : los) {
                ++out.nodes;
                auto it = table.find(lo % p);
                if (it != table.end()) out.count += it->second;
            }
        } else {
            std::unordered_map<u128, std::vector<u128>, U128Hash> table;
            for (u128 hi : his) {
                ++out.nodes;
                u128 r = (p - mulmod(hi % p, shift % p, p)) % p;
                table[r].push_back(hi);
            }
            for (u128 lo : los) {
                ++out.nodes;
                auto it = table.find(lo % p);
                if (it == table.end()) continue;
                for (u128 hi : it->second) {
                    ++out.count;
                    out.witnesses.push_back(hi * shift + lo);
                }
            }
        }
    });

    CountResult result;
    for (PairOut& out : per_job) {
        result.count += out.count;
        result.stats.nodes += out.nodes;
        result.witnesses.insert(result.witnesses.end(), out.witnesses.begin(),
                                out.witnesses.end());
    }
    std::sort(result.witnesses.begin(), result.witnesses.end());
    result.stats.wall_ms = elapsed_ms(t0);
    return result;
}

} // namespace zuck
