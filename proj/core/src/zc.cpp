#include "zuck/zc.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <unordered_map>

#include "residue.hpp"
#include "zuck/exponents.hpp"
#include "zuck/parallel.hpp"

namespace zuck {

namespace {

using Clock = std::chrono::steady_clock;
using detail::kMod64Limit;
using detail::Mod128;
using detail::Mod64;

// Meet-in-the-middle over one composition: separating prefixes fill a table
// keyed by (suffix counts, residue); the suffix side then enumerates the
// exact arrangements of each group's multiset and fires lookups at the
// leaves. The prefix side tracks hi * b^(N-len) mod P, so appending a digit
// is one scaled add and an emission is a bare negation.
template <class Mod>
class SmallRun {
    using Res = typename Mod::Res;

public:
    SmallRun(Base base, int digits, const DigitComposition& comp, Mod mod,
             double theta, CountMode mode, const Budget& budget)
        : b_(base.value), n_(digits), comp_(comp), mod_(mod), mode_(mode),
          max_nodes_(budget.max_nodes) {
        t_log_ = theta * multinomial_log(comp);
        counts_.fill(0);
        strides_.fill(0);
        uint64_t s = 1;
        total_idx_ = 0;
        for (int d = 1; d < b_; ++d) {
            strides_[static_cast<size_t>(d)] = s;
            total_idx_ += static_cast<uint64_t>(comp.counts[d]) * s;
            u128 next = static_cast<u128>(s) * (comp.counts[d] + 1);
            if (next >> 62) throw std::length_error("budget-exceeded");
            s = static_cast<uint64_t>(next);
        }
        log_tab_.assign(static_cast<size_t>(n_) + 2, 0.0);
        for (int i = 1; i <= n_ + 1; ++i)
            log_tab_[static_cast<size_t>(i)] = std::log(static_cast<double>(i));
        pow_mod_.assign(static_cast<size_t>(n_) + 1, mod_.one());
        for (int i = 1; i <= n_; ++i)
            pow_mod_[static_cast<size_t>(i)] =
                mod_.append(pow_mod_[static_cast<size_t>(i - 1)],
                            static_cast<unsigned>(b_), 0);
        if (mode_ == CountMode::Enumerate) {
            pow_full_.assign(static_cast<size_t>(n_) + 1, 1);
            for (int i = 1; i <= n_; ++i) {
                if (mul_overflow(pow_full_[static_cast<size_t>(i - 1)],
                                 static_cast<u128>(b_),
                                 pow_full_[static_cast<size_t>(i)]))
                    throw std::overflow_error("product-overflow");
            }
        }
    }

    u128 run(std::vector<u128>* witnesses, uint64_t* nodes) {
        idx_ = 0;
        build(0, 0.0, Res{0}, 0);
        finalize_groups();

        witnesses_ = witnesses;
        for (Group& g : groups_) {
            counts_ = g.lo_counts;
            sweep(g, 0, Res{0}, 0);
        }
        if (nodes) *nodes += nodes_;
        return total_;
    }

private:
    struct Group {
        int lo_len = 0;
        std::array<uint32_t, 16> lo_counts{};
        std::vector<Res> raw;                        // residues as emitted
        detail::FlatCounter<Res> table;              // built after the walk
        std::vector<std::pair<Res, u128>> hi_values; // enumerate mode
    };

    void bump_nodes() {
        if (++nodes_ > max_nodes_)
            throw std::length_error("budget-exceeded");
    }

    // s = hi * b^(N - len) mod P
    void build(int len, double log_pi, Res s, u128 value) {
        Res step = pow_mod_[static_cast<size_t>(n_ - len - 1)];
        for (int d = 1; d < b_; ++d) {
            uint32_t used = counts_[static_cast<size_t>(d)];
            if (used >= comp_.counts[d]) continue;
            bump_nodes();
            double lp = log_pi + log_tab_[static_cast<size_t>(len) + 1] -
                        log_tab_[used + 1];
            Res s2 = mod_.add_scaled(s, static_cast<unsigned>(d), step);
            u128 v2 = mode_ == CountMode::Enumerate
                          ? value * static_cast<unsigned>(b_) + static_cast<unsigned>(d)
                          : 0;
            counts_[static_cast<size_t>(d)] = used + 1;
            idx_ += strides_[static_cast<size_t>(d)];
            if (lp >= t_log_ || len + 1 == n_)
                emit(len + 1, s2, v2);
            else
                build(len + 1, lp, s2, v2);
            counts_[static_cast<size_t>(d)] = used;
            idx_ -= strides_[static_cast<size_t>(d)];
        }
    }

    uint32_t group_id(int len) {
        uint64_t suffix_idx = total_idx_ - idx_;
        if (suffix_idx == last_idx_) return last_gid_;
        auto [it, fresh] = group_ids_.try_emplace(
            suffix_idx, static_cast<uint32_t>(groups_.size()));
        if (fresh) {
            Group g;
            g.lo_len = n_ - len;
            for (int d = 1; d < b_; ++d)
                g.lo_counts[static_cast<size_t>(d)] =
                    comp_.counts[d] - counts_[static_cast<size_t>(d)];
            groups_.push_back(std::move(g));
        }
        last_idx_ = suffix_idx;
        last_gid_ = it->second;
        return last_gid_;
    }

    void emit(int len, Res s, u128 value) {
        Group& g = groups_[group_id(len)];
        Res res = mod_.neg(s);
        if (mode_ == CountMode::Enumerate)
            g.hi_values.push_back({res, value});
        else
            g.raw.push_back(res);
    }

    void finalize_groups() {
        for (Group& g : groups_) {
            if (mode_ == CountMode::Enumerate) {
                std::sort(g.hi_values.begin(), g.hi_values.end(),
                          [](const auto& a, const auto& b) {
                              return a.first < b.first;
                          });
                continue;
            }
            g.table.reserve(g.raw.size());
            for (Res r : g.raw) g.table.add(r);
            g.raw.clear();
            g.raw.shrink_to_fit();
        }
    }

    void fire(const Group& g, Res r, u128 value) {
        if (mode_ == CountMode::Enumerate) {
            auto lo = std::lower_bound(
                g.hi_values.begin(), g.hi_values.end(), r,
                [](const auto& a, Res key) { return a.first < key; });
            for (; lo != g.hi_values.end() && lo->first == r; ++lo) {
                ++total_;
                witnesses_->push_back(
                    lo->second * pow_full_[static_cast<size_t>(g.lo_len)] +
                    value);
            }
        } else {
            total_ += g.table.lookup(r);
        }
    }

    // exact arrangements of the group's suffix multiset; counts_ holds the
    // digits still to place
    void sweep(const Group& g, int len, Res r, u128 value) {
        if (len == g.lo_len) {
            fire(g, r, value);
            return;
        }
        for (int d = 1; d < b_; ++d) {
            uint32_t left = counts_[static_cast<size_t>(d)];
            if (left == 0) continue;
            bump_nodes();
            counts_[static_cast<size_t>(d)] = left - 1;
            sweep(g, len + 1,
                  mod_.append(r, static_cast<unsigned>(b_),
                              static_cast<unsigned>(d)),
                  mode_ == CountMode::Enumerate
                      ? value * static_cast<unsigned>(b_) + static_cast<unsigned>(d)
                      : 0);
            counts_[static_cast<size_t>(d)] = left;
        }
    }

    int b_, n_;
    const DigitComposition& comp_;
    Mod mod_;
    CountMode mode_;
    uint64_t max_nodes_;
    double t_log_;
    std::array<uint64_t, 16> strides_;
    uint64_t total_idx_ = 0, idx_ = 0, nodes_ = 0;
    std::vector<double> log_tab_;
    std::vector<Res> pow_mod_;
    std::vector<u128> pow_full_;
    std::array<uint32_t, 16> counts_{};
    std::vector<Group> groups_;
    std::unordered_map<uint64_t, uint32_t> group_ids_;
    uint64_t last_idx_ = UINT64_MAX;
    uint32_t last_gid_ = 0;
    std::vector<u128>* witnesses_ = nullptr;
    u128 total_ = 0;
};

// Every prefix of length N - floor(log_b P) forces a unique completion; the
// prefix walk tracks hi * b^(N-len) mod P so the forced value falls out of a
// negation at the leaf.
template <class Mod, class UInt>
u128 large_run(Base base, int digits, const DigitComposition& comp, Mod mod,
               UInt product, CountMode mode, std::vector<u128>* witnesses,
               uint64_t* nodes, const Budget& budget) {
    using Res = typename Mod::Res;
    int b = base.value;
    int ell = 0;
    UInt pow_ell = 1;
    while (pow_ell <= product / static_cast<unsigned>(b) && ell < digits) {
        pow_ell *= static_cast<unsigned>(b);
        ++ell;
    }
    if (ell >= digits) return 0; // product at least b^N: no N-digit multiple
    int prefix_len = digits - ell;
    u128 pow_ell_full = static_cast<u128>(pow_ell);
    if (mode == CountMode::Enumerate &&
        !checked_pow(static_cast<u128>(b), static_cast<unsigned>(digits)))
        throw std::overflow_error("product-overflow");

    std::vector<Res> pow_mod(static_cast<size_t>(digits) + 1, mod.one());
    for (int i = 1; i <= digits; ++i)
        pow_mod[static_cast<size_t>(i)] =
            mod.append(pow_mod[static_cast<size_t>(i - 1)],
                       static_cast<unsigned>(b), 0);

    uint64_t local_nodes = 0;
    u128 total = 0;
    std::array<uint32_t, 16> counts{};

    auto rec = [&](auto&& self, int len, Res s, u128 value) -> void {
        if (len == prefix_len) {
            UInt need = static_cast<UInt>(mod.neg(s));
            if (need >= pow_ell) return;
            UInt rest = need;
            std::array<uint32_t, 16> rem{};
            for (int d = 1; d < b; ++d)
                rem[static_cast<size_t>(d)] =
                    comp.counts[d] - counts[static_cast<size_t>(d)];
            for (int i = 0; i < ell; ++i) {
                unsigned dd =
                    static_cast<unsigned>(rest % static_cast<unsigned>(b));
                if (dd == 0 || rem[dd] == 0) return;
                rem[dd] -= 1;
                rest /= static_cast<unsigned>(b);
            }
            ++total;
            if (mode == CountMode::Enumerate)
                witnesses->push_back(value * pow_ell_full +
                                     static_cast<u128>(need));
            return;
        }
        Res step = pow_mod[static_cast<size_t>(digits - len - 1)];
        for (int d = 1; d < b; ++d) {
            if (counts[static_cast<size_t>(d)] >= comp.counts[d]) continue;
            if (++local_nodes > budget.max_nodes)
                throw std::length_error("budget-exceeded");
            counts[static_cast<size_t>(d)] += 1;
            self(self, len + 1,
                 mod.add_scaled(s, static_cast<unsigned>(d), step),
                 mode == CountMode::Enumerate
                     ? value * static_cast<unsigned>(b) + static_cast<unsigned>(d)
                     : 0);
            counts[static_cast<size_t>(d)] -= 1;
        }
    };
    rec(rec, 0, Res{0}, 0);
    if (nodes) *nodes += local_nodes;
    return total;
}

} // namespace

std::vector<CompositionJob> iterate_compositions(Base base, int digits,
                                                 double alpha) {
    if (!(alpha > 0 && alpha < 1))
        throw std::invalid_argument("alpha must be in (0,1)");
    u128 threshold = product_threshold(base, alpha, digits);
    std::vector<CompositionJob> jobs;
    for_each_composition(base, digits, /*admissible_only=*/true,
                         [&](const DigitComposition& comp, u128 product) {
                             CompositionJob job;
                             job.comp = comp;
                             job.product = product;
                             job.mlog = multinomial_log(comp);
                             job.large = product > threshold;
                             jobs.push_back(std::move(job));
                         });
    return jobs;
}

void separating_prefixes(
    const DigitComposition& comp, double threshold,
    const std::function<void(const std::vector<uint8_t>&)>& fn) {
    if (threshold < 1) threshold = 1;
    double t_log = std::log(threshold);
    int b = comp.base;
    int n = static_cast<int>(comp.total());
    std::vector<uint8_t> prefix;
    std::vector<uint32_t> counts(static_cast<size_t>(b), 0);
    auto rec = [&](auto&& self, int len, double log_pi) -> void {
        for (int d = 1; d < b; ++d) {
            if (counts[static_cast<size_t>(d)] >= comp.counts[d]) continue;
            double lp = log_pi + std::log(static_cast<double>(len + 1)) -
                        std::log(static_cast<double>(
                            counts[static_cast<size_t>(d)] + 1));
            counts[static_cast<size_t>(d)] += 1;
            prefix.push_back(static_cast<uint8_t>(d));
            if (lp >= t_log || len + 1 == n)
                fn(prefix);
            else
                self(self, len + 1, lp);
            prefix.pop_back();
            counts[static_cast<size_t>(d)] -= 1;
        }
    };
    rec(rec, 0, 0.0);
}

u128 zc_large_product(Base base, int digits, const DigitComposition& comp,
                      CountMode mode, std::vector<u128>* witnesses,
                      uint64_t* nodes, const Budget& budget) {
    u128 product = DigitProduct::of(comp).value;
    if (mode == CountMode::Enumerate && witnesses == nullptr)
        throw std::invalid_argument("enumerate mode needs a witness sink");
    if (product < kMod64Limit)
        return large_run(base, digits, comp,
                         Mod64(static_cast<uint64_t>(product)),
                         static_cast<uint64_t>(product), mode, witnesses,
                         nodes, budget);
    return large_run(base, digits, comp, Mod128(product), product, mode,
                     witnesses, nodes, budget);
}

u128 zc_small_product(Base base, int digits, const DigitComposition& comp,
                      double theta, CountMode mode, std::vector<u128>* witnesses,
                      uint64_t* nodes, const Budget& budget) {
    if (!(theta > 0 && theta <= 1))
        throw std::invalid_argument("theta must be in (0,1]");
    u128 product = DigitProduct::of(comp).value;
    if (mode == CountMode::Enumerate && witnesses == nullptr)
        throw std::invalid_argument("enumerate mode needs a witness sink");
    if (product < kMod64Limit) {
        SmallRun<Mod64> run(base, digits, comp,
                            Mod64(static_cast<uint64_t>(product)), theta, mode,
                            budget);
        return run.run(witnesses, nodes);
    }
    SmallRun<Mod128> run(base, digits, comp, Mod128(product), theta, mode,
                         budget);
    return run.run(witnesses, nodes);
}

CountResult zuckerman_count(Base base, int digits, const ZcOptions& opt) {
    auto t0 = Clock::now();
    double alpha = opt.alpha < 0 ? default_alpha(base) : opt.alpha;
    if (!(alpha > 0 && alpha < 1))
        throw std::invalid_argument("alpha must be in (0,1)");

    std::vector<CompositionJob> jobs = iterate_compositions(base, digits, alpha);
    // largest jobs first so the worker pool drains evenly
    std::vector<size_t> order(jobs.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return jobs[a].mlog > jobs[b].mlog;
    });

    struct JobOut {
        u128 count = 0;
        uint64_t nodes = 0;
        std::vector<u128> witnesses;
    };
    std::vector<JobOut> outs(jobs.size());
    parallel_for(jobs.size(), opt.threads, [&](size_t k) {
        const CompositionJob& job = jobs[order[k]];
        JobOut& out = outs[order[k]];
        std::vector<u128>* wit =
            opt.mode == CountMode::Enumerate ? &out.witnesses : nullptr;
        if (job.large)
            out.count = zc_large_product(base, digits, job.comp, opt.mode, wit,
                                         &out.nodes, opt.budget);
        else
            out.count = zc_small_product(base, digits, job.comp, opt.theta,
                                         opt.mode, wit, &out.nodes, opt.budget);
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
