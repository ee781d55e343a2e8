#pragma once

#include <functional>
#include <optional>

#include "zuck/baseline.hpp"

namespace zuck {

// One unit of counting work: a digit composition, its exact product, the
// log-multinomial of its arrangements, and the product-size branch.
struct CompositionJob {
    DigitComposition comp;
    u128 product = 0;
    double mlog = 0;            // log(N! / prod N_d!)
    bool large = false;         // product > b^(alpha*N)
};

struct JobReport {
    const CompositionJob* job;
    u128 count;
};

struct ZcOptions {
    CountMode mode = CountMode::Count;
    double alpha = -1;  // < 0 -> default_alpha(base)
    double theta = 0.5; // separating threshold is exp(theta * mlog)
    unsigned threads = 1;
    Budget budget;
    std::function<void(const JobReport&)> job_sink; // per-job debug stream
};

// All compositions with sum N, no zero digit, product not divisible by the
// base, each paired with its branch at the given alpha.
std::vector<CompositionJob> iterate_compositions(Base base, int digits,
                                                 double alpha);

// Emits every separating prefix of the composition: the first prefix along
// each arrangement whose own arrangement count reaches the threshold. The
// callback receives the prefix digits, its length and the leftover counts.
void separating_prefixes(
    const DigitComposition& comp, double threshold,
    const std::function<void(const std::vector<uint8_t>&)>& fn);

// Count of N-digit multiples of the job's product with exactly the job's
// composition, for products at least b^floor(log_b P): every prefix forces
// the trailing digits.
u128 zc_large_product(Base base, int digits, const DigitComposition& comp,
                      CountMode mode = CountMode::Count,
                      std::vector<u128>* witnesses = nullptr,
                      uint64_t* nodes = nullptr,
                      const Budget& budget = {});

// Same count via the separating-prefix meet-in-the-middle.
u128 zc_small_product(Base base, int digits, const DigitComposition& comp,
                      double theta = 0.5, CountMode mode = CountMode::Count,
                      std::vector<u128>* witnesses = nullptr,
                      uint64_t* nodes = nullptr,
                      const Budget& budget = {});

CountResult zuckerman_count(Base base, int digits, const ZcOptions& opt = {});

} // namespace zuck
