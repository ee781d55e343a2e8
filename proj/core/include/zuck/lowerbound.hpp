#pragma once

#include <optional>
#include <vector>

#include "zuck/bigint.hpp"

namespace zuck {

inline constexpr uint32_t kNuInfinite = UINT32_MAX;

// Exponent of 2 in the base-10 digit product; 0 for n = 0 (empty product),
// kNuInfinite when a zero digit collapses the product to 0.
uint32_t nu(const BigInt& n);

// Residue table of the min-max search: for every class x mod 2^ell, the
// least nu over ell-digit strings from {1,2,4,8} congruent to x, with a
// reconstructible witness string per class.
struct DeltaTable {
    int ell = 0;
    std::vector<uint8_t> min_nu; // 2^ell entries, 255 = empty class

    // per-class witness string, least significant position first, encoded
    // 2 bits per position (0..3 -> digit 1,2,4,8); empty when the method ran
    // without witness tracking
    std::vector<uint64_t> witness_codes;
    // dp keeps packed per-layer digit choices instead of explicit codes
    std::vector<std::vector<uint8_t>> choices;

    bool complete() const;
    bool has_witnesses() const {
        return !witness_codes.empty() || !choices.empty();
    }
    // digits most-significant first, all in {1,2,4,8}
    std::vector<uint8_t> witness_digits(uint64_t residue) const;
};

enum class DeltaMethod { dp, dfs, brute };

struct DeltaResult {
    // delta = max over classes of min nu, over ell; exact rational
    uint32_t delta_num = 0;
    uint32_t delta_den = 1;
    bool infinite = false; // some residue class has no string at all
    DeltaTable table;
    uint64_t nodes = 0;
};

// brute: full 4^ell scan (ell <= 12); dfs: iterative deepening on the nu
// budget; dp: layered relaxation over all residues, one digit position at a
// time. All agree exactly on min_nu.
DeltaResult compute_delta(int ell, DeltaMethod method,
                          bool with_witnesses = true);

struct WitnessChain {
    int ell = 0;
    std::vector<BigInt> entries; // entries[k] has k*ell digits, all powers of 2
};

// entries[k+1] = 10^(k*ell) * y_k + entries[k] with y_k read from the table
// at the class forced by the induction; every entry is re-verified.
WitnessChain build_witness_chain(const DeltaTable& table,
                                 const DeltaResult& delta, int length);

// N-digit base-10 Zuckerman numbers with digits in {1,2,4,8}, built from the
// chain plus a budget-limited high block. Requires N >= 2*ell.
std::vector<BigInt> generate_witness_zuckermans(int digits,
                                                const DeltaTable& table,
                                                const DeltaResult& delta,
                                                size_t limit);

struct LowerBoundCertificate {
    double h = 0;               // constrained entropy maximum at delta = 1/2
    double exponent = 0;        // (1 - alpha) * h / log 10
    double exponent_weaker = 0; // same with the historical delta = 3/4
    bool h_above_0940 = false;
    bool exponent_above_0204 = false;
    bool monotone = false; // weaker delta gives a smaller exponent
};

LowerBoundCertificate certify_lower_bound();

} // namespace zuck
