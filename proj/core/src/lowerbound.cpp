#include "zuck/lowerbound.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "zuck/digits.hpp"
#include "zuck/exponents.hpp"

namespace zuck {

namespace {

constexpr uint8_t kEmpty = 255;
constexpr uint8_t kDigitOf[4] = {1, 2, 4, 8}; // cost of kDigitOf[j] is j

} // namespace

uint32_t nu(const BigInt& n) {
    if (sgn(n) == 0) return 0; // empty product convention
    uint32_t total = 0;
    for (uint8_t d : to_digits(n, Base(10)).digits) {
        if (d == 0) return kNuInfinite;
        total += valuation(2, d);
    }
    return total;
}

bool DeltaTable::complete() const {
    return std::find(min_nu.begin(), min_nu.end(), kEmpty) == min_nu.end();
}

std::vector<uint8_t> DeltaTable::witness_digits(uint64_t residue) const {
    if (min_nu[residue] == kEmpty)
        throw std::domain_error("empty residue class");
    std::vector<uint8_t> lsb_first(static_cast<size_t>(ell));
    if (!witness_codes.empty()) {
        uint64_t code = witness_codes[residue];
        for (int i = 0; i < ell; ++i)
            lsb_first[static_cast<size_t>(i)] = kDigitOf[(code >> (2 * i)) & 3];
    } else if (!choices.empty()) {
        uint64_t mask = (uint64_t{1} << ell) - 1;
        std::vector<uint64_t> pow(static_cast<size_t>(ell));
        pow[0] = 1;
        for (int i = 1; i < ell; ++i)
            pow[static_cast<size_t>(i)] = (pow[static_cast<size_t>(i - 1)] * 10) & mask;
        uint64_t r = residue;
        for (int i = ell - 1; i >= 0; --i) {
            unsigned j = (choices[static_cast<size_t>(i)][r >> 2] >>
                          (2 * (r & 3))) & 3u;
            lsb_first[static_cast<size_t>(i)] = kDigitOf[j];
            r = (r - kDigitOf[j] * pow[static_cast<size_t>(i)]) & mask;
        }
        if (r != 0) throw std::logic_error("witness reconstruction failed");
    } else {
        throw std::domain_error("table built without witness tracking");
    }
    std::reverse(lsb_first.begin(), lsb_first.end());
    return lsb_first; // most significant first now
}

namespace {

DeltaResult finish(int ell, DeltaTable&& table, uint64_t nodes) {
    DeltaResult result;
    result.table = std::move(table);
    result.nodes = nodes;
    result.delta_den = static_cast<uint32_t>(ell);
    uint8_t worst = 0;
    for (uint8_t c : result.table.min_nu) {
        if (c == kEmpty) { result.infinite = true; break; }
        worst = std::max(worst, c);
    }
    result.delta_num = worst;
    return result;
}

DeltaResult delta_brute(int ell, bool with_witnesses) {
    if (ell > 12)
        throw std::length_error("brute-force limited to ell <= 12");
    size_t classes = size_t{1} << ell;
    uint64_t mask = classes - 1;
    DeltaTable table;
    table.ell = ell;
    table.min_nu.assign(classes, kEmpty);
    if (with_witnesses) table.witness_codes.assign(classes, 0);

    uint64_t nodes = 0;
    std::vector<uint64_t> pow(static_cast<size_t>(ell));
    pow[0] = 1 & mask;
    for (int i = 1; i < ell; ++i) pow[static_cast<size_t>(i)] = (pow[static_cast<size_t>(i - 1)] * 10) & mask;

    std::vector<unsigned> digit_idx(static_cast<size_t>(ell), 0);
    // odometer over digit choices, residue maintained incrementally
    uint64_t residue = 0;
    for (int i = 0; i < ell; ++i) residue = (residue + pow[static_cast<size_t>(i)]) & mask;
    uint32_t cost = 0;
    uint64_t code = 0;
    for (;;) {
        ++nodes;
        if (cost < table.min_nu[residue]) {
            table.min_nu[residue] = static_cast<uint8_t>(cost);
            if (with_witnesses) table.witness_codes[residue] = code;
        }
        int pos = 0;
        while (pos < ell && digit_idx[static_cast<size_t>(pos)] == 3) {
            // roll 8 -> 1: subtract (8-1)*10^pos
            residue = (residue - 7 * pow[static_cast<size_t>(pos)]) & mask;
            cost -= 3;
            code &= ~(uint64_t{3} << (2 * pos));
            digit_idx[static_cast<size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == ell) break;
        unsigned j = ++digit_idx[static_cast<size_t>(pos)];
        residue = (residue + (kDigitOf[j] - kDigitOf[j - 1]) * pow[static_cast<size_t>(pos)]) & mask;
        cost += 1;
        code += uint64_t{1} << (2 * pos);
    }
    return finish(ell, std::move(table), nodes);
}

DeltaResult delta_dfs(int ell, bool with_witnesses) {
    size_t classes = size_t{1} << ell;
    uint64_t mask = classes - 1;
    DeltaTable table;
    table.ell = ell;
    table.min_nu.assign(classes, kEmpty);
    if (with_witnesses) table.witness_codes.assign(classes, 0);

    std::vector<uint64_t> pow(static_cast<size_t>(ell));
    pow[0] = 1 & mask;
    for (int i = 1; i < ell; ++i)
        pow[static_cast<size_t>(i)] = (pow[static_cast<size_t>(i - 1)] * 10) & mask;

    uint64_t nodes = 0;
    size_t filled = 0;
    // deepen on the total cost budget; any class first reached in sweep c
    // cannot be cheaper, since sweep c-1 covered every cheaper string
    for (uint32_t budget = 0;
         filled < classes && budget <= 3u * static_cast<uint32_t>(ell);
         ++budget) {
        auto rec = [&](auto&& self, int pos, uint64_t residue, uint32_t left,
                       uint64_t code) -> void {
            if (pos == ell) {
                uint32_t cost = budget - left;
                if (cost < table.min_nu[residue]) {
                    if (table.min_nu[residue] == kEmpty) ++filled;
                    table.min_nu[residue] = static_cast<uint8_t>(cost);
                    if (with_witnesses) table.witness_codes[residue] = code;
                }
                return;
            }
            for (unsigned j = 0; j < 4 && j <= left; ++j) {
                ++nodes;
                self(self, pos + 1,
                     (residue + kDigitOf[j] * pow[static_cast<size_t>(pos)]) & mask,
                     left - j, code | (uint64_t{j} << (2 * pos)));
            }
        };
        rec(rec, 0, 0, budget, 0);
    }
    return finish(ell, std::move(table), nodes);
}

DeltaResult delta_dp(int ell, bool with_witnesses) {
    size_t classes = size_t{1} << ell;
    uint64_t mask = classes - 1;
    DeltaTable table;
    table.ell = ell;

    std::vector<uint8_t> dist(classes, kEmpty), next(classes, kEmpty);
    dist[0] = 0;
    if (with_witnesses)
        table.choices.assign(static_cast<size_t>(ell),
                             std::vector<uint8_t>(classes / 4 + 1, 0));

    uint64_t nodes = 0;
    uint64_t pow = 1;
    for (int i = 0; i < ell; ++i) {
        std::fill(next.begin(), next.end(), kEmpty);
        uint64_t add[4];
        for (unsigned j = 0; j < 4; ++j) add[j] = (kDigitOf[j] * pow) & mask;
        for (uint64_t r = 0; r < classes; ++r) {
            uint8_t c = dist[r];
            if (c == kEmpty) continue;
            nodes += 4;
            for (unsigned j = 0; j < 4; ++j) {
                uint64_t r2 = (r + add[j]) & mask;
                uint8_t c2 = static_cast<uint8_t>(c + j);
                if (c2 < next[r2]) {
                    next[r2] = c2;
                    if (with_witnesses) {
                        uint8_t& slot = table.choices[static_cast<size_t>(i)][r2 >> 2];
                        unsigned shift = 2 * (r2 & 3);
                        slot = static_cast<uint8_t>(
                            (slot & ~(3u << shift)) | (j << shift));
                    }
                }
            }
        }
        dist.swap(next);
        pow = (pow * 10) & mask;
    }
    table.min_nu = std::move(dist);
    return finish(ell, std::move(table), nodes);
}

} // namespace

DeltaResult compute_delta(int ell, DeltaMethod method, bool with_witnesses) {
    if (ell < 1 || ell > 26)
        throw std::invalid_argument("ell must be in [1, 26]");
    switch (method) {
        case DeltaMethod::brute: return delta_brute(ell, with_witnesses);
        case DeltaMethod::dfs: return delta_dfs(ell, with_witnesses);
        case DeltaMethod::dp: return delta_dp(ell, with_witnesses);
    }
    throw std::logic_error("unknown method");
}

namespace {

// inverse of an odd residue mod 2^ell by Hensel lifting
uint64_t inverse_mod_pow2(uint64_t a, int ell) {
    uint64_t mask = (uint64_t{1} << ell) - 1;
    uint64_t x = 1;
    for (int i = 0; i < 6; ++i) x = (x * (2 - a * x)) & mask;
    return x & mask;
}

} // namespace

WitnessChain build_witness_chain(const DeltaTable& table,
                                 const DeltaResult& delta, int length) {
    if (!table.complete())
        throw std::domain_error("table has empty residue classes");
    if (!table.has_witnesses())
        throw std::domain_error("table built without witness tracking");
    int ell = table.ell;
    uint64_t mask = (uint64_t{1} << ell) - 1;

    WitnessChain chain;
    chain.ell = ell;
    chain.entries.push_back(BigInt(0));
    BigInt pow10_ell;
    mpz_ui_pow_ui(pow10_ell.get_mpz_t(), 10, static_cast<unsigned long>(ell));

    BigInt block_shift = 1; // 10^{k*ell}
    for (int k = 0; k < length; ++k) {
        const BigInt& n_k = chain.entries.back();
        // m_k = n_k / 2^{k*ell}
        BigInt m_k;
        mpz_tdiv_q_2exp(m_k.get_mpz_t(), n_k.get_mpz_t(),
                        static_cast<mp_bitcnt_t>(k) * ell);
        BigInt m_mod;
        mpz_fdiv_r_2exp(m_mod.get_mpz_t(), m_k.get_mpz_t(),
                        static_cast<mp_bitcnt_t>(ell));
        uint64_t m_low = m_mod.get_ui() & mask;

        // class of y_k: -(5^{-k*ell}) * m_k mod 2^ell
        uint64_t inv5k = inverse_mod_pow2(
            static_cast<uint64_t>(powmod(5, static_cast<unsigned>(k) *
                                               static_cast<unsigned>(ell),
                                         u128{1} << ell)),
            ell);
        uint64_t cls = (~((inv5k * m_low) & mask) + 1) & mask;

        std::vector<uint8_t> y_digits = table.witness_digits(cls);
        BigInt y = 0;
        for (uint8_t d : y_digits) y = y * 10 + d;

        BigInt n_next = y * block_shift + n_k;

        // re-verify the induction arithmetically at every step
        if (mpz_divisible_2exp_p(n_next.get_mpz_t(),
                                 static_cast<mp_bitcnt_t>(k + 1) * ell) == 0)
            throw std::logic_error("chain divisibility violated");
        uint32_t cost = nu(n_next);
        if (static_cast<uint64_t>(cost) * delta.delta_den >
            static_cast<uint64_t>(delta.delta_num) * (k + 1) * ell)
            throw std::logic_error("chain nu budget violated");

        chain.entries.push_back(n_next);
        block_shift *= pow10_ell;
    }
    return chain;
}

std::vector<BigInt> generate_witness_zuckermans(int digits,
                                                const DeltaTable& table,
                                                const DeltaResult& delta,
                                                size_t limit) {
    int ell = table.ell;
    if (digits < 2 * ell)
        throw std::invalid_argument("need at least 2*ell digits");
    // alpha = 1/2: the low block spans ceil(N/2) rounded up to whole blocks
    int k = (digits + 2 * ell - 1) / (2 * ell);
    int n_lo = k * ell;
    int n_hi = digits - n_lo;

    WitnessChain chain = build_witness_chain(table, delta, k);
    const BigInt& low = chain.entries.back();
    BigInt shift;
    mpz_ui_pow_ui(shift.get_mpz_t(), 10, static_cast<unsigned long>(n_lo));

    // nu budget for the high block: alpha(1-delta)/(1-alpha) * n_hi with
    // alpha = 1/2, kept exact as a rational in delta
    uint64_t budget_num = static_cast<uint64_t>(delta.delta_den - delta.delta_num) *
                          static_cast<uint64_t>(n_hi);
    uint64_t budget_den = delta.delta_den;

    std::vector<BigInt> out;
    std::vector<uint8_t> digits_buf;
    auto rec = [&](auto&& self, int pos, uint32_t cost, const BigInt& value)
        -> void {
        if (out.size() >= limit) return;
        if (pos == n_hi) {
            BigInt n = value * shift + low;
            if (!is_zuckerman(n, Base(10)))
                throw std::logic_error("construction produced a non-witness");
            out.push_back(n);
            return;
        }
        for (unsigned j = 0; j < 4; ++j) {
            if (static_cast<uint64_t>(cost + j) * budget_den > budget_num)
                break;
            self(self, pos + 1, cost + j, value * 10 + kDigitOf[j]);
            if (out.size() >= limit) return;
        }
    };
    rec(rec, 0, 0, BigInt(0));
    return out;
}

LowerBoundCertificate certify_lower_bound() {
    LowerBoundCertificate cert;
    const double log10 = std::log(10.0);
    // alpha = delta = 1/2 -> c = alpha(1-delta)/(1-alpha) = 1/2
    EntropySolution strong = solve_entropy_max({0, 1, 2, 3}, 0.5);
    cert.h = strong.h_max;
    cert.exponent = 0.5 * strong.h_max / log10;
    cert.h_above_0940 = strong.h_max > 0.940;
    cert.exponent_above_0204 = cert.exponent > 0.204;
    // the historical delta = 3/4 gives c = 1/4 and a weaker exponent
    EntropySolution weak = solve_entropy_max({0, 1, 2, 3}, 0.25);
    cert.exponent_weaker = 0.5 * weak.h_max / log10;
    cert.monotone = cert.exponent_weaker < cert.exponent;
    return cert;
}

} // namespace zuck
