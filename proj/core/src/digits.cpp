#include "zuck/digits.hpp"

#include <algorithm>

namespace zuck {

BigInt DigitString::value() const {
    BigInt v = 0;
    for (uint8_t d : digits) v = v * base + d;
    return v;
}

std::string DigitString::str(bool verbose) const {
    static const char* glyphs = "0123456789abcdef";
    std::string out;
    if (verbose) {
        for (size_t i = 0; i < digits.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(static_cast<int>(digits[i]));
        }
    } else {
        for (uint8_t d : digits) out += glyphs[d];
    }
    return out;
}

namespace {

bool is_prime_small(int q) {
    if (q < 2) return false;
    for (int f = 2; f * f <= q; ++f)
        if (q % f == 0) return false;
    return true;
}

} // namespace

DigitProduct DigitProduct::of(const DigitComposition& comp) {
    DigitProduct p;
    for (int d = 1; d < comp.base; ++d) {
        uint32_t n = comp.counts[d];
        if (n == 0) continue;
        for (uint32_t i = 0; i < n; ++i) {
            if (mul_overflow(p.value, static_cast<u128>(d), p.value))
                throw std::overflow_error("product-overflow");
        }
        for (int q = 2; q <= d; ++q) {
            if (!is_prime_small(q)) continue;
            uint32_t e = valuation(q, d);
            if (e > 0) p.factorization[q] += e * n;
        }
    }
    return p;
}

DigitString to_digits(const BigInt& n, Base base) {
    if (sgn(n) <= 0)
        throw std::domain_error("no representation handled for n < 1");
    DigitString s;
    s.base = base.value;
    BigInt m = n;
    while (m > 0) {
        BigInt q, r;
        mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), base.value);
        s.digits.push_back(static_cast<uint8_t>(r.get_ui()));
        m = q;
    }
    std::reverse(s.digits.begin(), s.digits.end());
    return s;
}

BigInt digit_product(const BigInt& n, Base base) {
    DigitString s = to_digits(n, base);
    BigInt p = 1;
    for (uint8_t d : s.digits) {
        if (d == 0) return 0;
        p *= d;
    }
    return p;
}

bool is_zuckerman(const BigInt& n, Base base) {
    if (sgn(n) <= 0) return false;
    BigInt p = digit_product(n, base);
    if (p == 0) return false;
    return mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t()) != 0;
}

DigitComposition composition_of(const BigInt& n, Base base) {
    DigitComposition comp(base);
    for (uint8_t d : to_digits(n, base).digits)
        if (d != 0) comp.counts[d] += 1;
    return comp;
}

std::set<int> digit_set(const BigInt& n, Base base) {
    std::set<int> s;
    for (uint8_t d : to_digits(n, base).digits) s.insert(d);
    return s;
}

std::vector<uint8_t> to_digits_u128(u128 n, int base) {
    if (n == 0) throw std::domain_error("no representation handled for n < 1");
    std::vector<uint8_t> ds;
    while (n > 0) {
        ds.push_back(static_cast<uint8_t>(n % static_cast<unsigned>(base)));
        n /= static_cast<unsigned>(base);
    }
    std::reverse(ds.begin(), ds.end());
    return ds;
}

u128 digit_product_u128(u128 n, int base) {
    // digit products of 128-bit numbers stay within 128 bits for b <= 16
    u128 p = 1;
    while (n > 0) {
        unsigned d = static_cast<unsigned>(n % static_cast<unsigned>(base));
        if (d == 0) return 0;
        p *= d;
        n /= static_cast<unsigned>(base);
    }
    return p;
}

bool is_zuckerman_u128(u128 n, int base) {
    if (n == 0) return false;
    u128 p = digit_product_u128(n, base);
    return p != 0 && n % p == 0;
}

} // namespace zuck
