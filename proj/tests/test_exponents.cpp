#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "golden.hpp"
#include "zuck/exponents.hpp"

using namespace zuck;

namespace {

double trunc4(double x) { return std::floor(x * 1e4 + 1e-9) / 1e4; }

DigitSet set_of(int b, std::initializer_list<int> ds) {
    return DigitSet(Base(b), std::vector<int>(ds));
}

} // namespace

TEST_CASE("zeta values") {
    auto d12 = set_of(3, {1, 2});
    CHECK(zeta(d12, 1.0) == doctest::Approx(1.5));
    CHECK(zeta_prime(d12, 0.0) == doctest::Approx(-std::log(2.0)));
    for (int b : {5, 10}) {
        for (const DigitSet& set : omega_star(Base(b)).sets)
            CHECK(zeta(set, 0.0) == doctest::Approx(set.size()));
    }
}

TEST_CASE("critical root: published four-decimal values") {
    for (const auto& row : golden::kExponents) {
        ExponentReport report = exponent_report(Base(row.base));
        CHECK(trunc4(report.z) == doctest::Approx(row.z));
        CHECK(trunc4(report.z_plus) == doctest::Approx(row.z_plus));
        CHECK(trunc4(report.z_star) == doctest::Approx(row.z_star));
    }
}

TEST_CASE("the critical function increases along the bracket") {
    for (int b : {6, 10, 12}) {
        for (const DigitSet& set : omega_star(Base(b)).sets) {
            for (int v : {1, 2}) {
                double logb = std::log(static_cast<double>(b));
                double logd = std::log(static_cast<double>(set.size()));
                auto g = [&](double s) {
                    return (s + v * logd / logb) * zeta_prime(set, s) /
                               zeta(set, s) -
                           std::log(zeta(set, s)) + v * logd;
                };
                double prev = g(0.0);
                for (double s = 0.05; s < 4.0; s += 0.05) {
                    double cur = g(s);
                    CHECK(cur > prev);
                    prev = cur;
                }
            }
        }
    }
}

TEST_CASE("root rejects v=2 below base 6") {
    for (int b : {3, 4, 5})
        for (const DigitSet& set : omega_star(Base(b)).sets)
            CHECK_THROWS_WITH_AS(solve_critical(Base(b), set, 2),
                                 "v2-undefined-for-small-base",
                                 std::domain_error);
}

TEST_CASE("alpha-beta-gamma identities at the roots") {
    for (int b = 3; b <= 12; ++b) {
        for (const SetExponents& e : exponent_report(Base(b)).per_set) {
            auto at1 = alpha_beta_gamma(Base(b), e.set, e.s1);
            CHECK(std::abs(at1.beta - at1.gamma) < 1e-9);
            CHECK(at1.beta == doctest::Approx(e.z_plus));
            if (b >= 6) {
                auto at2 = alpha_beta_gamma(Base(b), e.set, e.s2);
                CHECK(std::abs(at2.beta - at2.gamma / 2) < 1e-9);
            }
        }
    }
}

TEST_CASE("alpha-beta-gamma at s = 0") {
    auto abg = alpha_beta_gamma(Base(3), set_of(3, {1, 2}), 0.0);
    CHECK(abg.gamma == doctest::Approx(std::log(2.0) / std::log(3.0)));
    // alpha at 0 is the average digit log over log b
    auto d10 = set_of(10, {1, 2, 3, 4, 6, 7, 8, 9});
    auto a10 = alpha_beta_gamma(Base(10), d10, 0.0);
    double expect = 0;
    for (int d : d10.members()) expect += std::log(static_cast<double>(d));
    expect /= d10.size() * std::log(10.0);
    CHECK(a10.alpha == doctest::Approx(expect));
}

TEST_CASE("heuristic exponent closed form") {
    CHECK(z_heuristic(Base(3)) ==
          doctest::Approx(std::log(1.5) / std::log(3.0)));
    CHECK(z_heuristic(Base(4)) ==
          doctest::Approx(std::log(4.0 / 3.0) / std::log(4.0)));
    CHECK(trunc4(z_heuristic(Base(10))) == doctest::Approx(.4197));
}

TEST_CASE("entropy") {
    CHECK(entropy({1.0, 0.0}) == doctest::Approx(0.0));
    CHECK(entropy({0.5, 0.5}) == doctest::Approx(std::log(2.0)));
    CHECK(entropy({0.25, 0.25, 0.25, 0.25}) == doctest::Approx(std::log(4.0)));

    // uniform maximizes; random perturbations only lose
    for (int k = 2; k <= 5; ++k) {
        std::vector<double> uniform(static_cast<size_t>(k), 1.0 / k);
        double h_uniform = entropy(uniform);
        unsigned state = 12345;
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<double> x(static_cast<size_t>(k));
            double sum = 0;
            for (double& xi : x) {
                state = state * 1664525u + 1013904223u;
                xi = (state >> 8) % 1000 + 1;
                sum += xi;
            }
            for (double& xi : x) xi /= sum;
            CHECK(entropy(x) <= h_uniform + 1e-12);
        }
    }
}

TEST_CASE("constrained entropy maximum") {
    auto sol = solve_entropy_max({0, 1}, 0.25);
    CHECK(sol.lambda == doctest::Approx(std::log(1.0 / 3.0)));
    CHECK(sol.h_max ==
          doctest::Approx(0.25 * std::log(3.0) + std::log(4.0 / 3.0)));

    auto big = solve_entropy_max({0, 1, 2, 3}, 0.5);
    CHECK(big.h_max > 0.940);

    CHECK_THROWS_AS(solve_entropy_max({0, 1}, 0.5), std::domain_error);
    CHECK_THROWS_AS(solve_entropy_max({0, 1}, -0.1), std::domain_error);
}

TEST_CASE("entropy maximizer matches a dense grid search") {
    struct Case {
        std::vector<double> a;
        double c;
    };
    for (const Case& tc : {Case{{0, 1}, 0.3}, Case{{0, 1, 2}, 0.8},
                           Case{{0.5, 1.5, 3.0}, 1.2}}) {
        auto sol = solve_entropy_max(tc.a, tc.c);
        // feasibility of the reported maximizer
        double sum = 0, constraint = 0;
        for (size_t i = 0; i < tc.a.size(); ++i) {
            sum += sol.maximizer[i];
            constraint += tc.a[i] * sol.maximizer[i];
        }
        CHECK(sum == doctest::Approx(1.0));
        CHECK(constraint <= tc.c + 1e-9);
        CHECK(entropy(sol.maximizer) == doctest::Approx(sol.h_max));

        double best = 0;
        const int steps = 300;
        for (int i = 0; i <= steps; ++i) {
            for (int j = 0; i + j <= steps; ++j) {
                std::vector<double> x;
                x.push_back(static_cast<double>(i) / steps);
                x.push_back(static_cast<double>(j) / steps);
                if (tc.a.size() == 3)
                    x.push_back(1.0 - x[0] - x[1]);
                else if (i + j != steps)
                    continue;
                double cx = 0;
                for (size_t t = 0; t < tc.a.size(); ++t) cx += tc.a[t] * x[t];
                if (cx > tc.c) continue;
                best = std::max(best, entropy(x));
            }
        }
        CHECK(std::abs(best - sol.h_max) < 1e-3);
    }
}

TEST_CASE("empirical exponent and its relative error") {
    CHECK(empirical_z(Base(10), 22, 1414773364ULL) ==
          doctest::Approx(0.41594031).epsilon(1e-7));
    CHECK(empirical_z(Base(3), 59, 24512322843ULL) ==
          doctest::Approx(0.36907025).epsilon(1e-7));
    CHECK(empirical_z(Base(7), 3, 1) == doctest::Approx(0.0));
    CHECK(rel_error(Base(10), 22, 1414773364ULL) ==
          doctest::Approx(9.1e-3).epsilon(0.05));
}

TEST_CASE("log-multinomial") {
    DigitComposition c1(Base(3));
    c1.counts[1] = 2;
    c1.counts[2] = 1;
    CHECK(multinomial_log(c1) == doctest::Approx(std::log(3.0)));

    DigitComposition single(Base(10));
    single.counts[7] = 9;
    CHECK(multinomial_log(single) == doctest::Approx(0.0));

    DigitComposition c2(Base(3));
    c2.counts[1] = 5;
    c2.counts[2] = 5;
    CHECK(multinomial_log(c2) == doctest::Approx(std::log(252.0)));

    // agreement with the exact integer multinomial for all splits up to 20
    for (int n = 1; n <= 20; ++n) {
        for (int k = 0; k <= n; ++k) {
            DigitComposition c(Base(10));
            c.counts[2] = static_cast<uint32_t>(k);
            c.counts[5] = static_cast<uint32_t>(n - k);
            long double exact = 1;
            for (int i = 1; i <= k; ++i)
                exact = exact * (n - k + i) / i;
            CHECK(multinomial_log(c) ==
                  doctest::Approx(std::log(static_cast<double>(exact))));
        }
    }
}
