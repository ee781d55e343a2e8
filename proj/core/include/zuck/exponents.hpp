#pragma once

#include <vector>

#include "zuck/omega.hpp"

namespace zuck {

// zeta_D(s) = sum over d in D of d^-s, with first and second derivatives.
double zeta(const DigitSet& set, double s);
double zeta_prime(const DigitSet& set, double s);
double zeta_second(const DigitSet& set, double s);

// Unique positive root of
//   (s + v*log|D|/log b) * zeta'/zeta - log(zeta/|D|^v) = 0.
// v=1 is always solvable; v=2 requires b >= 6 and throws
// "v2-undefined-for-small-base" otherwise. The left-hand side is strictly
// increasing, so plain bisection converges unconditionally.
double solve_critical(Base base, const DigitSet& set, int v,
                      double tol = 1e-13);

struct AlphaBetaGamma {
    double alpha, beta, gamma;
};

AlphaBetaGamma alpha_beta_gamma(Base base, const DigitSet& set, double s);

struct SetExponents {
    DigitSet set;
    double s1 = 0;      // root with v=1
    double s2 = 0;      // root with v=2 (0 for b in {3,4,5})
    double z_plus = 0;  // upper-bound exponent for this set
    double z_star = 0;  // counting-complexity exponent for this set
    double z = 0;       // heuristic growth exponent for this set
};

struct ExponentReport {
    int base;
    std::vector<SetExponents> per_set;
    double z = 0, z_plus = 0, z_star = 0; // maxima over the family
};

ExponentReport exponent_report(Base base);

double z_heuristic(Base base);
double z_plus(Base base);
double z_star(Base base);

// The product-size split the composition counter defaults to: alpha evaluated
// at s2 for the digit set attaining z_star.
double default_alpha(Base base);

struct EntropySolution {
    double lambda = 0; // the unique negative multiplier
    double h_max = 0;  // constrained entropy maximum, in nats
    std::vector<double> maximizer;
};

// Maximize H(x) subject to sum x_i = 1 and sum a_i x_i <= c.
// Requires min(a) < c < mean(a); throws "entropy-precondition-violated".
EntropySolution solve_entropy_max(const std::vector<double>& a, double c,
                                  double tol = 1e-13);

// Shannon entropy in nats, 0*log(0) = 0.
double entropy(const std::vector<double>& x);

// log|Z_{b,N}| / log(b^N) and its relative deviation from z_b.
double empirical_z(Base base, int digits, u128 count);
double rel_error(Base base, int digits, u128 count);

// log(N! / prod N_d!) via lgamma
double multinomial_log(const DigitComposition& comp);

} // namespace zuck
