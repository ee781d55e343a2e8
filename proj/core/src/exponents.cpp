#include "zuck/exponents.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace zuck {

double zeta(const DigitSet& set, double s) {
    double sum = 0;
    for (int d : set.members()) sum += std::pow(d, -s);
    return sum;
}

double zeta_prime(const DigitSet& set, double s) {
    double sum = 0;
    for (int d : set.members()) sum -= std::log(d) * std::pow(d, -s);
    return sum;
}

double zeta_second(const DigitSet& set, double s) {
    double sum = 0;
    for (int d : set.members()) {
        double l = std::log(d);
        sum += l * l * std::pow(d, -s);
    }
    return sum;
}

namespace {

double critical_lhs(Base base, const DigitSet& set, int v, double s) {
    double z = zeta(set, s);
    double zp = zeta_prime(set, s);
    double logd = std::log(static_cast<double>(set.size()));
    double logb = std::log(static_cast<double>(base.value));
    return (s + v * logd / logb) * (zp / z) - std::log(z) + v * logd;
}

} // namespace

double solve_critical(Base base, const DigitSet& set, int v, double tol) {
    if (v != 1 && v != 2) throw std::invalid_argument("v must be 1 or 2");
    if (v == 2 && base.value < 6)
        throw std::domain_error("v2-undefined-for-small-base");
    if (critical_lhs(base, set, v, 0.0) >= 0)
        throw std::domain_error("no-root");

    double lo = 0.0, hi = 1.0;
    while (critical_lhs(base, set, v, hi) <= 0) {
        hi *= 2;
        if (hi > 1e6) throw std::domain_error("no-root");
    }
    for (int i = 0; i < 200 && hi - lo > tol; ++i) {
        double mid = 0.5 * (lo + hi);
        if (critical_lhs(base, set, v, mid) < 0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

AlphaBetaGamma alpha_beta_gamma(Base base, const DigitSet& set, double s) {
    double z = zeta(set, s);
    double zp = zeta_prime(set, s);
    double logb = std::log(static_cast<double>(base.value));
    AlphaBetaGamma r;
    r.alpha = -zp / (z * logb);
    r.beta = std::log(static_cast<double>(set.size())) / logb * (1.0 - r.alpha);
    r.gamma = r.alpha * s + std::log(z) / logb;
    return r;
}

ExponentReport exponent_report(Base base) {
    ExponentReport report;
    report.base = base.value;
    double logb = std::log(static_cast<double>(base.value));
    for (const DigitSet& set : omega_star(base).sets) {
        SetExponents e;
        e.set = set;
        e.s1 = solve_critical(base, set, 1);
        e.z_plus = alpha_beta_gamma(base, set, e.s1).beta;
        e.s2 = base.value >= 6 ? solve_critical(base, set, 2) : 0.0;
        e.z_star = alpha_beta_gamma(base, set, e.s2).beta;
        e.z = std::log(zeta(set, 1.0)) / logb;
        report.per_set.push_back(e);
    }
    for (const SetExponents& e : report.per_set) {
        report.z = std::max(report.z, e.z);
        report.z_plus = std::max(report.z_plus, e.z_plus);
        report.z_star = std::max(report.z_star, e.z_star);
    }
    return report;
}

double z_heuristic(Base base) {
    double best = 0;
    double logb = std::log(static_cast<double>(base.value));
    for (const DigitSet& set : omega_star(base).sets)
        best = std::max(best, std::log(zeta(set, 1.0)) / logb);
    return best;
}

double z_plus(Base base) { return exponent_report(base).z_plus; }
double z_star(Base base) { return exponent_report(base).z_star; }

double default_alpha(Base base) {
    ExponentReport report = exponent_report(base);
    const SetExponents* best = nullptr;
    for (const SetExponents& e : report.per_set)
        if (!best || e.z_star > best->z_star) best = &e;
    return alpha_beta_gamma(base, best->set, best->s2).alpha;
}

namespace {

double entropy_mean(const std::vector<double>& a, double t) {
    // sum a_i e^{a_i t} / sum e^{a_i t}, stabilized around max a_i * t
    double amax = *std::max_element(a.begin(), a.end());
    double num = 0, den = 0;
    for (double ai : a) {
        double w = std::exp(ai * t - amax * t);
        num += ai * w;
        den += w;
    }
    return num / den;
}

} // namespace

EntropySolution solve_entropy_max(const std::vector<double>& a, double c,
                                  double tol) {
    if (a.empty()) throw std::invalid_argument("empty coefficient list");
    double amin = *std::min_element(a.begin(), a.end());
    double mean = std::accumulate(a.begin(), a.end(), 0.0) / a.size();
    if (!(amin < c && c < mean))
        throw std::domain_error("entropy-precondition-violated");

    double hi = 0.0; // F(0) = mean - c > 0
    double lo = -1.0;
    while (entropy_mean(a, lo) - c >= 0) {
        lo *= 2;
        if (lo < -1e6) throw std::domain_error("entropy-precondition-violated");
    }
    for (int i = 0; i < 200 && hi - lo > tol; ++i) {
        double mid = 0.5 * (lo + hi);
        if (entropy_mean(a, mid) - c < 0)
            lo = mid;
        else
            hi = mid;
    }
    EntropySolution sol;
    sol.lambda = 0.5 * (lo + hi);
    double den = 0;
    for (double ai : a) den += std::exp(ai * sol.lambda);
    sol.h_max = -c * sol.lambda + std::log(den);
    for (double ai : a) sol.maximizer.push_back(std::exp(ai * sol.lambda) / den);
    return sol;
}

double entropy(const std::vector<double>& x) {
    double h = 0;
    for (double xi : x)
        if (xi > 0) h -= xi * std::log(xi);
    return h;
}

double empirical_z(Base base, int digits, u128 count) {
    if (count == 0) throw std::domain_error("count must be >= 1");
    double logc = std::log(static_cast<double>(count));
    return logc / (digits * std::log(static_cast<double>(base.value)));
}

double rel_error(Base base, int digits, u128 count) {
    double z = z_heuristic(base);
    return std::abs(empirical_z(base, digits, count) - z) / z;
}

double multinomial_log(const DigitComposition& comp) {
    double total = 0;
    uint64_t n = 0;
    for (int d = 1; d < comp.base; ++d) {
        n += comp.counts[d];
        total -= std::lgamma(static_cast<double>(comp.counts[d]) + 1.0);
    }
    total += std::lgamma(static_cast<double>(n) + 1.0);
    return total;
}

} // namespace zuck
