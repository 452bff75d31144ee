#include "rbmcs/theory.hpp"

#include "rbmcs/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace rbmcs {

namespace {

void check_params(const AgbParams& params, int n_floor)
{
    if (params.n < n_floor)
        throw std::domain_error("agb: n below the floor of the requested form");
    if (params.n > 60)
        throw std::domain_error("agb: n must be <= 60");
    if (!(params.a > 0.0))
        throw std::domain_error("agb: a must be > 0");
    if (!(params.ratio > 0.0) || params.ratio > 1.0)
        throw std::domain_error("agb: ratio must lie in (0, 1]");
}

double log_choose(int n, int r)
{
    return std::lgamma(n + 1.0) - std::lgamma(r + 1.0) - std::lgamma(n - r + 1.0);
}

// sum_r C(n,r) a^r m(r) q^r (1-q)^{n-r} via log-space weights and a
// max-shifted exponential sum; m(r) stays outside the exponent.
double weighted_binomial_sum(int n, double a, double q,
                             const std::vector<double>& m)
{
    const double log_aq = std::log(a) + std::log(q);
    const double log_1mq = (q < 1.0) ? std::log1p(-q) : -std::numeric_limits<double>::infinity();

    std::vector<double> log_w(static_cast<std::size_t>(n) + 1);
    double shift = -std::numeric_limits<double>::infinity();
    for (int r = 0; r <= n; ++r) {
        double lw;
        if (q == 1.0)
            lw = (r == n) ? n * std::log(a) : -std::numeric_limits<double>::infinity();
        else
            lw = log_choose(n, r) + r * log_aq + (n - r) * log_1mq;
        log_w[static_cast<std::size_t>(r)] = lw;
        if (m[static_cast<std::size_t>(r)] != 0.0 && lw > shift)
            shift = lw;
    }
    if (!std::isfinite(shift))
        return 0.0;
    double total = 0.0;
    for (int r = 0; r <= n; ++r) {
        const double mr = m[static_cast<std::size_t>(r)];
        if (mr != 0.0)
            total += mr * std::exp(log_w[static_cast<std::size_t>(r)] - shift);
    }
    return std::exp(shift) * total;
}

} // namespace

double agb_sum(const AgbParams& params, AgbMoment moment)
{
    check_params(params, 0);
    std::vector<double> m(static_cast<std::size_t>(params.n) + 1);
    for (int r = 0; r <= params.n; ++r) {
        switch (moment) {
        case AgbMoment::one: m[static_cast<std::size_t>(r)] = 1.0; break;
        case AgbMoment::r: m[static_cast<std::size_t>(r)] = r; break;
        case AgbMoment::r_squared: m[static_cast<std::size_t>(r)] = static_cast<double>(r) * r; break;
        }
    }
    return weighted_binomial_sum(params.n, params.a, params.ratio, m);
}

double agb_closed(const AgbParams& params, AgbMoment moment)
{
    const int floor = (moment == AgbMoment::r_squared) ? 2 : 1;
    check_params(params, floor);
    const double a = params.a;
    const double q = params.ratio;
    const double g = params.g();
    const double n = params.n;
    switch (moment) {
    case AgbMoment::one:
        return std::pow(g, n);
    case AgbMoment::r:
        return a * q * n * std::pow(g, n - 1);
    case AgbMoment::r_squared:
        return a * q * n * (std::pow(g, n - 2) * (n - 1) * a * q + std::pow(g, n - 1));
    }
    return 0.0; // unreachable
}

std::pair<double, double> rtau_identity(int n, double a, double ratio, double tau, double t)
{
    AgbParams params{n, a, ratio};
    check_params(params, 2);
    if (std::abs(t - n * ratio * tau) > 1e-12 * std::max(1.0, std::abs(t)))
        throw std::domain_error("rtau_identity: constraint t = n (p/N) tau violated");

    std::vector<double> m(static_cast<std::size_t>(n) + 1);
    for (int r = 0; r <= n; ++r) {
        const double diff = r * tau - t;
        m[static_cast<std::size_t>(r)] = diff * diff;
    }
    const double lhs = weighted_binomial_sum(n, a, ratio, m);
    const double g = params.g();
    const double rhs = std::pow(g, n - 2) * (a - 1.0) * (a - 1.0) * t * t * (1.0 - ratio) * (1.0 - ratio)
                     + a * std::pow(g, n - 2) * t * tau * (1.0 - ratio);
    return {lhs, rhs};
}

Lemma41Result lemma41_check(double a, double b, double x)
{
    if (!(a >= 0.0) || a > 1.0)
        throw std::domain_error("lemma41_check: a must lie in [0, 1]");
    if (!(b > 0.0))
        throw std::domain_error("lemma41_check: b must be > 0");
    if (x < 0.0 || x > b)
        throw std::domain_error("lemma41_check: x must lie in [0, b]");
    Lemma41Result res;
    res.lhs = a + (1.0 - a) * std::exp(-x);
    res.rhs = std::exp(-(1.0 - a) / (1.0 + b) * x);
    res.holds = res.lhs <= res.rhs * (1.0 + 1e-12);
    return res;
}

std::vector<TheoryCheck> verify_theory()
{
    std::vector<TheoryCheck> checks;

    {
        TheoryCheck check;
        check.name = "binomial moment identities (closed form vs brute sum)";
        const int ns[] = {2, 3, 5, 8, 13, 21, 32, 40};
        const double as[] = {0.5, 0.9, 1.0};
        const double ratios[] = {1.0 / 32, 1.0 / 8, 1.0 / 2, 1.0};
        for (int n : ns) {
            for (double a : as) {
                for (double ratio : ratios) {
                    const AgbParams params{n, a, ratio};
                    for (AgbMoment m : {AgbMoment::one, AgbMoment::r, AgbMoment::r_squared}) {
                        const double closed = agb_closed(params, m);
                        const double sum = agb_sum(params, m);
                        const double rel = std::abs(sum - closed) / std::max(1.0, std::abs(closed));
                        check.max_rel_err = std::max(check.max_rel_err, rel);
                        ++check.cases;
                    }
                }
            }
        }
        check.pass = check.max_rel_err <= 1e-10;
        checks.push_back(check);
    }

    {
        TheoryCheck check;
        check.name = "time-change identity (brute sum vs closed form)";
        RngStream rng(20240601, 0);
        const double as[] = {0.5, 0.9};
        const double ratios[] = {1.0 / 32, 1.0 / 8, 1.0 / 2};
        for (int trial = 0; trial < 200; ++trial) {
            const int n = 2 + static_cast<int>(rng.uniform_below(39));
            const double a = as[rng.uniform_below(2)];
            const double ratio = ratios[rng.uniform_below(3)];
            const double tau = rng.uniform(0.01, 0.2);
            const double t = n * ratio * tau;
            const auto [lhs, rhs] = rtau_identity(n, a, ratio, tau, t);
            const double rel = std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs));
            check.max_rel_err = std::max(check.max_rel_err, rel);
            ++check.cases;
        }
        check.pass = check.max_rel_err <= 1e-9;
        checks.push_back(check);
    }

    {
        TheoryCheck check;
        check.name = "decay inequality sweep";
        const double bs[] = {0.1, 1.0, 10.0};
        for (int ai = 0; ai <= 4; ++ai) {
            const double a = 0.25 * ai;
            for (double b : bs) {
                for (int xi = 0; xi < 1000; ++xi) {
                    const double x = b * xi / 999.0;
                    const auto res = lemma41_check(a, b, x);
                    if (!res.holds)
                        ++check.violations;
                    ++check.cases;
                }
            }
        }
        check.pass = check.violations == 0;
        checks.push_back(check);
    }

    return checks;
}

} // namespace rbmcs
