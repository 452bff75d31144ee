#include "rbmcs/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace rbmcs {

double ssd(std::span<const double> values, int n, int d)
{
    if (n < 1 || d < 1 || values.size() != static_cast<std::size_t>(n) * d)
        throw std::domain_error("ssd: shape mismatch");
    double total = 0.0;
    for (int k = 0; k < d; ++k) {
        double sum = 0.0;
        double sum_sq = 0.0;
        for (int i = 0; i < n; ++i) {
            const double u = values[static_cast<std::size_t>(i) * d + k];
            sum += u;
            sum_sq += u * u;
        }
        const double mean = sum / n;
        total += 2.0 * (sum_sq / n - mean * mean);
    }
    return std::max(total, 0.0);
}

double ssd_v(const Ensemble& e) { return ssd(e.v, e.n, e.d); }
double ssd_x(const Ensemble& e) { return ssd(e.x, e.n, e.d); }

std::pair<double, double> diameters(const Ensemble& e)
{
    if (e.n < 1)
        throw std::domain_error("diameters: empty ensemble");
    if (e.d == 1) {
        const auto [xmin, xmax] = std::minmax_element(e.x.begin(), e.x.end());
        const auto [vmin, vmax] = std::minmax_element(e.v.begin(), e.v.end());
        return {*xmax - *xmin, *vmax - *vmin};
    }
    double dx2 = 0.0;
    double dv2 = 0.0;
    for (int i = 0; i < e.n; ++i) {
        for (int j = i + 1; j < e.n; ++j) {
            double rx = 0.0;
            double rv = 0.0;
            for (int k = 0; k < e.d; ++k) {
                const double ex = e.xat(j, k) - e.xat(i, k);
                const double ev = e.vat(j, k) - e.vat(i, k);
                rx += ex * ex;
                rv += ev * ev;
            }
            dx2 = std::max(dx2, rx);
            dv2 = std::max(dv2, rv);
        }
    }
    return {std::sqrt(dx2), std::sqrt(dv2)};
}

std::vector<double> momentum(const Ensemble& e)
{
    std::vector<double> total(static_cast<std::size_t>(e.d), 0.0);
    for (int i = 0; i < e.n; ++i)
        for (int k = 0; k < e.d; ++k)
            total[static_cast<std::size_t>(k)] += e.vat(i, k);
    return total;
}

double energy(const Ensemble& e)
{
    double total = 0.0;
    for (double value : e.v)
        total += value * value;
    return total;
}

double l2_error(const Ensemble& approx, const Ensemble& reference)
{
    if (approx.n != reference.n || approx.d != reference.d)
        throw std::domain_error("l2_error: ensembles have different shapes");
    if (std::abs(approx.t - reference.t) > 1e-9 * std::max(1.0, std::abs(reference.t)))
        throw std::domain_error("l2_error: time stamps are not aligned");
    double total = 0.0;
    for (std::size_t i = 0; i < approx.v.size(); ++i) {
        const double diff = approx.v[i] - reference.v[i];
        total += diff * diff;
    }
    return std::sqrt(total / approx.n);
}

double scale_rbmr(int n, int p)
{
    if (p < 2 || n < 3 || p > n)
        throw std::domain_error("scale_rbmr: requires 2 <= p <= n, n >= 3");
    const double value = 1.0 - static_cast<double>(p) / n + 1.0 / (p - 1) - 1.0 / (n - 1);
    return std::sqrt(std::max(value, 0.0));
}

double scale_rbm1(int n, int p)
{
    if (p < 2 || n < 3 || p > n)
        throw std::domain_error("scale_rbm1: requires 2 <= p <= n, n >= 3");
    if (p == n)
        return 0.0;
    return std::sqrt(1.0 / (p - 1) - 1.0 / (n - 1));
}

RateConstants rate_constants(double psi0, int p, double tau)
{
    if (!(psi0 > 0.0))
        throw std::domain_error("rate_constants: psi0 must be > 0");
    if (p < 2)
        throw std::domain_error("rate_constants: p must be >= 2");
    if (tau < 0.0)
        throw std::domain_error("rate_constants: tau must be >= 0");
    RateConstants rc;
    rc.c1 = 2.0 * psi0 / (1.0 + (2.0 * p / (p - 1)) * psi0 * tau);
    rc.c2 = psi0 * (1.0 - psi0 * tau);
    rc.c3 = std::min(rc.c1, 2.0 * rc.c2);
    rc.tau_warning = psi0 * tau >= 1.0;
    return rc;
}

double fit_decay_rate(std::span<const double> t, std::span<const double> y)
{
    if (t.size() != y.size() || t.size() < 3)
        throw std::domain_error("fit_decay_rate: needs >= 3 (t, y) pairs");
    const double floor = 1e-12 * y[0];
    double st = 0.0, sl = 0.0, stt = 0.0, stl = 0.0;
    long m = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (!(y[i] > 0.0))
            throw std::domain_error("fit_decay_rate: y must be positive");
        if (y[i] < floor)
            continue;
        const double ly = std::log(y[i]);
        st += t[i];
        sl += ly;
        stt += t[i] * t[i];
        stl += t[i] * ly;
        ++m;
    }
    if (m < 3)
        throw std::domain_error("fit_decay_rate: fewer than 3 usable points");
    const double denom = m * stt - st * st;
    if (denom == 0.0)
        throw std::domain_error("fit_decay_rate: degenerate time grid");
    const double slope = (m * stl - st * sl) / denom;
    return -slope;
}

void MetricsSeries::append(const Ensemble& e, double l2_value)
{
    d = e.d;
    t.push_back(e.t);
    ssd_v.push_back(rbmcs::ssd_v(e));
    ssd_x.push_back(rbmcs::ssd_x(e));
    const auto [dx, dv] = diameters(e);
    d_x.push_back(dx);
    d_v.push_back(dv);
    const auto mom = rbmcs::momentum(e);
    momentum.insert(momentum.end(), mom.begin(), mom.end());
    energy.push_back(rbmcs::energy(e));
    l2.push_back(l2_value);
}

} // namespace rbmcs
