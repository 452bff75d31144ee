#include "rbmcs/dynamics.hpp"

#include "rbmcs/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace rbmcs {

namespace detail {

void batch_dv(const Ensemble& e, std::span<const int> idx, const Kernel& kernel,
              double kappa, double* dv_local)
{
    const int m = static_cast<int>(idx.size());
    const int d = e.d;
    const double coef0 = kappa / static_cast<double>(m - 1);
    const double* x = e.x.data();
    const double* v = e.v.data();

    for (int a = 0; a < m; ++a) {
        const int i = idx[static_cast<std::size_t>(a)];
        for (int b = a + 1; b < m; ++b) {
            const int j = idx[static_cast<std::size_t>(b)];
            double r2 = 0.0;
            for (int k = 0; k < d; ++k) {
                const double diff = x[static_cast<std::size_t>(j) * d + k]
                                  - x[static_cast<std::size_t>(i) * d + k];
                r2 += diff * diff;
            }
            const double w = coef0 * kernel(std::sqrt(r2));
            for (int k = 0; k < d; ++k) {
                const double f = w * (v[static_cast<std::size_t>(j) * d + k]
                                    - v[static_cast<std::size_t>(i) * d + k]);
                dv_local[static_cast<std::size_t>(a) * d + k] += f;
                dv_local[static_cast<std::size_t>(b) * d + k] -= f;
            }
        }
    }
}

namespace {

void check_finite_subset(const Ensemble& e, std::span<const int> idx)
{
    for (int i : idx) {
        for (int k = 0; k < e.d; ++k) {
            if (!std::isfinite(e.xat(i, k)) || !std::isfinite(e.vat(i, k)))
                throw blowup_error("time stepping produced a non-finite state for particle "
                                       + std::to_string(i) + " at t = " + std::to_string(e.t),
                                   i, e.t);
        }
    }
}

} // namespace

void advance_batch(Ensemble& e, std::span<const int> idx, const Kernel& kernel,
                   double kappa, double tau, double dt)
{
    const int m = static_cast<int>(idx.size());
    if (m < 2)
        throw std::domain_error("advance_batch: batch must have p >= 2 members");
    const int d = e.d;
    const int n_sub = substep_count(tau, dt);
    const double t0 = e.t;

    std::vector<double> dv(static_cast<std::size_t>(m) * d);
    for (int s = 0; s < n_sub; ++s) {
        std::fill(dv.begin(), dv.end(), 0.0);
        batch_dv(e, idx, kernel, kappa, dv.data());
        for (int a = 0; a < m; ++a) {
            const int i = idx[static_cast<std::size_t>(a)];
            for (int k = 0; k < d; ++k) {
                e.xat(i, k) += dt * e.vat(i, k);
                e.vat(i, k) += dt * dv[static_cast<std::size_t>(a) * d + k];
            }
        }
    }
    check_finite_subset(e, idx);
    e.t = t0 + tau;
}

void advance_frozen_network(Ensemble& e, const std::vector<int>& neighbors,
                            int neighbors_per_particle, const Kernel& kernel,
                            double kappa, double tau, double dt)
{
    const int n = e.n;
    const int d = e.d;
    const int m = neighbors_per_particle;
    const int n_sub = substep_count(tau, dt);
    const double coef0 = kappa / static_cast<double>(m);
    const double t0 = e.t;

    std::vector<double> dv(e.v.size());
    const double* x = e.x.data();
    const double* v = e.v.data();
    for (int s = 0; s < n_sub; ++s) {
        std::fill(dv.begin(), dv.end(), 0.0);
        for (int i = 0; i < n; ++i) {
            for (int a = 0; a < m; ++a) {
                const int j = neighbors[static_cast<std::size_t>(i) * m + a];
                double r2 = 0.0;
                for (int k = 0; k < d; ++k) {
                    const double diff = x[static_cast<std::size_t>(j) * d + k]
                                      - x[static_cast<std::size_t>(i) * d + k];
                    r2 += diff * diff;
                }
                const double w = coef0 * kernel(std::sqrt(r2));
                for (int k = 0; k < d; ++k)
                    dv[static_cast<std::size_t>(i) * d + k]
                        += w * (v[static_cast<std::size_t>(j) * d + k]
                              - v[static_cast<std::size_t>(i) * d + k]);
            }
        }
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < d; ++k) {
                e.xat(i, k) += dt * e.vat(i, k);
                e.vat(i, k) += dt * dv[static_cast<std::size_t>(i) * d + k];
            }
        }
    }
    for (std::size_t i = 0; i < e.x.size(); ++i) {
        if (!std::isfinite(e.x[i]) || !std::isfinite(e.v[i]))
            throw blowup_error("time stepping produced a non-finite state for particle "
                                   + std::to_string(i / static_cast<std::size_t>(d))
                                   + " at t = " + std::to_string(e.t),
                               static_cast<int>(i / static_cast<std::size_t>(d)), e.t);
    }
    e.t = t0 + tau;
}

} // namespace detail

namespace {

std::vector<int> all_indices(int n)
{
    std::vector<int> idx(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        idx[static_cast<std::size_t>(i)] = i;
    return idx;
}

void check_batch_indices(const Batch& batch, int n)
{
    if (batch.p() < 2)
        throw std::domain_error("batch_rhs: batch must have p >= 2 members");
    for (std::size_t a = 0; a < batch.indices.size(); ++a) {
        const int i = batch.indices[a];
        if (i < 0 || i >= n)
            throw std::domain_error("batch_rhs: index out of range");
        if (a > 0 && batch.indices[a] == batch.indices[a - 1])
            throw std::domain_error("batch_rhs: duplicate index in batch");
    }
}

} // namespace

Derivative full_rhs(const Ensemble& e, const Kernel& kernel, double kappa)
{
    if (e.n < 2)
        throw std::domain_error("full_rhs: needs N >= 2 particles");
    Derivative deriv(e.n, e.d);
    deriv.dx = e.v;
    const std::vector<int> idx = all_indices(e.n);
    detail::batch_dv(e, idx, kernel, kappa, deriv.dv.data());
    return deriv;
}

Derivative batch_rhs(const Ensemble& e, const Batch& batch, const Kernel& kernel, double kappa)
{
    // sorted-input check doubles as the duplicate check
    Batch sorted = batch;
    std::sort(sorted.indices.begin(), sorted.indices.end());
    check_batch_indices(sorted, e.n);

    Derivative deriv(e.n, e.d);
    const int m = sorted.p();
    std::vector<double> dv_local(static_cast<std::size_t>(m) * e.d, 0.0);
    detail::batch_dv(e, sorted.indices, kernel, kappa, dv_local.data());
    for (int a = 0; a < m; ++a) {
        const int i = sorted.indices[static_cast<std::size_t>(a)];
        for (int k = 0; k < e.d; ++k) {
            deriv.dx[static_cast<std::size_t>(i) * e.d + k] = e.vat(i, k);
            deriv.dv[static_cast<std::size_t>(i) * e.d + k]
                = dv_local[static_cast<std::size_t>(a) * e.d + k];
        }
    }
    return deriv;
}

Ensemble euler_substep(const Ensemble& e, const RhsFn& deriv_fn, double dt)
{
    if (!(dt > 0.0))
        throw std::domain_error("euler_substep: dt must be > 0");
    const Derivative deriv = deriv_fn(e);
    Ensemble out = e;
    for (int i = 0; i < e.n; ++i) {
        for (int k = 0; k < e.d; ++k) {
            out.xat(i, k) += dt * deriv.dx[static_cast<std::size_t>(i) * e.d + k];
            out.vat(i, k) += dt * deriv.dv[static_cast<std::size_t>(i) * e.d + k];
            if (!std::isfinite(out.xat(i, k)) || !std::isfinite(out.vat(i, k)))
                throw blowup_error("euler_substep: non-finite state for particle "
                                       + std::to_string(i) + " at t = " + std::to_string(out.t),
                                   i, out.t);
        }
    }
    out.t = e.t + dt;
    return out;
}

int substep_count(double tau, double dt)
{
    if (!(dt > 0.0) || !(tau > 0.0) || dt > tau * (1.0 + 1e-9))
        throw config_error("integrate_interval: requires 0 < dt <= tau");
    const long long n_sub = std::llround(tau / dt);
    if (n_sub < 1 || std::abs(static_cast<double>(n_sub) * dt - tau) > 1e-9 * tau)
        throw config_error("integrate_interval: tau must be an integer multiple of dt");
    return static_cast<int>(n_sub);
}

Ensemble integrate_interval(Ensemble e, const RhsFn& deriv_fn, double tau, double dt)
{
    const int n_sub = substep_count(tau, dt);
    const double t0 = e.t;
    for (int s = 0; s < n_sub; ++s)
        e = euler_substep(e, deriv_fn, dt);
    e.t = t0 + tau;
    return e;
}

} // namespace rbmcs
