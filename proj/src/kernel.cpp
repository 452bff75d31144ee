#include "rbmcs/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace rbmcs {

Kernel Kernel::constant(double value)
{
    if (!(value >= 0.0) || !std::isfinite(value))
        throw std::domain_error("Kernel::constant: value must be finite and >= 0");
    Kernel k;
    k.variant_ = KernelVariant::constant;
    k.param_ = value;
    k.psi0_ = value;
    k.psi_max_ = value;
    k.lip_ = 0.0;
    return k;
}

Kernel Kernel::inverse_power(double beta)
{
    if (!(beta >= 0.0) || !std::isfinite(beta))
        throw std::domain_error("Kernel::inverse_power: beta must be finite and >= 0");
    Kernel k;
    k.variant_ = KernelVariant::inverse_power;
    k.param_ = beta;
    k.psi0_ = (beta == 0.0) ? 1.0 : 0.0; // decays to 0 on unbounded support
    k.psi_max_ = 1.0;
    if (beta == 0.0) {
        k.lip_ = 0.0;
    } else {
        // sup |psi'| attained at r^2 = 1/(2 beta + 1)
        const double b = beta;
        k.lip_ = 2.0 * b * std::pow(2.0 * b + 1.0, b + 0.5) / std::pow(2.0 * b + 2.0, b + 1.0);
    }
    return k;
}

Kernel Kernel::tabulated(std::vector<double> grid, std::vector<double> values)
{
    if (grid.size() != values.size() || grid.size() < 2)
        throw std::domain_error("Kernel::tabulated: grid and values need matching size >= 2");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!std::isfinite(grid[i]) || !std::isfinite(values[i]) || values[i] < 0.0)
            throw std::domain_error("Kernel::tabulated: entries must be finite, values >= 0");
        if (i > 0 && !(grid[i] > grid[i - 1]))
            throw std::domain_error("Kernel::tabulated: grid must be strictly ascending");
    }
    if (grid.front() < 0.0)
        throw std::domain_error("Kernel::tabulated: grid must start at r >= 0");

    Kernel k;
    k.variant_ = KernelVariant::tabulated;
    k.psi0_ = *std::min_element(values.begin(), values.end());
    k.psi_max_ = *std::max_element(values.begin(), values.end());
    // exact Lipschitz constant of the piecewise-linear interpolant
    double lip = 0.0;
    for (std::size_t i = 1; i < grid.size(); ++i)
        lip = std::max(lip, std::abs(values[i] - values[i - 1]) / (grid[i] - grid[i - 1]));
    k.lip_ = lip;
    k.grid_ = std::move(grid);
    k.values_ = std::move(values);
    return k;
}

double Kernel::operator()(double r) const
{
    if (!(r >= 0.0) || !std::isfinite(r))
        throw std::domain_error("Kernel::eval: r must be finite and >= 0");
    switch (variant_) {
    case KernelVariant::constant:
        return param_;
    case KernelVariant::inverse_power:
        return std::pow(1.0 + r * r, -param_);
    case KernelVariant::tabulated: {
        if (r <= grid_.front())
            return values_.front();
        if (r >= grid_.back())
            return values_.back();
        const auto it = std::upper_bound(grid_.begin(), grid_.end(), r);
        const std::size_t hi = static_cast<std::size_t>(it - grid_.begin());
        const std::size_t lo = hi - 1;
        const double w = (r - grid_[lo]) / (grid_[hi] - grid_[lo]);
        return values_[lo] + w * (values_[hi] - values_[lo]);
    }
    }
    return 0.0; // unreachable
}

ValidationReport validate(const Kernel& kernel, double r_max, int n_grid)
{
    if (!(r_max > 0.0))
        throw std::domain_error("validate: r_max must be > 0");
    if (n_grid < 2)
        throw std::domain_error("validate: n_grid must be >= 2");

    ValidationReport rep;
    rep.min_value = std::numeric_limits<double>::infinity();
    rep.max_value = -std::numeric_limits<double>::infinity();

    const double h = r_max / (n_grid - 1);
    double prev = 0.0;
    double fd_max = 0.0;
    for (int i = 0; i < n_grid; ++i) {
        const double r = (i == n_grid - 1) ? r_max : i * h;
        const double value = kernel(r);
        if (std::isnan(value))
            throw std::runtime_error("validate: kernel evaluated to NaN");
        rep.min_value = std::min(rep.min_value, value);
        rep.max_value = std::max(rep.max_value, value);
        if (i > 0) {
            if (value > prev + 1e-15 * std::max(1.0, std::abs(prev)))
                rep.monotone = false;
            fd_max = std::max(fd_max, std::abs(value - prev) / h);
        }
        prev = value;
    }
    // floor the finite-difference estimate by the certified constant so the
    // reported value really dominates arbitrary divided differences
    rep.lip_estimate = std::max(fd_max, kernel.lip());
    rep.lower_bound_at_rmax = kernel(r_max);
    return rep;
}

} // namespace rbmcs
