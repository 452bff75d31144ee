#pragma once

#include <vector>

namespace rbmcs {

enum class KernelVariant { constant, inverse_power, tabulated };

/// Communication weight psi: nonnegative, bounded, Lipschitz, nonincreasing.
/// Immutable after construction; safe to share between threads.
///
/// psi0() is the certified lower bound (0 only for kernels that decay to 0
/// on unbounded support, e.g. inverse_power with beta > 0), psi_max() the
/// upper bound, lip() a Lipschitz constant.
class Kernel {
public:
    static Kernel constant(double value);

    /// psi(r) = (1 + r^2)^(-beta), beta >= 0.
    static Kernel inverse_power(double beta);

    /// Piecewise-linear kernel on an ascending grid; clamps to the first /
    /// last value outside the grid (monotone-preserving extension).
    static Kernel tabulated(std::vector<double> grid, std::vector<double> values);

    double operator()(double r) const;

    KernelVariant variant() const { return variant_; }
    double psi0() const { return psi0_; }
    double psi_max() const { return psi_max_; }
    double lip() const { return lip_; }

    /// Constant value or exponent, depending on the variant.
    double param() const { return param_; }

private:
    Kernel() = default;

    KernelVariant variant_ = KernelVariant::constant;
    double param_ = 1.0; // value (constant) or beta (inverse_power)
    std::vector<double> grid_;
    std::vector<double> values_;
    double psi0_ = 0.0;
    double psi_max_ = 0.0;
    double lip_ = 0.0;
};

struct ValidationReport {
    double min_value = 0.0;
    double max_value = 0.0;
    double lip_estimate = 0.0;       // max observed |psi(r+h)-psi(r)|/h, floored by Kernel::lip
    double lower_bound_at_rmax = 0.0; // effective lower bound over [0, r_max]
    bool monotone = true;
};

/// Numerically certifies the kernel assumptions on [0, r_max] with n_grid
/// sample points.  A monotonicity violation sets the flag (no exception);
/// a NaN evaluation throws.
ValidationReport validate(const Kernel& kernel, double r_max, int n_grid);

} // namespace rbmcs
