#pragma once

#include "rbmcs/ensemble.hpp"

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace rbmcs {

/// Scaled sum of squared differences (1/N^2) sum_{i,j} |u^i - u^j|^2,
/// evaluated through the mean-centering identity 2((1/N) sum |u^i|^2 - |mean|^2).
double ssd(std::span<const double> values, int n, int d);

double ssd_v(const Ensemble& e);
double ssd_x(const Ensemble& e);

/// Maximal pairwise Euclidean distances (d_x, d_v).
std::pair<double, double> diameters(const Ensemble& e);

/// sum_i v^i, one component per dimension.
std::vector<double> momentum(const Ensemble& e);

/// sum_i |v^i|^2.
double energy(const Ensemble& e);

/// Root-mean-square per-particle velocity error
/// sqrt((1/N) sum_i |v_approx^i - v_ref^i|^2).  Requires matching shapes and
/// time stamps aligned within 1e-9.
double l2_error(const Ensemble& approx, const Ensemble& reference);

/// sqrt(1 - p/n + 1/(p-1) - 1/(n-1)), the batch-with-replacement error scale.
double scale_rbmr(int n, int p);

/// sqrt(1/(p-1) - 1/(n-1)), the partitioned-batch error scale (0 when p = n).
double scale_rbm1(int n, int p);

struct RateConstants {
    double c1 = 0.0; // 2 psi0 / (1 + (2p/(p-1)) psi0 tau)
    double c2 = 0.0; // psi0 (1 - psi0 tau)
    double c3 = 0.0; // min(c1, 2 c2)
    bool tau_warning = false; // psi0 * tau >= 1 makes c2 <= 0 and c3 vacuous
};

RateConstants rate_constants(double psi0, int p, double tau);

/// Least-squares decay rate: fits y ~ y0 exp(-lambda t) on log scale and
/// returns lambda.  Points with y < 1e-12 * y(0) are excluded so the
/// floating-point floor does not pollute the fit.
double fit_decay_rate(std::span<const double> t, std::span<const double> y);

/// Time-indexed diagnostics recorded once per window.
struct MetricsSeries {
    int d = 1;
    std::vector<double> t;
    std::vector<double> ssd_v;
    std::vector<double> ssd_x;
    std::vector<double> d_x;
    std::vector<double> d_v;
    std::vector<double> momentum; // row-major, d entries per time
    std::vector<double> energy;
    std::vector<double> l2;       // NaN when no reference is attached

    std::size_t rows() const { return t.size(); }
    void append(const Ensemble& e, double l2_value);
};

} // namespace rbmcs
