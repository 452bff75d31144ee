#pragma once

#include <cstddef>
#include <vector>

namespace rbmcs {

/// N x d positions and velocities at one time instant.  Row-major layout,
/// value semantics; a run owns exactly one and hands out copies.
struct Ensemble {
    int n = 0;
    int d = 0;
    double t = 0.0;
    std::vector<double> x; // n*d
    std::vector<double> v; // n*d

    Ensemble() = default;
    Ensemble(int n_, int d_)
        : n(n_), d(d_), x(static_cast<std::size_t>(n_) * d_, 0.0),
          v(static_cast<std::size_t>(n_) * d_, 0.0)
    {
    }

    double& xat(int i, int k) { return x[static_cast<std::size_t>(i) * d + k]; }
    double xat(int i, int k) const { return x[static_cast<std::size_t>(i) * d + k]; }
    double& vat(int i, int k) { return v[static_cast<std::size_t>(i) * d + k]; }
    double vat(int i, int k) const { return v[static_cast<std::size_t>(i) * d + k]; }

    bool finite() const;
};

/// Return carrier for RHS evaluations; shapes match the source ensemble.
struct Derivative {
    int n = 0;
    int d = 0;
    std::vector<double> dx;
    std::vector<double> dv;

    Derivative() = default;
    Derivative(int n_, int d_)
        : n(n_), d(d_), dx(static_cast<std::size_t>(n_) * d_, 0.0),
          dv(static_cast<std::size_t>(n_) * d_, 0.0)
    {
    }
};

} // namespace rbmcs
