#pragma once

#include "rbmcs/ensemble.hpp"
#include "rbmcs/kernel.hpp"
#include "rbmcs/sampling.hpp"

#include <functional>
#include <span>

namespace rbmcs {

using RhsFn = std::function<Derivative(const Ensemble&)>;

/// Full pairwise alignment force: dx = v and
/// dv^i = (kappa/(N-1)) sum_j psi(|x^j - x^i|) (v^j - v^i).
/// Pairs are accumulated once with +/- contributions, so the sum of dv over
/// all particles cancels pairwise.
Derivative full_rhs(const Ensemble& e, const Kernel& kernel, double kappa);

/// Same force restricted to a batch with coefficient kappa/(p-1);
/// particles outside the batch get zero derivative.
Derivative batch_rhs(const Ensemble& e, const Batch& batch, const Kernel& kernel, double kappa);

/// One explicit Euler step: derivative evaluated at the pre-step state,
/// x <- x + dt dx, v <- v + dt dv, t <- t + dt.
Ensemble euler_substep(const Ensemble& e, const RhsFn& deriv_fn, double dt);

/// Number of Euler sub-steps covering tau; throws config_error unless tau is
/// an integer multiple of dt within 1e-9 relative tolerance.
int substep_count(double tau, double dt);

/// Applies substep_count(tau, dt) Euler sub-steps; final t = initial t + tau.
Ensemble integrate_interval(Ensemble e, const RhsFn& deriv_fn, double tau, double dt);

namespace detail {

/// Accumulates the batch velocity derivative (coefficient kappa/(m-1)) for
/// the m indices in idx into dv_local (m x d, zeroed by the caller).  This is
/// the one pairwise loop every stepper shares; advancing a batch that
/// contains all indices therefore reproduces the full dynamics bit-for-bit.
void batch_dv(const Ensemble& e, std::span<const int> idx, const Kernel& kernel,
              double kappa, double* dv_local);

/// Euler sub-steps the particles in idx over [t, t+tau] in place, leaving
/// everything else untouched.  Throws blowup_error on non-finite results.
void advance_batch(Ensemble& e, std::span<const int> idx, const Kernel& kernel,
                   double kappa, double tau, double dt);

/// Euler sub-steps all particles over a frozen interaction network:
/// particle i couples to its own neighbor list (coefficient kappa/(p-1),
/// p-1 = neighbors per particle).  All derivatives are evaluated at the
/// current state, then all particles update simultaneously.
void advance_frozen_network(Ensemble& e, const std::vector<int>& neighbors,
                            int neighbors_per_particle, const Kernel& kernel,
                            double kappa, double tau, double dt);

} // namespace detail

} // namespace rbmcs
