#pragma once

#include "rbmcs/config.hpp"
#include "rbmcs/dynamics.hpp"
#include "rbmcs/ledger.hpp"
#include "rbmcs/metrics.hpp"
#include "rbmcs/rng.hpp"
#include "rbmcs/sampling.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace rbmcs {

/// Full system advanced by one window of length tau (Euler sub-steps of dt).
void step_ips(Ensemble& e, const Kernel& kernel, double kappa, double tau, double dt);

/// Random equal partition; every batch subsystem advanced independently over
/// the window with coefficient kappa/(p-1).  Requires p | N.
void step_rbm1(Ensemble& e, RngStream& rng, const Kernel& kernel, double kappa,
               int p, double tau, double dt, SelectionLedger* ledger = nullptr);

/// One random batch per window; only its members move, everyone else is
/// bit-identical across the window.  The trajectory clock advances by tau per
/// step; comparисоns against the full system use the (N/p) t effective-time map.
void step_rbmr(Ensemble& e, RngStream& rng, BatchSampler& sampler, const Kernel& kernel,
               double kappa, int p, double tau, double dt, SelectionLedger* ledger = nullptr);

/// N/p sequential random batches, each advanced over the same window, so the
/// wall clock matches the full system.  Requires p | N.
void step_rbmr_equiv(Ensemble& e, RngStream& rng, BatchSampler& sampler, const Kernel& kernel,
                     double kappa, int p, double tau, double dt, SelectionLedger* ledger = nullptr);

/// Direct Monte Carlo: every particle draws its own p-1 neighbors for the
/// window; all derivatives are evaluated at the current state and all
/// particles update simultaneously.  Does not conserve momentum in general.
void step_mc(Ensemble& e, RngStream& rng, const Kernel& kernel, double kappa,
             int p, double tau, double dt);

/// Maps a window count and config to the raw-clock time of the batch
/// trajectory that corresponds to full-system time t (RBM-r runs (N/p) times
/// "longer" on its own clock).
double effective_time_factor(int n, int p);

struct RunResult {
    MetricsSeries metrics;
    SelectionLedger ledger;
    std::vector<Ensemble> snapshots; // window-boundary states (always kept for method ips)
};

/// Advances config.method from t = 0 to t_end, recording metrics at every
/// window boundary.  Batch draws come from (config.seed, stream); the
/// initial data always comes from stream 0, so runs with different stream
/// values share initial data.  When a reference trajectory (window-boundary
/// snapshots of the full system) is given, the l2 velocity error is recorded
/// at every aligned time; otherwise the column is NaN.
RunResult run(const SimConfig& config, std::uint64_t stream = 1,
              const std::vector<Ensemble>* reference = nullptr);

/// The coupled triple: batch trajectory, full system, and N time-changed
/// copies of the full system where copy i advances only while i is selected.
struct TripleState {
    Ensemble rbmr;
    Ensemble ips;
    std::vector<Ensemble> ips_prime;
    SelectionLedger ledger;
};

struct TripleResult {
    // recorded at every raw step boundary
    std::vector<double> t_raw;
    std::vector<double> mean_w_v_sq;  // (1/N) sum_i |rbmr.v^i - ips_prime[i].v^i|^2
    std::vector<double> max_abs_w_v;
    std::vector<double> mean_eta;
    // recorded every N/p raw steps, where raw and full clocks align
    std::vector<double> t_effective;
    std::vector<double> step2_rms;    // rms_i |ips_prime[i].v^i - ips.v^i|
    // worst momentum drift seen over the whole run, per system
    double momentum_drift_rbmr = 0.0;
    double momentum_drift_ips = 0.0;
    double momentum_drift_ips_prime = 0.0;
    SelectionLedger ledger;
};

/// Runs the triple over config.t_end of raw time with a shared batch-draw
/// stream.  Requires p | N and N <= config.triple_n_guard.
TripleResult run_triple(const SimConfig& config, std::uint64_t stream = 1);

} // namespace rbmcs
