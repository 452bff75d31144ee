#pragma once

#include "rbmcs/ensemble.hpp"
#include "rbmcs/kernel.hpp"

#include <cstdint>
#include <string>

namespace rbmcs {

enum class MethodKind { ips, rbm1, rbmr, rbmr_equiv, mc };

std::string method_name(MethodKind method);
MethodKind parse_method(const std::string& name);

struct InitSpec {
    double box_length = 1.0;     // positions uniform on [0, L]^d
    double velocity_range = 1.0; // velocities uniform on [-range, range]^d, then mean-subtracted
};

/// One simulation run.  Stream 0 of `seed` generates the initial data;
/// stream 1+rep drives the batch draws of replication rep, so every method
/// and replication shares the same initial ensemble.
struct SimConfig {
    int n = 64;
    int d = 1;
    int p = 2;
    double tau = 0.1;
    double dt = 0.1;
    double kappa = 1.0;
    Kernel kernel = Kernel::inverse_power(0.25);
    MethodKind method = MethodKind::rbmr_equiv;
    double t_end = 10.0;
    std::uint64_t seed = 0;
    int replications = 1;
    InitSpec init;
    std::string out_dir = "out";
    bool record_snapshots = false;
    int triple_n_guard = 512; // largest N allowed to carry N+2 ensembles

    long windows() const;

    /// Throws config_error naming the violated invariant.
    void validate() const;
};

/// Parses a key = value config file with [section] headers.  Unknown keys
/// are rejected.  CLI flags are expected to override the parsed values.
SimConfig load_config_file(const std::string& path);

/// Parses "constant:V" or "invpow:BETA".
Kernel parse_kernel_spec(const std::string& spec);

/// Deterministic initial data drawn from stream 0 of config.seed.
Ensemble initial_ensemble(const SimConfig& config);

} // namespace rbmcs
