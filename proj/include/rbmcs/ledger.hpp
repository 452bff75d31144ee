#pragma once

#include <vector>

namespace rbmcs {

/// Per-particle selection bookkeeping: how often each index has entered a
/// batch (eta), the accumulated time it spent selected (t_selected), and the
/// window indices of its selections (zeta).
struct SelectionLedger {
    std::vector<long> eta;
    std::vector<double> t_selected;
    std::vector<std::vector<long>> zeta;
    long steps = 0;

    void init(int n)
    {
        eta.assign(static_cast<std::size_t>(n), 0);
        t_selected.assign(static_cast<std::size_t>(n), 0.0);
        zeta.assign(static_cast<std::size_t>(n), {});
        steps = 0;
    }

    void record(const std::vector<int>& batch, double tau)
    {
        for (int i : batch) {
            ++eta[static_cast<std::size_t>(i)];
            t_selected[static_cast<std::size_t>(i)] += tau;
            zeta[static_cast<std::size_t>(i)].push_back(steps);
        }
        ++steps;
    }
};

} // namespace rbmcs
