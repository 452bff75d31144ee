#pragma once

#include "rbmcs/rng.hpp"

#include <vector>

namespace rbmcs {

/// Sorted, distinct particle indices drawn as one interaction batch.
struct Batch {
    std::vector<int> indices;

    int p() const { return static_cast<int>(indices.size()); }
};

/// Disjoint equal-size batches covering {0, ..., n-1}.
struct Partition {
    std::vector<Batch> batches;
    int n = 0;
};

/// Uniform draw over all C(n, p) subsets of size p.  2 <= p <= n.
Batch sample_batch(RngStream& rng, int n, int p);

/// Uniform random equal partition into n/p batches (uniform shuffle chopped
/// into consecutive blocks).  Requires p | n, p >= 2.
Partition sample_partition(RngStream& rng, int n, int p);

/// p-1 distinct indices excluding i, uniform over such sets, sorted.
std::vector<int> sample_mc_neighbors(RngStream& rng, int n, int p, int i);

/// The law of the per-particle selection count after n_steps single-batch
/// draws: Binomial(n_steps, ratio) with ratio = p/N.
struct BinomialLaw {
    long n_steps = 0;
    double ratio = 0.0;

    double mean() const { return static_cast<double>(n_steps) * ratio; }
    double variance() const { return static_cast<double>(n_steps) * ratio * (1.0 - ratio); }
};

BinomialLaw selection_count_law(long n_steps, double ratio);

/// Reusable partial Fisher-Yates sampler: O(p) per draw after one O(n)
/// setup, producing exactly the same draws as sample_batch given the same
/// generator state.
class BatchSampler {
public:
    explicit BatchSampler(int n);

    /// Fills out with p sorted distinct indices.
    void draw(RngStream& rng, int p, std::vector<int>& out);

    int n() const { return static_cast<int>(perm_.size()); }

private:
    std::vector<int> perm_;  // kept as the identity permutation between draws
    std::vector<int> swaps_; // swap targets recorded for the undo pass
};

} // namespace rbmcs
