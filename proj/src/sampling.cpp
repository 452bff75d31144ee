#include "rbmcs/sampling.hpp"

#include "rbmcs/errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace rbmcs {

BatchSampler::BatchSampler(int n) : perm_(static_cast<std::size_t>(n))
{
    if (n < 2)
        throw std::domain_error("BatchSampler: n must be >= 2");
    std::iota(perm_.begin(), perm_.end(), 0);
}

void BatchSampler::draw(RngStream& rng, int p, std::vector<int>& out)
{
    const int n = this->n();
    if (p < 2 || p > n)
        throw std::domain_error("sample_batch: requires 2 <= p <= n");

    swaps_.resize(static_cast<std::size_t>(p));
    out.resize(static_cast<std::size_t>(p));
    for (int k = 0; k < p; ++k) {
        const int j = k + static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(n - k)));
        std::swap(perm_[k], perm_[j]);
        swaps_[k] = j;
        out[static_cast<std::size_t>(k)] = perm_[k];
    }
    // undo in reverse so perm_ is the identity again
    for (int k = p - 1; k >= 0; --k)
        std::swap(perm_[k], perm_[swaps_[k]]);
    std::sort(out.begin(), out.end());
}

Batch sample_batch(RngStream& rng, int n, int p)
{
    BatchSampler sampler(n);
    Batch batch;
    sampler.draw(rng, p, batch.indices);
    return batch;
}

Partition sample_partition(RngStream& rng, int n, int p)
{
    if (p < 2)
        throw std::domain_error("sample_partition: p must be >= 2");
    if (n % p != 0)
        throw config_error("sample_partition: p must divide n");

    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (int k = 0; k < n - 1; ++k) {
        const int j = k + static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(n - k)));
        std::swap(perm[k], perm[j]);
    }

    Partition part;
    part.n = n;
    part.batches.resize(static_cast<std::size_t>(n / p));
    for (int b = 0; b < n / p; ++b) {
        auto& idx = part.batches[static_cast<std::size_t>(b)].indices;
        idx.assign(perm.begin() + static_cast<std::ptrdiff_t>(b) * p,
                   perm.begin() + static_cast<std::ptrdiff_t>(b + 1) * p);
        std::sort(idx.begin(), idx.end());
    }
    return part;
}

std::vector<int> sample_mc_neighbors(RngStream& rng, int n, int p, int i)
{
    if (p < 2 || p > n)
        throw std::domain_error("sample_mc_neighbors: requires 2 <= p <= n");
    if (i < 0 || i >= n)
        throw std::domain_error("sample_mc_neighbors: index out of range");

    // partial Fisher-Yates over the n-1 candidates != i
    std::vector<int> cand(static_cast<std::size_t>(n - 1));
    for (int k = 0; k < n - 1; ++k)
        cand[static_cast<std::size_t>(k)] = (k < i) ? k : k + 1;
    const int m = p - 1;
    std::vector<int> out(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        const int j = k + static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(n - 1 - k)));
        std::swap(cand[k], cand[j]);
        out[static_cast<std::size_t>(k)] = cand[k];
    }
    std::sort(out.begin(), out.end());
    return out;
}

BinomialLaw selection_count_law(long n_steps, double ratio)
{
    if (n_steps < 0)
        throw std::domain_error("selection_count_law: n_steps must be >= 0");
    if (!(ratio > 0.0) || ratio > 1.0)
        throw std::domain_error("selection_count_law: ratio must lie in (0, 1]");
    return BinomialLaw{n_steps, ratio};
}

} // namespace rbmcs
