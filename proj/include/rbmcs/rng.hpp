#pragma once

#include <cstdint>

namespace rbmcs {

/// Counter-style 64-bit generator with explicit (seed, stream) addressing.
///
/// Streams with distinct (seed, stream_id) are statistically independent;
/// identical addresses reproduce identical draws bit-for-bit.  Stream 0 is
/// reserved for initial data, stream 1+rep for the batch draws of
/// replication rep (see SimConfig).
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id);

    std::uint64_t next_u64();

    /// Uniform double in [0, 1), 53-bit resolution.
    double uniform();

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi);

    /// Unbiased uniform integer in [0, n), n >= 1.  Rejection sampled.
    std::uint64_t uniform_below(std::uint64_t n);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

private:
    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::uint64_t state_;
};

} // namespace rbmcs
