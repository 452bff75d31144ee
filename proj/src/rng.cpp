#include "rbmcs/rng.hpp"

#include <stdexcept>

namespace rbmcs {

namespace {

constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

// splitmix64 finalizer; passes BigCrush when driven by a Weyl sequence.
std::uint64_t mix64(std::uint64_t z)
{
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
}

} // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id)
{
    state_ = mix64(seed ^ kGamma);
    state_ = mix64(state_ + mix64(stream_id + 0xbf58476d1ce4e5b9ULL));
}

std::uint64_t RngStream::next_u64()
{
    state_ += kGamma;
    return mix64(state_);
}

double RngStream::uniform()
{
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double lo, double hi)
{
    return lo + (hi - lo) * uniform();
}

std::uint64_t RngStream::uniform_below(std::uint64_t n)
{
    if (n == 0)
        throw std::invalid_argument("uniform_below: n must be >= 1");
    const std::uint64_t threshold = (0ULL - n) % n; // 2^64 mod n
    for (;;) {
        const std::uint64_t r = next_u64();
        if (r >= threshold)
            return r % n;
    }
}

} // namespace rbmcs
