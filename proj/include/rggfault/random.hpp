#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>

namespace rggfault {

// SplitMix64 finalizer. Used both as a stand-alone mixing step when deriving
// substream keys and to expand a 64-bit key into engine state.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Counter-splittable random stream (xoshiro256++ core).
///
/// Streams are never split by jumping; instead each logical consumer derives
/// its own stream from a master seed and a key path, e.g.
/// `RandomStream::derive(seed, {trial, phase})`. Equal key paths give
/// bit-identical streams, so results do not depend on how work is scheduled
/// across threads.
class RandomStream {
public:
    RandomStream() : RandomStream(0) {}

    explicit RandomStream(std::uint64_t seed) {
        std::uint64_t s = seed;
        for (auto& w : state_) {
            s = mix64(s);
            w = s;
        }
        if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
    }

    /// Derive an independent substream from a master seed and a key path.
    static RandomStream derive(std::uint64_t master, std::initializer_list<std::uint64_t> path) {
        std::uint64_t h = mix64(master);
        for (std::uint64_t word : path) h = mix64(h ^ word);
        return RandomStream(h);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0,1): 53 random mantissa bits, never returns 1.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Bernoulli(p). Draws exactly one double.
    bool next_bernoulli(double p) { return next_double() < p; }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> state_{};
};

// Key-path phase tags for the per-trial substreams used by the estimators.
namespace stream_phase {
inline constexpr std::uint64_t kPoints = 0x706f696e74ULL;
inline constexpr std::uint64_t kFaults = 0x6661756c74ULL;
inline constexpr std::uint64_t kEdges = 0x6564676573ULL;
inline constexpr std::uint64_t kCount = 0x636f756e74ULL;
}  // namespace stream_phase

}  // namespace rggfault
