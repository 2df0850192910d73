#pragma once

#include <cstdint>
#include <string_view>

namespace momentum {

// Deterministic per-subsystem random stream (SplitMix64 core).
// Streams are derived from (run seed, stream label) so that extra draws in
// one subsystem never shift the sequence seen by another. This is what makes
// matched-seed A/B runs comparable: the spawner stream is identical across
// runs that only differ in, say, the auto-removal flag.
class RandomStream {
public:
    RandomStream() = default;

    RandomStream(std::uint64_t run_seed, std::string_view label)
        : state_(mix64(run_seed ^ fnv1a(label))) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * next_double();
    }

    // Uniform integer in [0, n). Multiply-shift bounding, no modulo bias.
    std::uint64_t next_below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    std::uint64_t state() const { return state_; }

    static constexpr std::uint64_t fnv1a(std::string_view s) {
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (char c : s) {
            h ^= static_cast<unsigned char>(c);
            h *= 0x00000100000001b3ull;
        }
        return h;
    }

private:
    static constexpr std::uint64_t mix64(std::uint64_t x) {
        x = (x ^ (x >> 33)) * 0xff51afd7ed558ccdull;
        x = (x ^ (x >> 33)) * 0xc4ceb9fe1a85ec53ull;
        return x ^ (x >> 33);
    }

    std::uint64_t state_ = 0x9e3779b97f4a7c15ull;
};

} // namespace momentum
