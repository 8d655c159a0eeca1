#pragma once

#include <cstdint>

namespace dcq {

/// SplitMix64 step; also the seeding mixer recommended for xoshiro.
inline std::uint64_t splitmix64(std::uint64_t& state) noexcept {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// xoshiro256++ seeded by hashing (seed, replica, index). Every (replica,
/// index) pair owns its own stream, so sampling is reproducible regardless
/// of thread count, scheduling, or how many draws a rejection loop burns.
class SubstreamRng {
  public:
    SubstreamRng(std::uint64_t seed, std::uint64_t replica, std::uint64_t index) noexcept {
        std::uint64_t h = seed;
        h = splitmix64(h) ^ (replica * 0x9e3779b97f4a7c15ULL);
        h = splitmix64(h) ^ (index * 0xd1b54a32d192ed03ULL);
        std::uint64_t sm = splitmix64(h);
        s_[0] = splitmix64(sm);
        s_[1] = splitmix64(sm);
        s_[2] = splitmix64(sm);
        s_[3] = splitmix64(sm);
        // xoshiro must not start from the all-zero state.
        if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 0x9e3779b97f4a7c15ULL;
    }

    std::uint64_t next_u64() noexcept {
        std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform on the open interval (0,1): never 0, never 1, so logs and
    /// tangents of it stay finite.
    double next_unit_open() noexcept {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Uniform on [0,1).
    double next_unit() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) noexcept {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t s_[4];
};

} // namespace dcq
