#pragma once

// Philox4x32-10 counter-based generator. Output depends only on
// (key, counter), so any draw can be recomputed without replaying a stream.

#include <array>
#include <cstdint>

namespace chilab::rng {

using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

constexpr PhiloxCounter philox4x32(PhiloxCounter ctr, PhiloxKey key) noexcept {
    constexpr std::uint32_t kMul0 = 0xD2511F53;
    constexpr std::uint32_t kMul1 = 0xCD9E8D57;
    constexpr std::uint32_t kWeyl0 = 0x9E3779B9;
    constexpr std::uint32_t kWeyl1 = 0xBB67AE85;
    for (int round = 0; round < 10; ++round) {
        const std::uint64_t p0 = std::uint64_t{kMul0} * ctr[0];
        const std::uint64_t p1 = std::uint64_t{kMul1} * ctr[2];
        ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0], static_cast<std::uint32_t>(p1),
               static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1], static_cast<std::uint32_t>(p0)};
        key[0] += kWeyl0;
        key[1] += kWeyl1;
    }
    return ctr;
}

constexpr PhiloxKey make_key(std::uint64_t seed) noexcept {
    return {static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
}

/// 128 random bits for block `index` of stream `stream` under `seed`.
constexpr PhiloxCounter block(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) noexcept {
    return philox4x32({static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                       static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)},
                      make_key(seed));
}

/// Sequential view over one (seed, stream): draw i comes from block i/2.
class CounterStream {
  public:
    CounterStream(std::uint64_t seed, std::uint64_t stream, std::uint64_t start = 0) noexcept
        : seed_(seed), stream_(stream), next_(start * 2) {}

    std::uint64_t next_u64() noexcept {
        const std::uint64_t draw = next_++;
        if ((draw & 1) == 0 || draw / 2 != cached_index_ || !cached_) {
            cache_ = block(seed_, stream_, draw / 2);
            cached_index_ = draw / 2;
            cached_ = true;
        }
        const std::size_t half = (draw & 1) * 2;
        return std::uint64_t{cache_[half]} | (std::uint64_t{cache_[half + 1]} << 32);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_unit() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound), unbiased (rejection on the top range).
    std::uint64_t next_below(std::uint64_t bound) noexcept {
        if (bound <= 1) return 0;
        const std::uint64_t limit = -bound % bound;  // 2^64 mod bound
        for (;;) {
            const std::uint64_t v = next_u64();
            if (v >= limit) return v % bound;
        }
    }

  private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t next_;
    PhiloxCounter cache_{};
    std::uint64_t cached_index_ = 0;
    bool cached_ = false;
};

/// Derives an independent 64-bit seed for child `index` of `master`.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t domain, std::uint64_t index) noexcept {
    const auto b = philox4x32({static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                               static_cast<std::uint32_t>(domain), 0x5eed5eedu},
                              make_key(master));
    return std::uint64_t{b[0]} | (std::uint64_t{b[1]} << 32);
}

}  // namespace chilab::rng
