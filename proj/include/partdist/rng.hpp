#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace partdist {

/// SplitMix64 (Steele, Lea, Flood). Used only to expand seeds.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t state) : state_(state) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

/// xoshiro256** 1.0 (Blackman, Vigna).
///
/// Stream (seed, stream) is seeded with four consecutive SplitMix64 outputs
/// from the state  seed ^ splitmix(stream + 0x632BE59BD9B4E019). This
/// derivation is part of the output format: changing it changes every
/// sampler result for a given seed.
class Xoshiro256 {
public:
    using result_type = std::uint64_t;

    explicit Xoshiro256(std::uint64_t seed, std::uint64_t stream = 0)
    {
        SplitMix64 mixer(seed ^ SplitMix64(stream + 0x632BE59BD9B4E019ULL).next());
        for (auto& word : s_) {
            word = mixer.next();
        }
    }

    /// Raw state, for known-answer tests.
    static Xoshiro256 from_state(const std::array<std::uint64_t, 4>& state)
    {
        Xoshiro256 out(0);
        for (std::size_t k = 0; k < 4; ++k) {
            out.s_[k] = state[k];
        }
        return out;
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() { return next(); }

    std::uint64_t next()
    {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Unbiased integer in [0, bound) by Lemire's multiply-and-reject. bound > 0.
    std::uint64_t bounded(std::uint64_t bound)
    {
        std::uint64_t x = next();
        __uint128_t m = static_cast<__uint128_t>(x) * bound;
        auto low = static_cast<std::uint64_t>(m);
        if (low < bound) {
            const std::uint64_t threshold = (0 - bound) % bound;
            while (low < threshold) {
                x = next();
                m = static_cast<__uint128_t>(x) * bound;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t s_[4] = {};
};

} // namespace partdist
