#pragma once

#include <array>
#include <cstdint>

namespace recf {

// splitmix64 state expander (Steele, Lea & Flood). Used only to spread one
// 64-bit seed into the generator state below. Constants:
// 0x9e3779b97f4a7c15, 0xbf58476d1ce4e5b9, 0x94d049bb133111eb.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

// xoshiro256++ (Blackman & Vigna), a shift-register generator with rotations
// (23, 45) and shift 17. Every simulation in this project draws uniforms from
// this generator and maps them through inverse CDFs, so a (seed, draws) pair
// pins the output exactly.
class Xoshiro256PlusPlus {
public:
    explicit Xoshiro256PlusPlus(std::uint64_t seed) noexcept {
        SplitMix64 sm(seed);
        for (auto& word : state_) word = sm.next();
    }

    std::uint64_t next() noexcept {
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

    // Uniform draw strictly inside (0, 1): top 53 bits offset by half an ulp,
    // so 0 and 1 are unreachable and inverse-CDF transforms stay in-domain.
    double next_uniform() noexcept {
        return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) noexcept {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> state_{};
};

} // namespace recf
