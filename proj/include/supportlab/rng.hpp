#pragma once

#include <array>
#include <cstdint>

namespace supportlab {

// Philox4x32-10 (Salmon et al., "Parallel random numbers: as easy as 1, 2, 3").
// Counter-based: output block i of key k is a pure function of (k, i), so
// streams are reproducible on every platform and can be split without
// sharing state.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) : key_(seed), stream_(stream) {}

    // Independent child stream. Same (parent, id) always yields the same child.
    Rng split(std::uint64_t id) const;

    std::uint32_t next_u32();
    std::uint64_t next_u64();
    // Uniform on [0, 1) with 53 random bits.
    double uniform();
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    bool coin() { return (next_u32() & 1u) != 0; }
    // Standard normal via Box-Muller on two uniforms. Implemented here instead
    // of std::normal_distribution so the sequence is identical across
    // standard-library implementations.
    double normal();

    std::uint64_t key() const { return key_; }

private:
    void refill();

    std::uint64_t key_;
    std::uint64_t stream_;
    std::uint64_t block_ = 0;
    std::array<std::uint32_t, 4> buffer_{};
    int used_ = 4;
    bool has_spare_normal_ = false;
    double spare_normal_ = 0.0;
};

}  // namespace supportlab
