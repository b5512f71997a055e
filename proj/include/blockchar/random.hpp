#pragma once

// Seedable, reproducible random source.
//
// Engine: std::mt19937_64, whose output sequence is fixed by the C++
// standard. Bounded integers use Lemire's multiply-and-reject reduction and
// doubles take the top 53 bits, so draws are identical on every platform
// (unlike the implementation-defined std:: distributions).

#include <cstdint>
#include <random>

namespace blockchar {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform integer in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound);
    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

/// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Seed of replicate `index` within a batch seeded by `seed`: the batch seed
/// xor-ed with the index, passed through splitmix64.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) { return mix64(seed ^ mix64(index)); }

}  // namespace blockchar
