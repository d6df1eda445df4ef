#pragma once

#include <cstdint>

namespace hasse {

// splitmix64: small deterministic generator for factorization and group
// sampling. Seeded explicitly so results are reproducible; callers that
// canonicalize their output are seed-independent.
class Rng {
public:
    static constexpr std::uint64_t kDefaultSeed = 0x9e3779b97f4a7c15ull;

    explicit Rng(std::uint64_t seed = kDefaultSeed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n), n > 0.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

private:
    std::uint64_t state_;
};

} // namespace hasse
