#pragma once

// Deterministic randomness for the Monte Carlo parts of the kernel.
//
// A SeedStream wraps std::mt19937_64, whose output sequence is fixed by the
// C++ standard, so results are reproducible across platforms.  Child streams
// are derived with the SplitMix64 finalizer.

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>

#include "segreta/kernel/ideal.hpp"

namespace segreta::kernel {

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

class SeedStream {
   public:
    explicit SeedStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const noexcept { return seed_; }
    std::mt19937_64& engine() noexcept { return engine_; }
    std::uint64_t next() { return engine_(); }

    /// Independent stream keyed by (seed, tag); does not advance this one.
    SeedStream derive(std::uint64_t tag) const { return SeedStream(splitmix64(seed_ ^ splitmix64(tag))); }

   private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

/// sum c_i F_i with c_i uniform in the field's sampling range; the zero
/// combination is redrawn.  All F_i must share one degree.
template <class F>
Polynomial<F> random_combination(std::span<const Polynomial<F>> generators, SeedStream& stream) {
    if (generators.empty()) throw std::invalid_argument("random_combination: no generators");
    const auto& ring = generators.front().ring();
    const auto d = generators.front().homogeneous_degree();
    for (const auto& g : generators)
        if (!d || g.homogeneous_degree() != d) throw std::invalid_argument("random_combination: generators of unequal degree");
    const auto& K = ring->field();
    constexpr int kMaxDraws = 64;
    for (int attempt = 0; attempt < kMaxDraws; ++attempt) {
        Polynomial<F> acc(ring);
        for (const auto& g : generators) acc = acc + g.scaled(K.random(stream.engine()));
        if (!acc.is_zero()) return acc;
    }
    throw std::runtime_error("random_combination: only zero combinations drawn");
}

template <class F>
Polynomial<F> random_combination(const Ideal<F>& I, SeedStream& stream) {
    return random_combination<F>(std::span<const Polynomial<F>>(I.generators()), stream);
}

}  // namespace segreta::kernel
