#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>

namespace warmup {

// Deterministic seed derivation so independent tasks (per pair, per
// simulation, per bootstrap) get independent streams that do not depend on
// scheduling or call order.
std::uint64_t mix_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> tags);

std::uint64_t hash_tag(std::string_view name);

inline std::mt19937_64 make_rng(std::uint64_t seed,
                                std::initializer_list<std::uint64_t> tags) {
    return std::mt19937_64(mix_seed(seed, tags));
}

// Bounded draw in [0, n) via 128-bit multiply-high; bias of n / 2^64 is
// irrelevant for resampling.
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(rng()) * n) >> 64);
}

} // namespace warmup
