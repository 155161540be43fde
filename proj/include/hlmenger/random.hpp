#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace hlmenger {

// Recorded in reports so sampled results can be reproduced elsewhere.
// std::mt19937_64 has a fixed output sequence; bounded draws use the
// rejection rule in uniform_below rather than std::uniform_int_distribution,
// whose algorithm differs between standard libraries.
inline constexpr const char* kRngName = "mt19937_64/splitmix64-mix/reject-v1";

using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x);

// Sub-seed for stream `stream` of `seed`: splitmix64(seed ^ (γ·(stream+1)))
// with γ the 64-bit golden ratio constant.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

// Uniform in [0, bound), bound > 0.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

// Fisher-Yates shuffle of 0..size-1, swapping position i with a uniform
// position in [i, size).
std::vector<std::uint32_t> random_permutation(std::size_t size, Rng& rng);

// k distinct values from [0, n), sorted ascending (partial Fisher-Yates).
std::vector<std::uint32_t> random_subset(std::size_t n, std::size_t k, Rng& rng);

}  // namespace hlmenger
