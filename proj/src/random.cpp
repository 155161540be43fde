#include "hlmenger/random.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "hlmenger/error.hpp"

namespace hlmenger {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(seed ^ (0x9E3779B97F4A7C15ull * (stream + 1)));
}

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorCode::InvalidArgument, "uniform_below needs a positive bound");
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = kMax - (kMax % bound + 1) % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x > limit);
  return x % bound;
}

std::vector<std::uint32_t> random_permutation(std::size_t size, Rng& rng) {
  std::vector<std::uint32_t> p(size);
  std::iota(p.begin(), p.end(), 0u);
  for (std::size_t i = 0; i + 1 < size; ++i) {
    std::size_t j = i + uniform_below(rng, size - i);
    std::swap(p[i], p[j]);
  }
  return p;
}

std::vector<std::uint32_t> random_subset(std::size_t n, std::size_t k, Rng& rng) {
  if (k > n) throw Error(ErrorCode::InvalidArgument, "subset larger than its universe");
  std::vector<std::uint32_t> pool(n);
  std::iota(pool.begin(), pool.end(), 0u);
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t j = i + uniform_below(rng, n - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace hlmenger
