#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace gpq {

/** Deterministic seeded RNG with platform-independent helpers.
 *
 * std::uniform_int_distribution and std::shuffle are not guaranteed to produce
 * the same sequences across standard libraries, so bounded draws and shuffles
 * are implemented here on top of the raw mt19937_64 stream. Experiments derive
 * one stream per trial from a root seed and a counter, so trial t is
 * reproducible in isolation and trials can run in any order.
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(mix(seed)) {}

  std::uint64_t next() { return eng_(); }

  /** Unbiased uniform draw from {0, ..., n-1}, n >= 1. */
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t v;
    do {
      v = eng_();
    } while (v >= limit);
    return v % n;
  }

  int below_int(int n) { return static_cast<int>(below(static_cast<std::uint64_t>(n))); }

  /** Uniform double in [0, 1). */
  double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return unit() < p; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(i)]);
    }
  }

  /** Uniformly random m distinct values from {1, ..., n}, in draw order. */
  std::vector<int> sample_distinct(int n, int m) {
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i + 1;
    std::vector<int> out;
    out.reserve(m);
    for (int i = 0; i < m; ++i) {
      const std::uint64_t j = below(pool.size() - i) + i;
      std::swap(pool[i], pool[j]);
      out.push_back(pool[i]);
    }
    return out;
  }

 private:
  static std::uint64_t splitmix(std::uint64_t& s) {
    s += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  static std::mt19937_64 mix(std::uint64_t seed) {
    std::uint64_t s = seed;
    const std::uint64_t a = splitmix(s);
    const std::uint64_t b = splitmix(s);
    std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                      static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
    return std::mt19937_64(seq);
  }

  std::mt19937_64 eng_;
};

/** Counter-based stream derivation: independent per-trial generators. */
inline Rng derive_stream(std::uint64_t root_seed, std::uint64_t stream_index) {
  std::uint64_t s = root_seed ^ (0xd1b54a32d192ed03ULL * (stream_index + 1));
  s ^= s >> 32;
  return Rng(s * 0x9e3779b97f4a7c15ULL + stream_index);
}

}  // namespace gpq
