#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace consign::rng {

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline uint64_t fnv1a64(std::string_view s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline uint64_t fnv1a64(const void* data, size_t n) {
  uint64_t h = 0xcbf29ce484222325ULL;
  const auto* p = static_cast<const unsigned char*>(data);
  for (size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Named substream derivation: one global seed fans out into independent
// per-purpose, per-index streams (synth/item, solver/item, sampler/item, ...).
inline uint64_t substream(uint64_t seed, std::string_view name, uint64_t index) {
  return splitmix64(seed ^ fnv1a64(name) ^ splitmix64(index));
}

// mt19937_64 with hand-rolled real distributions so draws are identical on
// every platform (std::*_distribution is implementation-defined).
class stream {
 public:
  explicit stream(uint64_t seed) : eng_(seed) {}

  uint64_t next_u64() { return eng_(); }

  double uniform01() {  // [0, 1), 53-bit resolution
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  int uniform_int(int n) {  // [0, n)
    int v = static_cast<int>(uniform01() * n);
    return v < n ? v : n - 1;
  }

  double normal() {  // Box-Muller, one value per call (pair cached)
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform01();
    double u2 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    double r = std::sqrt(-2.0 * std::log(u1));
    double t = 6.283185307179586476925287 * u2;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
  }

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace consign::rng
