#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace rainbow {

// SplitMix64 (Steele, Lea, Flood 2014). Fixed algorithm so that every seeded
// artifact is reproducible bit-for-bit across platforms and builds.
class SplitMix64 {
  public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish value in [0, bound). Modulo bias is irrelevant here; the
    // contract is determinism, not statistical perfection.
    uint64_t next_below(uint64_t bound) { return bound == 0 ? 0 : next() % bound; }

    bool next_bool() { return next() & 1; }

  private:
    uint64_t state_;
};

inline std::vector<int> identity_permutation(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

// Seeded Fisher-Yates shuffle.
inline std::vector<int> random_permutation(int n, SplitMix64& rng) {
    std::vector<int> p = identity_permutation(n);
    for (int i = n - 1; i > 0; --i) {
        int j = static_cast<int>(rng.next_below(static_cast<uint64_t>(i) + 1));
        std::swap(p[i], p[j]);
    }
    return p;
}

}  // namespace rainbow
