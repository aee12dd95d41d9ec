#pragma once

#include <cstdint>

namespace wmcs {

/// splitmix64 stream. Standard-library engines and distributions are
/// implementation-defined across toolchains; report determinism requires a
/// generator whose byte stream depends on the seed alone.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

    int range(int lo, int hi) {  // inclusive both ends
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin(double p = 0.5) {
        return static_cast<double>(next_u64() >> 11) * (1.0 / 9007199254740992.0) < p;
    }

    /// Derives an independent stream; used to give each trial its own seed.
    Rng fork(std::uint64_t salt) { return Rng(next_u64() ^ (salt * 0xd1342543de82ef95ULL)); }

  private:
    std::uint64_t state_;
};

}  // namespace wmcs
