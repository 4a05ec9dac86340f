#pragma once

#include <cstdint>

namespace gabfield {

/// Small deterministic generator (splitmix64). Used instead of the standard
/// distributions so that seeded runs produce identical streams on every
/// platform and compiler.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, bound). bound must be nonzero.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    /// Independent stream for a numbered subtask (simulation trial, retry, ...).
    static Rng derive(std::uint64_t seed, std::uint64_t stream) {
        Rng mixer(seed ^ (0x2545f4914f6cdd1dULL * (stream + 1)));
        return Rng(mixer.next());
    }

  private:
    std::uint64_t state_;
};

}  // namespace gabfield
