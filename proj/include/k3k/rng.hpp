#pragma once

// Deterministic 64-bit mixing PRNG (splitmix64) for reproducible sampling.

#include <cstdint>

#include "k3k/gf2k.hpp"

namespace k3k {

class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d649bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n), small bias negligible for the n used here.
    uint64_t below(uint64_t n) { return next() % n; }

    Fq element(FieldSpec spec) { return Fq(spec, next() & (spec.order() - 1)); }
    Fq nonzero(FieldSpec spec) {
        for (;;) {
            Fq x = element(spec);
            if (!x.is_zero()) return x;
        }
    }

  private:
    uint64_t state_;
};

}  // namespace k3k
