#pragma once

#include <cstdint>

namespace dynmis {

// Splittable counter-based PRNG (splitmix64 core). Every randomized draw in a
// run derives from one trial seed, so runs replay bit-exactly.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // uniform in [0,1)
    double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    // uniform in [0,bound), bound >= 1
    uint64_t next_below(uint64_t bound) {
        return static_cast<uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

    bool bernoulli(double p) { return next_double() < p; }

    // independent child stream; distinct tags give distinct streams
    SplitMix64 split(uint64_t tag) const {
        uint64_t z = state_ ^ (0xA0761D6478BD642FULL * (tag + 1));
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return SplitMix64(z ^ (z >> 31));
    }

private:
    uint64_t state_;
};

} // namespace dynmis
