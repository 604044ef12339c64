#pragma once

#include <cmath>
#include <cstdint>

namespace sr {

// splitmix64 step; also used as the hash for deriving sub-streams.
inline uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline uint64_t hash_combine(uint64_t a, uint64_t b) {
    return mix64(a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2)));
}

inline uint64_t hash_str(const char* s) {
    // FNV-1a
    uint64_t h = 1469598103934665603ull;
    for (; *s; ++s) h = (h ^ static_cast<unsigned char>(*s)) * 1099511628211ull;
    return h;
}

// Deterministic, platform-independent generator. std::mt19937 engines are
// portable but the standard distributions are not; everything here is spelled
// out so seeds reproduce bit-identically everywhere.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ull;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // [0, 1)
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // [0, n)
    int below(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }

    bool chance(double p) { return uniform() < p; }

    double normal() {
        // Box-Muller; one value per call keeps the stream layout simple.
        double u1 = uniform();
        double u2 = uniform();
        if (u1 < 1e-300) u1 = 1e-300;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

    // Independent sub-stream; does not advance this generator.
    Rng fork(uint64_t tag) const { return Rng(hash_combine(state_, mix64(tag))); }
    Rng fork(const char* tag) const { return fork(hash_str(tag)); }

private:
    uint64_t state_;
};

// Documented per-image stream split: (root seed, object index, image index).
inline Rng image_stream(uint64_t root_seed, uint64_t object_index, uint64_t image_index) {
    return Rng(hash_combine(hash_combine(root_seed, mix64(object_index)), mix64(image_index)));
}

}  // namespace sr
