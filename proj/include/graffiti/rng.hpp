#pragma once

#include <algorithm>
#include <cstdint>
#include <random>

#include "graffiti/bytes.hpp"

namespace graffiti {

// Deterministic random source. mt19937_64 output is bit-exact across
// platforms; the distribution helpers below are written by hand because
// std::uniform_int_distribution is not portable between standard
// library implementations, and reproducible streams are part of the
// contract for trackers, clients and the simulator alike.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    static Rng nondeterministic() {
        std::random_device rd;
        std::uint64_t seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
        return Rng(seed);
    }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, n), rejection sampled so every value is equally likely.
    std::uint64_t uniform(std::uint64_t n) {
        if (n == 0) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return v % n;
    }

    // Uniform double in [0, 1) with 53 bits of precision.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        return uniform01() < p;
    }

    Bytes bytes(std::size_t n) {
        Bytes out(n);
        for (std::size_t i = 0; i < n; ++i)
            out[i] = static_cast<std::uint8_t>(engine_() >> 56);
        return out;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[uniform(i)]);
    }

    // Derive an independent child stream, e.g. one per simulated replica.
    Rng fork() { return Rng(engine_() ^ 0x9e3779b97f4a7c15ull); }

private:
    std::mt19937_64 engine_;
};

} // namespace graffiti
