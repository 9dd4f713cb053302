// Seeded randomness with explicit state. Uniform and Gaussian draws are mapped
// from mt19937_64 words by hand so that a fixed seed gives identical streams on
// every platform this builds on.
#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "zc/cmatrix.hpp"

namespace zc {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Independent sub-stream seed for indexed tasks (restarts, ensemble members).
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    return splitmix64(base ^ splitmix64(index + 1));
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // in [0, 1)
    double uniform01() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Box-Muller; one Gaussian per pair of uniforms keeps the stream simple.
    double gaussian() {
        double u1 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    cplx cgaussian() {
        const double re = gaussian();
        const double im = gaussian();
        return cplx(re, im);
    }

    CVector gaussian_vector(std::size_t n) {
        CVector v(n);
        for (auto& z : v) z = cgaussian();
        return v;
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace zc
