/*
 * Seedable, platform-stable randomness.
 *
 * mt19937_64 is bit-exact across implementations; the distribution helpers
 * below avoid std::uniform_real_distribution (whose output is
 * implementation-defined). Protocol runs split one root seed into one
 * engine per measurement event, in protocol order: event 0 is the first
 * measurement, event 1 the second.
 */
#pragma once

#include <cstdint>
#include <random>

#include "rsp/qudit.hpp"

namespace rsp {

constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

constexpr std::uint64_t event_seed(std::uint64_t root, std::uint64_t event_index) {
    return splitmix64(root ^ splitmix64(event_index + 1));
}

/// Uniform in [0, 1) with 53 random mantissa bits.
inline double uniform01(std::mt19937_64& g) {
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

inline double uniform_in(std::mt19937_64& g, double lo, double hi) {
    return lo + (hi - lo) * uniform01(g);
}

inline Angles2 random_angles2(std::mt19937_64& g) {
    Angles2 a;
    a.theta = uniform_in(g, 0.0, 3.141592653589793);
    a.phi = uniform_in(g, 0.0, 6.283185307179586);
    return a;
}

inline Angles4 random_angles4(std::mt19937_64& g) {
    Angles4 a;
    a.gamma1 = uniform_in(g, 0.0, 1.5707963267948966);
    a.gamma2 = uniform_in(g, 0.0, 1.5707963267948966);
    a.gamma3 = uniform_in(g, 0.0, 1.5707963267948966);
    a.alpha1 = uniform_in(g, 0.0, 6.283185307179586);
    a.alpha2 = uniform_in(g, 0.0, 6.283185307179586);
    a.alpha3 = uniform_in(g, 0.0, 6.283185307179586);
    return a;
}

/// Magnitude weights drawn uniformly and normalized so Σ cos²θ_i = 1; φ_0 = 0.
inline Angles8 random_angles8(std::mt19937_64& g) {
    Angles8 a;
    std::array<double, 8> w{};
    double total = 0.0;
    for (auto& wi : w) {
        wi = uniform01(g) + 1e-6;
        total += wi;
    }
    for (int i = 0; i < 8; ++i) {
        a.thetas[static_cast<size_t>(i)] = std::acos(std::sqrt(w[static_cast<size_t>(i)] / total));
        a.phis[static_cast<size_t>(i)] = i == 0 ? 0.0 : uniform_in(g, 0.0, 6.283185307179586);
    }
    return a;
}

}  // namespace rsp
