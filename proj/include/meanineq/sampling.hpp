#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace meanineq {

// Deterministic across platforms: mt19937_64 with an explicit bits-to-double
// mapping (uniform_real_distribution is implementation-defined).
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}

    double unit() {  // [0, 1)
        return static_cast<double>(eng() >> 11) * 0x1.0p-53;
    }
    double log_uniform(double lo, double hi) {
        const double llo = std::log(lo), lhi = std::log(hi);
        return std::exp(llo + (lhi - llo) * unit());
    }
    // Symmetric Dirichlet(1) via normalized exponentials, clipped away from 0.
    std::vector<double> dirichlet(int n, double clip = 1e-9) {
        std::vector<double> p(static_cast<size_t>(n));
        double sum = 0;
        for (auto& v : p) {
            double uu = unit();
            while (uu <= 0) uu = unit();
            v = -std::log(uu);
            sum += v;
        }
        for (auto& v : p) v = std::max(v / sum, clip);
        double s2 = 0;
        for (const auto& v : p) s2 += v;
        for (auto& v : p) v /= s2;
        return p;
    }
};

} // namespace meanineq
