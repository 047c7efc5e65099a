#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "arcstab/common.hpp"

namespace arcstab {

// Deterministic random source. All stochastic steps in the library draw from
// this class so that a given seed reproduces byte-identical results across
// platforms. Distributions are implemented by hand because the standard
// library's distribution objects are not guaranteed to produce the same
// stream everywhere; mt19937_64 itself is fully specified.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform on [0, 1) with 53-bit resolution.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Uniform on [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [0, n). n must be positive.
    std::size_t uniform_index(std::size_t n) {
        if (n == 0) throw ConfigError("uniform_index: n must be positive");
        // Rejection-free scaling is fine here: n is tiny next to 2^53.
        auto idx = static_cast<std::size_t>(uniform() * static_cast<double>(n));
        return idx < n ? idx : n - 1;
    }

    // Standard normal via Box-Muller. Caches the second deviate.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        double u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double theta = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    // Sample an index from a discrete distribution. Weights must be
    // non-negative and sum to something positive; they are renormalized.
    std::size_t categorical(const std::vector<double>& weights) {
        double total = 0.0;
        for (double w : weights) {
            if (w < 0.0 || !std::isfinite(w))
                throw ConfigError("categorical: weights must be finite and non-negative");
            total += w;
        }
        if (total <= 0.0) throw ConfigError("categorical: weights sum to zero");
        double u = uniform() * total;
        double acc = 0.0;
        for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
            acc += weights[i];
            if (u < acc) return i;
        }
        return weights.size() - 1;
    }

private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace arcstab
