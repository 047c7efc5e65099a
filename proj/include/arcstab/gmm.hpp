#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arcstab/linalg.hpp"
#include "arcstab/observation.hpp"

namespace arcstab {

struct GmmParams {
    std::vector<double> weights;     // K, sums to 1
    Matrix means;                    // K x d
    std::vector<Matrix> covariances; // K matrices, d x d SPD
};

struct GmmOptions {
    std::size_t max_iter = 200;
    double tol = 1e-6;
    std::size_t restarts = 5;
    bool diagonal = false;  // constrain covariances to their diagonals
};

struct GmmFitResult {
    GmmParams params;
    std::vector<double> loglik_trace;  // of the winning restart
    std::size_t best_restart = 0;
};

// Single EM run from explicit initial parameters. A component whose total
// responsibility drops below 1e-8 is re-seeded at the worst-explained point
// (lowest maximum responsibility) with the global covariance, and a warning
// is recorded.
GmmFitResult gmm_em(const ObservationSequence& obs, const GmmParams& init,
                    const GmmOptions& options = {},
                    std::vector<std::string>* warnings = nullptr);

// Best of options.restarts EM runs by final log-likelihood (ties within
// 1e-12 keep the lowest restart index). Restart r seeds its farthest-point
// initialization with seed + r.
GmmFitResult fit_gmm(const ObservationSequence& obs, std::size_t n_components, std::uint64_t seed,
                     const GmmOptions& options = {},
                     std::vector<std::string>* warnings = nullptr);

// Component maximizing weight x density per frame; ties toward lower index.
std::vector<int> hard_assign(const GmmParams& params, const ObservationSequence& obs);

}  // namespace arcstab
