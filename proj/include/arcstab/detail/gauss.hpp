#pragma once

#include <vector>

#include "arcstab/linalg.hpp"

namespace arcstab::detail {

// Multivariate normal with a precomputed Cholesky factor, so repeated
// density evaluations cost one triangular solve each.
struct GaussDensity {
    std::vector<double> mean;
    Matrix chol;
    double logdet = 0.0;
};

// Throws NumericError if cov is not positive definite; state_hint >= 0 names
// the offending mixture component or hidden state in the message.
GaussDensity make_gauss(const std::vector<double>& mean, const Matrix& cov, int state_hint = -1);

double gauss_logpdf(const GaussDensity& g, const double* v);

}  // namespace arcstab::detail
