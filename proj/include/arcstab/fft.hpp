#pragma once

#include <complex>
#include <vector>

namespace arcstab {

// Forward DFT, unnormalized: X[k] = sum_n x[n] exp(-2*pi*i*k*n/N).
// Power-of-two lengths use an iterative radix-2 transform; anything else
// falls back to the direct O(N^2) sum, which is fine for the small odd
// windows that show up in tests.
std::vector<std::complex<double>> dft_forward(const std::vector<double>& x);

}  // namespace arcstab
