#pragma once

#include <array>

#include "qconc/state.hpp"

namespace qconc {

struct WoottersResult {
    std::array<double, 4> lambdas{}; // descending, non-negative
    double c_w = 0.0;                // max(0, l1 - l2 - l3 - l4), clamped to [0,1]
    double c_w_unclamped = 0.0;      // l1 - l2 - l3 - l4 before the clamp
    double eof = 0.0;                // E(c_w)
};

/// (sy (x) sy) conj(rho) (sy (x) sy). The conjugate is required for complex
/// rho even though it is often written without one; for real rho the two
/// forms coincide.
DensityMatrix spin_flip(const DensityMatrix& rho); // BadDimension

/// The four lambda_i of Wootters' R operator, sorted descending: the square
/// roots of the eigenvalues of rho * spin_flip(rho). Evaluated through the
/// equivalent symmetric form (singular values of Psi^T (sy x sy) Psi for a
/// spectral factor rho = Psi Psi^dagger), which keeps near-zero lambdas
/// accurate to machine precision. Eigenvalues of rho below -1e-10 raise
/// EigensolverFailure.
std::array<double, 4> r_eigenvalues(const DensityMatrix& rho);

WoottersResult wootters_concurrence(const DensityMatrix& rho);

/// Entanglement of formation as a function of concurrence:
/// E(c) = h((1 + sqrt(1 - c^2)) / 2). Throws OutOfRange for c outside [0,1].
double eof(double c);

} // namespace qconc
