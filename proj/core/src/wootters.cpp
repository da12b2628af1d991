#include "qconc/wootters.hpp"

#include <algorithm>
#include <cmath>

namespace qconc {

namespace {

// sy (x) sy in the fixed basis order (dd, du, ud, uu): the sign pattern is
// symmetric under reversing the basis, so it matches the usual matrix.
const Eigen::Matrix4cd& spin_flip_operator() {
    static const Eigen::Matrix4cd f = [] {
        Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
        m(0, 3) = Complex{-1.0, 0.0};
        m(1, 2) = Complex{1.0, 0.0};
        m(2, 1) = Complex{1.0, 0.0};
        m(3, 0) = Complex{-1.0, 0.0};
        return m;
    }();
    return f;
}

} // namespace

DensityMatrix spin_flip(const DensityMatrix& rho) {
    if (rho.num_qubits() != 2) throw BadDimension("spin flip is defined for 2-qubit matrices");
    const Eigen::Matrix4cd& f = spin_flip_operator();
    return DensityMatrix(2, f * rho.entries().conjugate() * f);
}

std::array<double, 4> r_eigenvalues(const DensityMatrix& rho) {
    if (rho.num_qubits() != 2) throw BadDimension("R spectrum is defined for 2-qubit matrices");

    // The lambda_i are the square roots of the eigenvalues of rho * rho~,
    // which shares its spectrum with sqrt(rho) rho~ sqrt(rho). Diagonalizing
    // the product directly loses half the digits on near-pure inputs (the
    // final square root turns 1e-16 eigenvalue noise into 1e-8 lambdas), so
    // the spectrum is taken from the rank-truncated symmetric form instead:
    // with rho = Psi Psi^dagger, the nonzero eigenvalues of rho rho~ are the
    // squared singular values of T = Psi^T (sy x sy) Psi.
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(rho.entries());
    if (solver.info() != Eigen::Success) throw EigensolverFailure("eigensolver did not converge");

    std::vector<Eigen::Index> kept;
    for (Eigen::Index i = 0; i < 4; ++i) {
        const double p = solver.eigenvalues()(i);
        if (p < -1e-10) throw EigensolverFailure("input has a negative eigenvalue");
        if (p > 1e-14) kept.push_back(i);
    }

    Eigen::MatrixXcd factor(4, static_cast<Eigen::Index>(kept.size()));
    for (std::size_t j = 0; j < kept.size(); ++j) {
        factor.col(static_cast<Eigen::Index>(j)) =
            solver.eigenvectors().col(kept[j]) * std::sqrt(solver.eigenvalues()(kept[j]));
    }
    const Eigen::MatrixXcd t = factor.transpose() * spin_flip_operator() * factor;

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(t);
    std::array<double, 4> lambdas{};
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
        lambdas[static_cast<std::size_t>(i)] = svd.singularValues()(i);
    }
    std::sort(lambdas.begin(), lambdas.end(), std::greater<>());
    return lambdas;
}

WoottersResult wootters_concurrence(const DensityMatrix& rho) {
    WoottersResult result;
    result.lambdas = r_eigenvalues(rho);
    result.c_w_unclamped =
        result.lambdas[0] - result.lambdas[1] - result.lambdas[2] - result.lambdas[3];
    result.c_w = std::clamp(result.c_w_unclamped, 0.0, 1.0);
    result.eof = eof(result.c_w);
    return result;
}

double eof(double c) {
    if (c < 0.0 || c > 1.0) throw OutOfRange("concurrence must lie in [0, 1]");
    const double x = 0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c)));
    return binary_entropy(x);
}

} // namespace qconc
