#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "qconc/wootters.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace qconc;

namespace {

DensityMatrix werner(double p) {
    const Eigen::MatrixXcd bell = DensityMatrix::from_pure(test::bell_phi_plus()).entries();
    return DensityMatrix(2, p * bell + (1.0 - p) * Eigen::MatrixXcd::Identity(4, 4) / 4.0);
}

} // namespace

TEST_CASE("spin flip fixed points and basis flips") {
    const DensityMatrix mixed = DensityMatrix::maximally_mixed(2);
    CHECK((spin_flip(mixed).entries() - mixed.entries()).cwiseAbs().maxCoeff() < 1e-15);

    const DensityMatrix bell = DensityMatrix::from_pure(test::bell_phi_plus());
    CHECK((spin_flip(bell).entries() - bell.entries()).cwiseAbs().maxCoeff() < 1e-15);

    const DensityMatrix uu = DensityMatrix::from_pure(PureState::basis(2, 0b11));
    const DensityMatrix dd = DensityMatrix::from_pure(PureState::basis(2, 0b00));
    CHECK((spin_flip(uu).entries() - dd.entries()).cwiseAbs().maxCoeff() < 1e-15);

    CHECK_THROWS_AS(spin_flip(DensityMatrix::maximally_mixed(1)), BadDimension);
}

TEST_CASE("spin flip is an involution") {
    std::mt19937_64 rng(101);
    for (int i = 0; i < 200; ++i) {
        const DensityMatrix rho = test::random_density_matrix(rng);
        const DensityMatrix twice = spin_flip(spin_flip(rho));
        CHECK((twice.entries() - rho.entries()).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("R-operator eigenvalues on reference matrices") {
    const auto bell = r_eigenvalues(DensityMatrix::from_pure(test::bell_phi_plus()));
    CHECK(bell[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(bell[1] < 1e-7);
    CHECK(bell[3] < 1e-7);

    const auto mixed = r_eigenvalues(DensityMatrix::maximally_mixed(2));
    for (double lambda : mixed) CHECK(lambda == doctest::Approx(0.25).epsilon(1e-10));

    const auto product = r_eigenvalues(DensityMatrix::from_pure(PureState::basis(2, 0b11)));
    for (double lambda : product) CHECK(lambda < 1e-7);
}

TEST_CASE("rho rho~ and rho~ rho share a spectrum") {
    std::mt19937_64 rng(103);
    for (int i = 0; i < 100; ++i) {
        const DensityMatrix rho = test::random_density_matrix(rng);
        const Eigen::Matrix4cd a = rho.entries() * spin_flip(rho).entries();
        const Eigen::Matrix4cd b = spin_flip(rho).entries() * rho.entries();
        Eigen::ComplexEigenSolver<Eigen::Matrix4cd> ea(a, false);
        Eigen::ComplexEigenSolver<Eigen::Matrix4cd> eb(b, false);
        std::array<double, 4> sa{};
        std::array<double, 4> sb{};
        for (int j = 0; j < 4; ++j) {
            sa[static_cast<std::size_t>(j)] = ea.eigenvalues()(j).real();
            sb[static_cast<std::size_t>(j)] = eb.eigenvalues()(j).real();
        }
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        for (int j = 0; j < 4; ++j) {
            CHECK(std::abs(sa[static_cast<std::size_t>(j)] - sb[static_cast<std::size_t>(j)]) < 1e-10);
        }
    }
}

TEST_CASE("Wootters concurrence on reference matrices") {
    const WoottersResult bell = wootters_concurrence(DensityMatrix::from_pure(test::bell_phi_plus()));
    CHECK(bell.c_w == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(bell.eof == doctest::Approx(1.0).epsilon(1e-10));

    const WoottersResult mixed = wootters_concurrence(DensityMatrix::maximally_mixed(2));
    CHECK(mixed.c_w == 0.0);
    CHECK(mixed.c_w_unclamped == doctest::Approx(-0.5).epsilon(1e-10));

    for (double p : {0.0, 1.0 / 3.0, 0.6, 1.0}) {
        const double expected = std::max(0.0, (3.0 * p - 1.0) / 2.0);
        const WoottersResult w = wootters_concurrence(werner(p));
        CHECK(w.c_w == doctest::Approx(expected).epsilon(1e-9));
        // The closed-form target itself is validated by the literal
        // sqrt(rho) rho~ sqrt(rho) chain.
        const double literal = std::max(0.0, test::wootters_unclamped_literal(werner(p).entries()));
        CHECK(literal == doctest::Approx(expected).epsilon(1e-9));
    }
}

TEST_CASE("production route matches the literal R chain on random matrices") {
    std::mt19937_64 rng(107);
    for (int i = 0; i < 200; ++i) {
        const DensityMatrix rho = test::random_density_matrix(rng);
        const WoottersResult w = wootters_concurrence(rho);
        CHECK(w.c_w_unclamped ==
              doctest::Approx(test::wootters_unclamped_literal(rho.entries())).epsilon(1e-9));
        CHECK(w.c_w == std::clamp(w.c_w_unclamped, 0.0, 1.0));
    }
}

TEST_CASE("pure-state Wootters concurrence equals the bilinear closed form") {
    std::mt19937_64 rng(109);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const PureState psi = random_pure(2, rng());
        const double e_c = 2.0 * std::abs(psi[3] * psi[0] - psi[2] * psi[1]);
        const WoottersResult w = wootters_concurrence(DensityMatrix::from_pure(psi));
        worst = std::max(worst, std::abs(w.c_w - e_c));
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("Wootters concurrence is invariant under local unitaries") {
    std::mt19937_64 rng(113);
    for (int i = 0; i < 25; ++i) {
        const DensityMatrix rho = test::random_density_matrix(rng);
        const double base = wootters_concurrence(rho).c_w;
        for (int m = 0; m < 4; ++m) {
            const Eigen::MatrixXcd u1 = test::random_unitary(2, rng);
            const Eigen::MatrixXcd u2 = test::random_unitary(2, rng);
            Eigen::MatrixXcd u(4, 4);
            for (int a = 0; a < 2; ++a) {
                for (int b = 0; b < 2; ++b) {
                    u.block(2 * a, 2 * b, 2, 2) = u1(a, b) * u2;
                }
            }
            const DensityMatrix rotated(2, u * rho.entries() * u.adjoint());
            CHECK(wootters_concurrence(rotated).c_w == doctest::Approx(base).epsilon(1e-9));
        }
    }
}

TEST_CASE("entanglement of formation endpoints, value and monotonicity") {
    CHECK(eof(0.0) == 0.0);
    CHECK(eof(1.0) == 1.0);
    CHECK(eof(0.5) == doctest::Approx(0.35457890266527).epsilon(1e-12));

    double previous = -1.0;
    for (int i = 0; i <= 1000; ++i) {
        const double value = eof(static_cast<double>(i) / 1000.0);
        CHECK(value >= previous);
        previous = value;
    }

    CHECK_THROWS_AS(eof(-0.01), OutOfRange);
    CHECK_THROWS_AS(eof(1.01), OutOfRange);
}
