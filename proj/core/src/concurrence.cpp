#include "qconc/concurrence.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

namespace qconc {

namespace {

// i^t with exact components, so that half-integer spin sums (odd subsets)
// produce exact +-i phases and the fermionic cancellation is bitwise exact.
Complex quarter_phase(int t) {
    switch (((t % 4) + 4) % 4) {
        case 0: return Complex{1.0, 0.0};
        case 1: return Complex{0.0, 1.0};
        case 2: return Complex{-1.0, 0.0};
        default: return Complex{0.0, -1.0};
    }
}

std::vector<QubitSubset> subsets_lexicographic(int n, int k) {
    std::vector<QubitSubset> out;
    std::vector<int> current(static_cast<std::size_t>(k));
    std::iota(current.begin(), current.end(), 1);
    while (true) {
        out.emplace_back(current);
        // Advance the rightmost index that can still move.
        int j = k - 1;
        while (j >= 0 && current[static_cast<std::size_t>(j)] == n - (k - 1 - j)) --j;
        if (j < 0) break;
        ++current[static_cast<std::size_t>(j)];
        for (int l = j + 1; l < k; ++l) {
            current[static_cast<std::size_t>(l)] = current[static_cast<std::size_t>(l - 1)] + 1;
        }
    }
    return out;
}

// Brings the subset to positions 1..k (in order); the rest follow ascending.
std::vector<int> to_front_permutation(int n, const QubitSubset& subset) {
    std::vector<int> perm(static_cast<std::size_t>(n), 0);
    int next = 1;
    for (int q : subset.indices()) perm[static_cast<std::size_t>(q - 1)] = next++;
    for (int q = 1; q <= n; ++q) {
        if (perm[static_cast<std::size_t>(q - 1)] == 0) perm[static_cast<std::size_t>(q - 1)] = next++;
    }
    return perm;
}

} // namespace

PureState conjugate_in_subset(const PureState& state, const QubitSubset& subset) {
    const int n = state.num_qubits();
    subset.require_valid_for(n);
    const std::uint64_t mask = subset.bit_mask(n);
    const int k = subset.size();

    std::vector<Complex> out(state.dim());
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        // 2 * sum of m_j over the subset: (#up - #down) among subset qubits.
        const int twice_m = 2 * std::popcount(i & mask) - k;
        out[i ^ mask] = quarter_phase(twice_m) * std::conj(state[i]);
    }
    return PureState(n, std::move(out));
}

double concurrence_r(const PureState& state, const QubitSubset& subset, OddSubsetPolicy policy) {
    subset.require_valid_for(state.num_qubits());
    if (subset.size() % 2 != 0) {
        if (policy == OddSubsetPolicy::zero) return 0.0;
        throw OddSubset("subset size " + std::to_string(subset.size()) +
                        " is odd; such sectors are orthogonal to their conjugates");
    }
    return std::abs(inner_product(conjugate_in_subset(state, subset), state));
}

double concurrence_2q_closed_form(const PureState& state) {
    if (state.num_qubits() != 2) throw BadDimension("closed form is for 2-qubit states");
    // Basis order dd, du, ud, uu: the uu/dd product minus the ud/du product.
    return 2.0 * std::abs(state[3] * state[0] - state[2] * state[1]);
}

double concurrence_symplectic(const PureState& state, const QubitSubset& pair) {
    const int n = state.num_qubits();
    pair.require_valid_for(n);
    if (pair.size() != 2) throw BadSubset("symplectic form needs a pair of qubits");

    const int p = pair.indices()[0];
    const int q = pair.indices()[1];
    const int bit_p = n - p;
    const int bit_q = n - q;

    // V[c] collects amplitudes whose pair spins read c = (m_p m_q), c = 3 is
    // up-up; the component index is the remaining bits compressed in order.
    const std::size_t rest_dim = state.dim() >> 2;
    std::vector<std::vector<Complex>> v(4, std::vector<Complex>(rest_dim, Complex{0.0, 0.0}));
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        const int c = static_cast<int>(((i >> bit_p) & 1u) << 1 | ((i >> bit_q) & 1u));
        std::uint64_t rest = 0;
        int out_bit = 0;
        for (int b = 0; b < n; ++b) {
            if (b == bit_p || b == bit_q) continue;
            rest |= ((i >> b) & 1u) << out_bit;
            ++out_bit;
        }
        v[static_cast<std::size_t>(c)][rest] = state[i];
    }

    // 2 | V4.V1 - V3.V2 | with plain (unconjugated) dot products;
    // V1 = up-up (c=3), V2 = up-down (c=2), V3 = down-up (c=1), V4 = down-down (c=0).
    Complex s1{0.0, 0.0};
    Complex s2{0.0, 0.0};
    for (std::size_t r = 0; r < rest_dim; ++r) {
        s1 += v[0][r] * v[3][r];
        s2 += v[1][r] * v[2][r];
    }
    return 2.0 * std::abs(s1 - s2);
}

const double* ConcurrenceReport::find(const QubitSubset& sector) const {
    for (const auto& [subset, value] : entries) {
        if (subset == sector) return &value;
    }
    return nullptr;
}

ConcurrenceReport all_concurrences(const PureState& state, int k) {
    const int n = state.num_qubits();
    if (k < 2 || k > n) {
        throw BadDimension("sector size " + std::to_string(k) + " outside [2, " + std::to_string(n) + "]");
    }
    if (k % 2 != 0) {
        throw OddSubset("sector size " + std::to_string(k) +
                        " is odd; only even (bosonic) sectors carry a concurrence");
    }

    ConcurrenceReport report;
    report.num_qubits = n;
    report.sector_size = k;
    const QubitSubset front = QubitSubset::front(k);
    for (const QubitSubset& subset : subsets_lexicographic(n, k)) {
        const PureState permuted = permute_qubits(state, to_front_permutation(n, subset));
        report.entries.emplace_back(subset, concurrence_r(permuted, front));
    }
    return report;
}

PureState canonical_purification(const DensityMatrix& rho) {
    if (rho.num_qubits() != 2) throw BadDimension("purification is implemented for 2-qubit matrices");

    const Eigen::MatrixXcd& m = rho.entries();
    const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (herm > 1e-12) throw NotDensityMatrix("matrix is not Hermitian");
    if (std::abs(m.trace() - Complex{1.0, 0.0}) > 1e-12) throw NotDensityMatrix("trace differs from 1");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
    if (solver.info() != Eigen::Success) throw NotDensityMatrix("eigendecomposition failed");

    std::array<double, 4> p{};
    std::array<Eigen::Vector4cd, 4> vec;
    for (int i = 0; i < 4; ++i) {
        double value = solver.eigenvalues()(i);
        if (value < -1e-10) throw NotDensityMatrix("matrix has a negative eigenvalue");
        p[static_cast<std::size_t>(i)] = std::max(value, 0.0);
        vec[static_cast<std::size_t>(i)] = solver.eigenvectors().col(i);
    }

    // Phase convention: the largest-magnitude component (first on ties)
    // becomes real and positive.
    for (auto& v : vec) {
        int arg_max = 0;
        for (int s = 1; s < 4; ++s) {
            if (std::abs(v(s)) > std::abs(v(arg_max))) arg_max = s;
        }
        const Complex c = v(arg_max);
        if (std::abs(c) > 0.0) v *= std::conj(c) / std::abs(c);
    }

    // Descending eigenvalues; degenerate pairs ordered by the first component
    // where the vectors differ (smaller argument first, then larger magnitude).
    std::array<int, 4> order{0, 1, 2, 3};
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const double pa = p[static_cast<std::size_t>(a)];
        const double pb = p[static_cast<std::size_t>(b)];
        if (std::abs(pa - pb) > 1e-12) return pa > pb;
        const auto& va = vec[static_cast<std::size_t>(a)];
        const auto& vb = vec[static_cast<std::size_t>(b)];
        for (int s = 0; s < 4; ++s) {
            if (std::abs(va(s) - vb(s)) <= 1e-9) continue;
            const double arg_a = std::arg(va(s));
            const double arg_b = std::arg(vb(s));
            if (std::abs(arg_a - arg_b) > 1e-9) return arg_a < arg_b;
            return std::abs(va(s)) > std::abs(vb(s));
        }
        return false;
    });

    int rank = 0;
    for (double value : p) {
        if (value > 1e-12) ++rank;
    }
    rank = std::max(rank, 1);
    const int ancillas = rank <= 1 ? 0 : (rank <= 2 ? 1 : 2);

    std::vector<Complex> amps(std::size_t{4} << ancillas, Complex{0.0, 0.0});
    for (int i = 0; i < rank; ++i) {
        const int src = order[static_cast<std::size_t>(i)];
        const double w = std::sqrt(p[static_cast<std::size_t>(src)]);
        for (std::uint64_t s = 0; s < 4; ++s) {
            amps[(s << ancillas) | static_cast<std::uint64_t>(i)] =
                w * vec[static_cast<std::size_t>(src)](static_cast<Eigen::Index>(s));
        }
    }
    return normalize(PureState(2 + ancillas, std::move(amps)));
}

double concurrence_r_mixed(const DensityMatrix& rho) {
    const PureState parent = canonical_purification(rho);
    return concurrence_r(parent, QubitSubset::front(2));
}

double real_rho_shortcut(const DensityMatrix& rho) {
    if (rho.num_qubits() != 2) throw BadDimension("shortcut is for 2-qubit matrices");
    const Eigen::MatrixXcd& m = rho.entries();
    if (m.imag().cwiseAbs().maxCoeff() >= 1e-12) {
        throw NotReal("matrix has imaginary entries; use the purification route");
    }
    // Ordered-basis labels 1..4 run uu, ud, du, dd; array indices descend.
    return 2.0 * std::abs(m(3, 0).real() - m(2, 1).real());
}

} // namespace qconc
