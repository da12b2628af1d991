#include "qconc/state.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "qconc/seeding.hpp"

namespace qconc {

namespace {

bool all_single_digits(const std::vector<int>& indices) {
    return std::all_of(indices.begin(), indices.end(), [](int q) { return q <= 9; });
}

std::uint64_t pow2_dim(int num_qubits) {
    return std::uint64_t{1} << num_qubits;
}

} // namespace

QubitSubset::QubitSubset(std::vector<int> indices) : indices_(std::move(indices)) {
    for (std::size_t i = 0; i < indices_.size(); ++i) {
        if (indices_[i] < 1) {
            throw BadSubset("qubit indices must be >= 1");
        }
        if (i > 0 && indices_[i] <= indices_[i - 1]) {
            throw BadSubset("qubit indices must be strictly increasing");
        }
    }
}

QubitSubset::QubitSubset(std::initializer_list<int> indices)
    : QubitSubset(std::vector<int>(indices)) {}

QubitSubset QubitSubset::front(int k) {
    std::vector<int> idx(static_cast<std::size_t>(std::max(k, 0)));
    for (int j = 0; j < k; ++j) idx[static_cast<std::size_t>(j)] = j + 1;
    return QubitSubset(std::move(idx));
}

QubitSubset QubitSubset::parse(const std::string& text) {
    if (text.empty()) throw BadSubset("empty sector");
    std::vector<int> idx;
    if (text.find(',') != std::string::npos || text.find('-') != std::string::npos) {
        std::string token;
        std::istringstream in(text);
        while (std::getline(in, token, text.find(',') != std::string::npos ? ',' : '-')) {
            if (token.empty()) throw BadSubset("empty sector component in '" + text + "'");
            std::size_t used = 0;
            int q = 0;
            try {
                q = std::stoi(token, &used);
            } catch (const std::exception&) {
                throw BadSubset("bad sector component '" + token + "'");
            }
            if (used != token.size()) throw BadSubset("bad sector component '" + token + "'");
            idx.push_back(q);
        }
    } else {
        for (char c : text) {
            if (c < '0' || c > '9') throw BadSubset("bad sector character '" + std::string(1, c) + "'");
            idx.push_back(c - '0');
        }
    }
    std::sort(idx.begin(), idx.end());
    return QubitSubset(std::move(idx)); // duplicate or <1 indices rejected there
}

bool QubitSubset::contains(int qubit) const {
    return std::binary_search(indices_.begin(), indices_.end(), qubit);
}

QubitSubset QubitSubset::complement(int num_qubits) const {
    std::vector<int> rest;
    rest.reserve(static_cast<std::size_t>(num_qubits) - indices_.size());
    for (int q = 1; q <= num_qubits; ++q) {
        if (!contains(q)) rest.push_back(q);
    }
    return QubitSubset(std::move(rest));
}

void QubitSubset::require_valid_for(int num_qubits) const {
    if (indices_.empty()) throw BadSubset("subset must be nonempty");
    if (indices_.back() > num_qubits) {
        throw BadSubset("subset index " + std::to_string(indices_.back()) + " exceeds qubit count " +
                        std::to_string(num_qubits));
    }
}

std::uint64_t QubitSubset::bit_mask(int num_qubits) const {
    std::uint64_t mask = 0;
    for (int q : indices_) mask |= std::uint64_t{1} << (num_qubits - q);
    return mask;
}

std::string QubitSubset::str() const {
    std::string out;
    const bool compact = all_single_digits(indices_);
    for (std::size_t i = 0; i < indices_.size(); ++i) {
        if (!compact && i > 0) out += '-';
        out += std::to_string(indices_[i]);
    }
    return out;
}

PureState::PureState(int num_qubits, std::vector<Complex> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
    if (num_qubits_ < 1) throw BadDimension("a state needs at least one qubit");
    if (num_qubits_ > 62) throw BadDimension("qubit count out of representable range");
    if (amplitudes_.size() != pow2_dim(num_qubits_)) {
        throw BadDimension("amplitude vector has length " + std::to_string(amplitudes_.size()) +
                           ", expected 2^" + std::to_string(num_qubits_));
    }
}

PureState PureState::basis(int num_qubits, std::uint64_t index) {
    if (num_qubits < 1 || num_qubits > 62 || index >= pow2_dim(num_qubits)) {
        throw BadDimension("basis index out of range");
    }
    std::vector<Complex> amps(pow2_dim(num_qubits), Complex{0.0, 0.0});
    amps[index] = Complex{1.0, 0.0};
    return PureState(num_qubits, std::move(amps));
}

double PureState::norm() const {
    double sum = 0.0;
    for (const Complex& a : amplitudes_) sum += std::norm(a);
    return std::sqrt(sum);
}

PureState normalize(const PureState& state) {
    const double n = state.norm();
    if (n < 1e-300) throw ZeroState("cannot normalize a zero state");
    std::vector<Complex> amps = state.amplitudes();
    for (Complex& a : amps) a /= n;
    return PureState(state.num_qubits(), std::move(amps));
}

Complex inner_product(const PureState& a, const PureState& b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw DimensionMismatch("inner product needs equal qubit counts (" +
                                std::to_string(a.num_qubits()) + " vs " +
                                std::to_string(b.num_qubits()) + ")");
    }
    Complex sum{0.0, 0.0};
    for (std::size_t i = 0; i < a.dim(); ++i) sum += std::conj(a[i]) * b[i];
    return sum;
}

PureState tensor(const PureState& a, const PureState& b, int max_qubits) {
    const int total = a.num_qubits() + b.num_qubits();
    if (total > max_qubits) {
        throw CapacityExceeded("tensor product of " + std::to_string(total) +
                               " qubits exceeds the maximum of " + std::to_string(max_qubits));
    }
    std::vector<Complex> amps(pow2_dim(total));
    const std::size_t dim_b = b.dim();
    for (std::size_t ia = 0; ia < a.dim(); ++ia) {
        for (std::size_t ib = 0; ib < dim_b; ++ib) {
            amps[(ia << b.num_qubits()) | ib] = a[ia] * b[ib];
        }
    }
    return PureState(total, std::move(amps));
}

PureState permute_qubits(const PureState& state, const std::vector<int>& perm) {
    const int n = state.num_qubits();
    if (static_cast<int>(perm.size()) != n) {
        throw BadPermutation("permutation has " + std::to_string(perm.size()) + " entries, state has " +
                             std::to_string(n) + " qubits");
    }
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int p : perm) {
        if (p < 1 || p > n || seen[static_cast<std::size_t>(p - 1)]) {
            throw BadPermutation("permutation is not a bijection of [1.." + std::to_string(n) + "]");
        }
        seen[static_cast<std::size_t>(p - 1)] = true;
    }

    // Qubit j (bit n-j) moves to position perm[j-1] (bit n-perm[j-1]).
    std::vector<int> from_bit(static_cast<std::size_t>(n));
    std::vector<int> to_bit(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        from_bit[static_cast<std::size_t>(j - 1)] = n - j;
        to_bit[static_cast<std::size_t>(j - 1)] = n - perm[static_cast<std::size_t>(j - 1)];
    }

    std::vector<Complex> amps(state.dim());
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        std::uint64_t out = 0;
        for (int j = 0; j < n; ++j) {
            out |= ((i >> from_bit[static_cast<std::size_t>(j)]) & 1u) << to_bit[static_cast<std::size_t>(j)];
        }
        amps[out] = state[i];
    }
    return PureState(n, std::move(amps));
}

PureState random_pure(int num_qubits, std::uint64_t seed, int max_qubits) {
    if (num_qubits < 1 || num_qubits > max_qubits) {
        throw CapacityExceeded("qubit count " + std::to_string(num_qubits) + " outside [1, " +
                               std::to_string(max_qubits) + "]");
    }
    std::mt19937_64 rng(seed);
    // Explicit Box-Muller keeps the amplitude stream identical across C++
    // runtimes; std::normal_distribution is implementation-defined.
    auto uniform_open = [&rng]() { return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53; };
    auto uniform_half = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

    std::vector<Complex> amps(pow2_dim(num_qubits));
    for (Complex& a : amps) {
        const double r = std::sqrt(-2.0 * std::log(uniform_open()));
        const double phi = 2.0 * std::numbers::pi * uniform_half();
        a = Complex{r * std::cos(phi), r * std::sin(phi)};
    }
    return normalize(PureState(num_qubits, std::move(amps)));
}

DensityMatrix::DensityMatrix(int num_qubits, Eigen::MatrixXcd entries)
    : num_qubits_(num_qubits), entries_(std::move(entries)) {
    if (num_qubits_ < 1 || num_qubits_ > 30) throw BadDimension("density matrix needs 1..30 qubits");
    const auto d = static_cast<Eigen::Index>(pow2_dim(num_qubits_));
    if (entries_.rows() != d || entries_.cols() != d) {
        throw BadDimension("density matrix must be " + std::to_string(d) + "x" + std::to_string(d));
    }
}

DensityMatrix DensityMatrix::from_pure(const PureState& state) {
    const auto d = static_cast<Eigen::Index>(state.dim());
    Eigen::Map<const Eigen::VectorXcd> v(state.amplitudes().data(), d);
    return DensityMatrix(state.num_qubits(), v * v.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int num_qubits) {
    const auto d = static_cast<Eigen::Index>(pow2_dim(num_qubits));
    return DensityMatrix(num_qubits,
                         Eigen::MatrixXcd::Identity(d, d) / static_cast<double>(d));
}

void DensityMatrix::require_valid(double hermitian_tol, double trace_tol, double eigen_floor) const {
    const double herm = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
    if (herm > hermitian_tol) {
        throw NotDensityMatrix("matrix is not Hermitian (deviation " + std::to_string(herm) + ")");
    }
    const Complex tr = entries_.trace();
    if (std::abs(tr - Complex{1.0, 0.0}) > trace_tol) {
        throw NotDensityMatrix("trace differs from 1");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(entries_, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw NotDensityMatrix("eigendecomposition failed");
    if (solver.eigenvalues().minCoeff() < eigen_floor) {
        throw NotDensityMatrix("matrix has a negative eigenvalue");
    }
}

DensityMatrix partial_trace(const DensityMatrix& rho, const QubitSubset& keep) {
    const int n = rho.num_qubits();
    keep.require_valid_for(n);

    const int k = keep.size();
    const int t = n - k;
    const QubitSubset traced = keep.complement(n);

    // Scatter tables: subset-local index -> bits at the subset's positions.
    auto scatter_table = [n](const QubitSubset& subset) {
        const auto& qs = subset.indices();
        const std::size_t size = std::size_t{1} << qs.size();
        std::vector<std::uint64_t> table(size, 0);
        for (std::uint64_t x = 0; x < size; ++x) {
            std::uint64_t bits = 0;
            for (std::size_t j = 0; j < qs.size(); ++j) {
                const std::uint64_t bit = (x >> (qs.size() - 1 - j)) & 1u;
                bits |= bit << (n - qs[j]);
            }
            table[x] = bits;
        }
        return table;
    };
    const std::vector<std::uint64_t> keep_bits = scatter_table(keep);
    const std::vector<std::uint64_t> traced_bits =
        t > 0 ? scatter_table(traced) : std::vector<std::uint64_t>{0};

    const auto dim_out = static_cast<Eigen::Index>(std::uint64_t{1} << k);
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim_out, dim_out);
    for (Eigen::Index a = 0; a < dim_out; ++a) {
        for (Eigen::Index b = 0; b < dim_out; ++b) {
            Complex sum{0.0, 0.0};
            for (std::uint64_t r : traced_bits) {
                const auto row = static_cast<Eigen::Index>(keep_bits[static_cast<std::size_t>(a)] | r);
                const auto col = static_cast<Eigen::Index>(keep_bits[static_cast<std::size_t>(b)] | r);
                sum += rho.entries()(row, col);
            }
            out(a, b) = sum;
        }
    }
    return DensityMatrix(k, std::move(out));
}

double binary_entropy(double x) {
    if (x <= 0.0 || x >= 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

TwoQubitMeasures measures_2q(const DensityMatrix& rho_reduced) {
    if (rho_reduced.dim() != 2) throw BadDimension("measures_2q expects a one-qubit density matrix");
    const Eigen::MatrixXcd& m = rho_reduced.entries();

    TwoQubitMeasures out;
    out.e_tr = 1.0 - (std::norm(m(0, 0)) + std::norm(m(0, 1)) + std::norm(m(1, 0)) + std::norm(m(1, 1)));
    out.e_d = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)).real();

    // Eigenvalues from trace and determinant; PSD noise in [-1e-10, 0) clamps to 0.
    const double tr = (m(0, 0) + m(1, 1)).real();
    const double disc = std::max(0.0, tr * tr - 4.0 * out.e_d);
    double lambda = 0.5 * (tr + std::sqrt(disc));
    lambda = std::clamp(lambda, 0.0, 1.0);
    out.e_n = binary_entropy(lambda);
    return out;
}

} // namespace qconc
