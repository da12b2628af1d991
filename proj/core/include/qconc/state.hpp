#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qconc/errors.hpp"

namespace qconc {

using Complex = std::complex<double>;

// Dense amplitude vectors: 16 qubits is already a 65536-entry state.
inline constexpr int kDefaultMaxQubits = 16;

/// A strictly increasing set of 1-based qubit indices.
///
/// Convention used throughout: qubit 1 occupies the most significant bit of
/// an amplitude array index, and bit value 1 means spin up (m = +1/2).
/// So for N = 2 the array order is |dd>, |du>, |ud>, |uu>.
class QubitSubset {
public:
    QubitSubset() = default;
    explicit QubitSubset(std::vector<int> indices); // throws BadSubset
    QubitSubset(std::initializer_list<int> indices);

    /// {1, 2, ..., k}.
    static QubitSubset front(int k);

    /// Parses "1247" (single digits) or "1,2,4,7" / "1-10-12".
    static QubitSubset parse(const std::string& text);

    int size() const noexcept { return static_cast<int>(indices_.size()); }
    bool empty() const noexcept { return indices_.empty(); }
    const std::vector<int>& indices() const noexcept { return indices_; }
    bool contains(int qubit) const;

    /// The remaining qubits of an N-qubit system, in increasing order.
    QubitSubset complement(int num_qubits) const;

    /// Throws BadSubset unless nonempty and every index is in [1, num_qubits].
    void require_valid_for(int num_qubits) const;

    /// OR of the index bits this subset selects in an N-qubit register.
    std::uint64_t bit_mask(int num_qubits) const;

    /// "1247" while all indices are single digits, "1-10-12" otherwise.
    std::string str() const;

    friend bool operator==(const QubitSubset&, const QubitSubset&) = default;
    friend auto operator<=>(const QubitSubset&, const QubitSubset&) = default;

private:
    std::vector<int> indices_;
};

/// N-qubit pure state stored as 2^N complex amplitudes.
///
/// Index bit (N - j) carries qubit j, so qubit 1 is the most significant bit
/// and basis string "10...0" (qubit 1 up, rest down) sits at index 2^(N-1).
/// Construction validates the shape only; use normalize() to impose unit norm.
class PureState {
public:
    PureState(int num_qubits, std::vector<Complex> amplitudes); // throws BadDimension

    /// Basis state |index> (unit amplitude at one slot).
    static PureState basis(int num_qubits, std::uint64_t index);

    int num_qubits() const noexcept { return num_qubits_; }
    std::size_t dim() const noexcept { return amplitudes_.size(); }
    const std::vector<Complex>& amplitudes() const noexcept { return amplitudes_; }
    const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }

    double norm() const;

private:
    int num_qubits_ = 0;
    std::vector<Complex> amplitudes_;
};

/// Scales to unit norm; direction preserved. Throws ZeroState when the norm
/// is numerically zero (below 1e-300).
PureState normalize(const PureState& state);

/// <a|b> = sum conj(a_i) b_i. Conjugate-linear in a, linear in b.
Complex inner_product(const PureState& a, const PureState& b); // DimensionMismatch

/// |a> (x) |b>; the qubits of `a` come first. Throws CapacityExceeded when the
/// combined qubit count exceeds `max_qubits`.
PureState tensor(const PureState& a, const PureState& b, int max_qubits = kDefaultMaxQubits);

/// Relabels qubits: qubit j of the input becomes qubit perm[j-1] of the output.
/// `perm` must be a bijection of [1..N] (throws BadPermutation).
PureState permute_qubits(const PureState& state, const std::vector<int>& perm);

/// Haar-random pure state: 2^N i.i.d. standard complex Gaussian amplitudes,
/// normalized. Deterministic for a fixed seed (mt19937_64 + explicit
/// Box-Muller, so the byte stream does not depend on the C++ runtime).
PureState random_pure(int num_qubits, std::uint64_t seed, int max_qubits = kDefaultMaxQubits);

/// Hermitian unit-trace PSD matrix over N qubits, same index convention as
/// PureState. Construction validates the shape; require_valid() checks the
/// density-matrix properties.
class DensityMatrix {
public:
    DensityMatrix(int num_qubits, Eigen::MatrixXcd entries); // throws BadDimension

    /// |psi><psi|.
    static DensityMatrix from_pure(const PureState& state);

    /// Maximally mixed state I / 2^N.
    static DensityMatrix maximally_mixed(int num_qubits);

    int num_qubits() const noexcept { return num_qubits_; }
    Eigen::Index dim() const noexcept { return entries_.rows(); }
    const Eigen::MatrixXcd& entries() const noexcept { return entries_; }

    /// Hermiticity within `hermitian_tol`, trace 1 within `trace_tol`, and all
    /// eigenvalues >= `eigen_floor`. Throws NotDensityMatrix on failure.
    void require_valid(double hermitian_tol = 1e-12, double trace_tol = 1e-12,
                       double eigen_floor = -1e-10) const;

private:
    int num_qubits_ = 0;
    Eigen::MatrixXcd entries_;
};

/// Marginal over the qubits not in `keep`. The kept qubits retain their
/// relative order and are renumbered 1..|keep|.
DensityMatrix partial_trace(const DensityMatrix& rho, const QubitSubset& keep); // BadSubset

/// The three equivalent 2-qubit entanglement measures, evaluated on the
/// one-qubit reduced matrix: von Neumann entropy (base 2), 1 - Tr rho^2,
/// and det rho. Ranges [0,1], [0,1/2], [0,1/4].
struct TwoQubitMeasures {
    double e_n = 0.0;
    double e_tr = 0.0;
    double e_d = 0.0;
};

TwoQubitMeasures measures_2q(const DensityMatrix& rho_reduced); // BadDimension if not 2x2

/// h(x) = -x log2 x - (1-x) log2 (1-x), with h(0) = h(1) = 0.
double binary_entropy(double x);

} // namespace qconc
