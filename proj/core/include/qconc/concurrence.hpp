#pragma once

#include <utility>
#include <vector>

#include "qconc/state.hpp"

namespace qconc {

/// What concurrence_r does with an odd-size subset. Odd sectors are exactly
/// orthogonal to their conjugates, so the value would always be 0; rejecting
/// makes the caller opt in to that degenerate answer.
enum class OddSubsetPolicy { reject, zero };

/// Partial conjugation of `state` on `subset`: the amplitude at the basis
/// string with the subset spins negated is phase * conj(original amplitude),
/// where phase = e^{i pi sum_{j in subset} m_j} and m_j = +-1/2. The phase is
/// evaluated exactly as an integer power of i. Unit norm is preserved.
PureState conjugate_in_subset(const PureState& state, const QubitSubset& subset); // BadSubset

/// |<conjugated | state>| in [0, 1]. Requires |subset| even and >= 2;
/// odd sizes throw OddSubset unless policy is OddSubsetPolicy::zero.
double concurrence_r(const PureState& state, const QubitSubset& subset,
                     OddSubsetPolicy policy = OddSubsetPolicy::reject);

/// 2 |a_uu a_dd - a_ud a_du| for a 2-qubit state; equals
/// concurrence_r(state, {1,2}). Throws BadDimension when N != 2.
double concurrence_2q_closed_form(const PureState& state);

/// Symplectic quadruplet form: amplitudes are split into four vectors indexed
/// by the pair's spin configuration and the value is 2 |V4.V1 - V3.V2| with
/// unconjugated dot products. Equals concurrence_r(state, pair).
double concurrence_symplectic(const PureState& state, const QubitSubset& pair); // BadSubset

/// Concurrence values for every k-subset, in lexicographic order.
struct ConcurrenceReport {
    int num_qubits = 0;
    int sector_size = 0;
    std::vector<std::pair<QubitSubset, double>> entries;

    /// Pointer to the value for `sector`, or nullptr when absent.
    const double* find(const QubitSubset& sector) const;
};

/// One entry per k-subset (C(N,k) of them). Each sector is evaluated by
/// permuting its qubits to the front and applying concurrence_r there; the
/// direct-evaluation route must agree by permutation covariance.
ConcurrenceReport all_concurrences(const PureState& state, int k); // OddSubset, BadDimension

/// Canonical parent state of a 2-qubit density matrix: sum_i sqrt(p_i)
/// |psi_i>|i> over ceil(log2(rank)) ancilla qubits, eigenvalues descending,
/// each eigenvector's largest-magnitude component made real positive.
/// Tracing out the ancillas recovers rho.
PureState canonical_purification(const DensityMatrix& rho); // NotDensityMatrix

/// Concurrence of a mixed 2-qubit state through its canonical parent:
/// concurrence_r(canonical_purification(rho), {1,2}).
double concurrence_r_mixed(const DensityMatrix& rho);

/// 2 |rho_14 - rho_23| in the ordered basis (uu, ud, du, dd); valid only when
/// every entry is real (max imaginary part < 1e-12, else NotReal).
double real_rho_shortcut(const DensityMatrix& rho);

} // namespace qconc
