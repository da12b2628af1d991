#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qconc/concurrence.hpp"
#include "qconc/state.hpp"

namespace qconc {

/// Shor 9-qubit logical state: the tensor cube of (|000> + |111>)/sqrt(2) for
/// logical 0, of (|000> - |111>)/sqrt(2) for logical 1 (0 = down, 1 = up).
PureState shor_code(int logical); // UnknownCode unless logical is 0 or 1

/// Steane 7-qubit logical zero: equal superposition (1/sqrt(8)) over the
/// strings 0000000, 1010101, 1100110, 0001111, 0110011, 1011010, 0111100,
/// 1101001 (leftmost symbol = qubit 1).
PureState steane_zero();

struct CodeSummaryRow {
    int k = 0;
    int num_zero_sectors = 0;   // value < 1e-10
    int num_unit_sectors = 0;   // |value - 1| < 1e-10
    double max_other_value = 0; // largest value among the remaining sectors
};

struct CodeReport {
    std::string code_name;
    PureState state;
    std::vector<std::pair<int, ConcurrenceReport>> per_k;
    std::vector<CodeSummaryRow> summary;
};

/// Full per-sector concurrence spectra of one of the built-in code states.
/// code_name is "shor0", "shor1" or "steane0"; every k must be even and <= N.
CodeReport verify_code(const std::string& code_name, const std::vector<int>& ks);

} // namespace qconc
