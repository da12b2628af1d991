#pragma once

#include <string>
#include <string_view>

#include "qconc/state.hpp"

namespace qconc {

/// Parsed state plus input metadata. `norm_warning` is set when the raw
/// amplitude vector differed from unit norm by more than 1e-6 before the
/// final normalization.
struct KetParseResult {
    PureState state;
    bool norm_warning = false;
    double raw_norm = 0.0;
};

/// Parses a ket superposition such as "1/sqrt(2)|00> + 1/sqrt(2)|11>".
///
/// Grammar:
///   expr   := sign? term (("+" | "-") term)*
///   term   := coeff? group | coeff? ket
///   group  := "(" expr ")"
///   ket    := "|" bitstr ">"
///   bitstr := ("0"|"1")+            (or ("u"|"d")+ when spin_letters)
///   coeff  := factor (("/" | "*") factor)* "*"?
///   factor := number | "sqrt" "(" number ")" | "i" | "-" factor
///
/// Duplicate basis strings merge by coefficient addition; the result is
/// normalized. Bit 1 means spin up; the leftmost character is qubit 1.
/// Errors: SyntaxError (with byte offset), WidthMismatch, EmptyExpression,
/// CapacityExceeded, ZeroState (all coefficients cancel).
KetParseResult parse_ket(std::string_view text, bool spin_letters = false,
                         int max_qubits = kDefaultMaxQubits);

/// Renders terms with |amplitude| > threshold (ascending index order),
/// coefficients as decimal literals with 12 significant digits. A complex
/// amplitude emits separate real and imaginary ("x*i|...>" ) terms, which
/// parse_ket merges back. Requires 0 <= threshold < 1 (OutOfRange).
std::string format_ket(const PureState& state, double threshold = 0.0);

/// Amplitude-file format: header "qubits N", then lines
/// "<index-bitstring> <re> <im>". '#' starts a comment; omitted indices are
/// zero. Same normalization/warning semantics as parse_ket.
KetParseResult parse_amplitude_file(std::string_view text, int max_qubits = kDefaultMaxQubits);

std::string format_amplitude_file(const PureState& state, double threshold = 0.0);

/// Auto-detects the two formats: text whose first significant token is
/// "qubits" is an amplitude file, anything else a ket expression.
KetParseResult parse_state_auto(std::string_view text, bool spin_letters = false,
                                int max_qubits = kDefaultMaxQubits);

} // namespace qconc
