#include "qconc/codes.hpp"

#include <cmath>

namespace qconc {

namespace {

constexpr double kZeroTol = 1e-10;
constexpr double kUnitTol = 1e-10;

PureState ghz3_block(int sign) {
    const double w = 1.0 / std::sqrt(2.0);
    std::vector<Complex> amps(8, Complex{0.0, 0.0});
    amps[0] = Complex{w, 0.0};                          // |000>
    amps[7] = Complex{sign >= 0 ? w : -w, 0.0};         // |111>
    return PureState(3, std::move(amps));
}

} // namespace

PureState shor_code(int logical) {
    if (logical != 0 && logical != 1) {
        throw UnknownCode("shor logical bit must be 0 or 1");
    }
    const PureState block = ghz3_block(logical == 0 ? +1 : -1);
    return tensor(tensor(block, block), block);
}

PureState steane_zero() {
    static constexpr std::uint64_t kStrings[] = {
        0b0000000, 0b1010101, 0b1100110, 0b0001111,
        0b0110011, 0b1011010, 0b0111100, 0b1101001,
    };
    const double w = 1.0 / std::sqrt(8.0);
    std::vector<Complex> amps(128, Complex{0.0, 0.0});
    for (std::uint64_t s : kStrings) amps[s] = Complex{w, 0.0};
    return PureState(7, std::move(amps));
}

CodeReport verify_code(const std::string& code_name, const std::vector<int>& ks) {
    PureState state = [&] {
        if (code_name == "shor0") return shor_code(0);
        if (code_name == "shor1") return shor_code(1);
        if (code_name == "steane0") return steane_zero();
        throw UnknownCode("unknown code '" + code_name + "' (expected shor0, shor1 or steane0)");
    }();

    CodeReport report{code_name, std::move(state), {}, {}};
    for (int k : ks) {
        ConcurrenceReport sectors = all_concurrences(report.state, k);

        CodeSummaryRow row;
        row.k = k;
        for (const auto& [subset, value] : sectors.entries) {
            if (value < kZeroTol) {
                ++row.num_zero_sectors;
            } else if (std::abs(value - 1.0) < kUnitTol) {
                ++row.num_unit_sectors;
            } else {
                row.max_other_value = std::max(row.max_other_value, value);
            }
        }
        report.summary.push_back(row);
        report.per_k.emplace_back(k, std::move(sectors));
    }
    return report;
}

} // namespace qconc
