// Acceptance suite: exercises every top-level requirement end to end and
// prints one PASS/FAIL line per criterion. Exits nonzero when any fail.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qconc/codes.hpp"
#include "qconc/concurrence.hpp"
#include "qconc/ketparse.hpp"
#include "qconc/seeding.hpp"
#include "qconc/state.hpp"
#include "qconc/wootters.hpp"

#include "oracles.hpp"
#include "stats.hpp"
#include "test_util.hpp"

namespace fs = std::filesystem;
using namespace qconc;
using nlohmann::json;

namespace {

// Floor for the seed-1 rank correlation between C_R and C_W (rows with
// C_W > 0.05), established by a pilot run of the same harness at seed 2:
//   qconc compare --qubits 4 --samples 10000 --seed 2
// measured rho_s = 0.1753 over 37607 kept rows. The floor sits about seven
// standard errors (1/sqrt(n) ~ 0.005) below that, so a pass requires the
// same genuinely positive association rather than a seed coincidence.
// See README ("Pilot run") for the recorded pilot output.
constexpr double kCompareRankCorrelationFloor = 0.14;

int failures = 0;

void report(int id, const std::string& label, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << " [" << std::setw(2) << id << "] " << label;
    if (!detail.empty()) std::cout << "  (" << detail << ")";
    std::cout << std::endl;
    if (!ok) ++failures;
}

fs::path scratch_dir() {
    const fs::path dir = fs::temp_directory_path() / "qconc_acceptance";
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return std::move(buffer).str();
}

struct RunResult {
    int exit_code = -1;
    double seconds = 0.0;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    const fs::path out = scratch_dir() / ("stdout_" + std::to_string(counter++) + ".txt");
    const std::string command = std::string(QCONC_CLI_PATH) + " " + args + " > " + out.string() +
                                " 2> /dev/null";
    const auto start = std::chrono::steady_clock::now();
    const int status = std::system(command.c_str());
    const auto stop = std::chrono::steady_clock::now();
    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.seconds = std::chrono::duration<double>(stop - start).count();
    result.out = slurp(out);
    return result;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> fields;
        std::istringstream fields_in(line);
        std::string field;
        while (std::getline(fields_in, field, ',')) fields.push_back(field);
        rows.push_back(std::move(fields));
    }
    return rows;
}

// --------------------------------------------------------------------------

void criterion_1_steane_spectrum() {
    const fs::path out = scratch_dir() / "steane.json";
    const RunResult run = run_cli("codes steane0 --k 2,4,6 --out " + out.string());
    bool ok = run.exit_code == 0 && run.seconds < 1.0;
    std::string detail = "runtime " + std::to_string(run.seconds) + " s";
    if (ok) {
        const json doc = json::parse(slurp(out));
        const std::vector<std::vector<int>> expected_units = {
            {1, 2, 4, 7}, {1, 2, 5, 6}, {1, 3, 4, 6}, {1, 3, 5, 7},
            {2, 3, 4, 5}, {2, 3, 6, 7}, {4, 5, 6, 7}};
        int checked_sectors = 0;
        for (const json& rep : doc["reports"]) {
            const int k = rep["k"].get<int>();
            for (const json& sector : rep["sectors"]) {
                const double value = sector["value"].get<double>();
                const std::vector<int> indices = sector["indices"].get<std::vector<int>>();
                ++checked_sectors;
                if (k == 4 && std::find(expected_units.begin(), expected_units.end(), indices) !=
                                  expected_units.end()) {
                    ok = ok && std::abs(value - 1.0) < 1e-10;
                } else {
                    ok = ok && value < 1e-10;
                }
            }
        }
        ok = ok && checked_sectors == 21 + 35 + 7;
    }
    report(1, "steane0 spectrum: 21+28 zero sectors, 7 unit 4Q sectors, 6Q zero, < 1 s", ok, detail);
}

void criterion_2_shor_spectrum() {
    bool ok = true;
    double total_seconds = 0.0;
    for (const std::string code : {"shor0", "shor1"}) {
        const fs::path out = scratch_dir() / (code + ".json");
        const RunResult run = run_cli("codes " + code + " --k 2,4,6,8 --out " + out.string());
        total_seconds += run.seconds;
        ok = ok && run.exit_code == 0;
        if (!ok) break;
        const json doc = json::parse(slurp(out));
        const std::vector<int> expected_counts = {36, 126, 84, 9};
        int at = 0;
        for (const json& rep : doc["reports"]) {
            int sectors = 0;
            for (const json& sector : rep["sectors"]) {
                ok = ok && sector["value"].get<double>() < 1e-10;
                ++sectors;
            }
            ok = ok && sectors == expected_counts[static_cast<std::size_t>(at++)];
        }
        ok = ok && at == 4;
    }
    ok = ok && total_seconds < 5.0;
    report(2, "shor0/shor1 spectra vanish in all 36+126+84+9 sectors, < 5 s", ok,
           "runtime " + std::to_string(total_seconds) + " s");
}

void criterion_3_two_qubit_equivalence() {
    double worst_closed = 0.0;
    double worst_wootters = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const PureState psi = random_pure(2, derive_seed(301, static_cast<std::uint64_t>(i)));
        const double c_r = concurrence_r(psi, QubitSubset({1, 2}));
        worst_closed = std::max(worst_closed, std::abs(c_r - concurrence_2q_closed_form(psi)));
        const WoottersResult w = wootters_concurrence(DensityMatrix::from_pure(psi));
        worst_wootters = std::max(worst_wootters, std::abs(c_r - w.c_w));
    }
    report(3, "2-qubit equivalence: C_R vs closed form < 1e-12, vs C_W < 1e-9 (1e4 states)",
           worst_closed < 1e-12 && worst_wootters < 1e-9,
           "closed " + std::to_string(worst_closed) + ", wootters " + std::to_string(worst_wootters));
}

void criterion_4_symplectic_equivalence() {
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const PureState psi = random_pure(3, derive_seed(401, static_cast<std::uint64_t>(i)));
        for (const QubitSubset& pair :
             {QubitSubset({1, 2}), QubitSubset({1, 3}), QubitSubset({2, 3})}) {
            worst = std::max(worst,
                             std::abs(concurrence_symplectic(psi, pair) - concurrence_r(psi, pair)));
        }
    }
    report(4, "symplectic quadruplet form matches concurrence_r < 1e-12 (1e3 states, 3 pairs)",
           worst < 1e-12, "worst " + std::to_string(worst));
}

void criterion_5_fermionic_orthogonality() {
    std::mt19937_64 rng(501);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const int n = std::array<int, 3>{3, 5, 7}[i % 3];
        const PureState psi = random_pure(n, rng());
        std::vector<int> all(static_cast<std::size_t>(n));
        std::iota(all.begin(), all.end(), 1);
        std::shuffle(all.begin(), all.end(), rng);
        const int k = 1 + 2 * static_cast<int>(rng() % ((n + 1) / 2));
        all.resize(static_cast<std::size_t>(k));
        std::sort(all.begin(), all.end());
        const QubitSubset subset(all);
        worst = std::max(worst, std::abs(inner_product(conjugate_in_subset(psi, subset), psi)));
    }
    report(5, "odd sectors are orthogonal to their conjugates < 1e-12 (1e3 states, N in {3,5,7})",
           worst < 1e-12, "worst " + std::to_string(worst));
}

void criterion_6_werner_benchmark() {
    const Eigen::MatrixXcd bell = DensityMatrix::from_pure(test::bell_phi_plus()).entries();
    double worst_production = 0.0;
    double worst_literal = 0.0;
    for (int i = 0; i <= 100; ++i) {
        const double p = static_cast<double>(i) / 100.0;
        const DensityMatrix rho(2, p * bell + (1.0 - p) * Eigen::MatrixXcd::Identity(4, 4) / 4.0);
        const double expected = std::max(0.0, (3.0 * p - 1.0) / 2.0);
        worst_production =
            std::max(worst_production, std::abs(wootters_concurrence(rho).c_w - expected));
        const double literal = std::max(0.0, test::wootters_unclamped_literal(rho.entries()));
        worst_literal = std::max(worst_literal, std::abs(literal - expected));
    }
    report(6, "Werner states: c_w = max(0,(3p-1)/2) < 1e-9 on a 101-point grid, both routes",
           worst_production < 1e-9 && worst_literal < 1e-9,
           "production " + std::to_string(worst_production) + ", literal " +
               std::to_string(worst_literal));
}

void criterion_7_real_rho_shortcut() {
    std::mt19937_64 rng(701);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const DensityMatrix rho = test::random_real_density_matrix(rng);
        worst = std::max(worst, std::abs(concurrence_r_mixed(rho) - real_rho_shortcut(rho)));
    }
    report(7, "real-matrix shortcut 2|rho14 - rho23| matches purification route < 1e-9 (1e3)",
           worst < 1e-9, "worst " + std::to_string(worst));
}

void criterion_8_compare_reproduction() {
    const fs::path out = scratch_dir() / "compare_seed1.csv";
    const RunResult run = run_cli("compare --qubits 4 --samples 10000 --seed 1 --out " + out.string());
    bool ok = run.exit_code == 0;
    double rho_s = 0.0;
    std::size_t kept = 0;
    if (ok) {
        const auto rows = parse_csv(slurp(out));
        ok = rows.size() == 1 + 10000 * 6;
        std::vector<double> c_r;
        std::vector<double> c_w;
        for (std::size_t i = 1; i < rows.size() && ok; ++i) {
            const double r = std::stod(rows[i][2]);
            const double clamped = std::stod(rows[i][3]);
            const double unclamped = std::stod(rows[i][4]);
            ok = std::abs(clamped - std::max(0.0, unclamped)) < 2e-12;
            if (clamped > 0.05) {
                c_r.push_back(r);
                c_w.push_back(clamped);
            }
        }
        kept = c_r.size();
        rho_s = cli::spearman_rank_correlation(c_r, c_w);
        ok = ok && rho_s > kCompareRankCorrelationFloor;
    }
    report(8,
           "compare --samples 10000 --seed 1: rank correlation above the pilot floor, "
           "clamping consistent",
           ok,
           "rho_s " + std::to_string(rho_s) + " over " + std::to_string(kept) + " rows, floor " +
               std::to_string(kCompareRankCorrelationFloor));
}

void criterion_9_eof() {
    bool ok = eof(0.0) == 0.0 && eof(1.0) == 1.0;
    double previous = -1.0;
    for (int i = 0; i <= 1000; ++i) {
        const double value = eof(static_cast<double>(i) / 1000.0);
        ok = ok && value >= previous;
        previous = value;
    }
    ok = ok && std::abs(eof(0.5) - 0.3546) < 5e-4;
    report(9, "EOF: exact endpoints, monotone on 1000-point grid, eof(0.5) = 0.3546 +- 5e-4", ok,
           "eof(0.5) = " + std::to_string(eof(0.5)));
}

void criterion_10_purification() {
    std::mt19937_64 rng(1001);
    double worst_trace = 0.0;
    double worst_mixing = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const DensityMatrix rho = test::random_density_matrix(rng);
        const PureState parent = canonical_purification(rho);
        const DensityMatrix back =
            partial_trace(DensityMatrix::from_pure(parent), QubitSubset({1, 2}));
        worst_trace =
            std::max(worst_trace, (back.entries() - rho.entries()).cwiseAbs().maxCoeff());

        const double base = concurrence_r(parent, QubitSubset::front(2));
        const int anc_dim = 1 << (parent.num_qubits() - 2);
        for (int m = 0; m < 10; ++m) {
            const Eigen::MatrixXcd o = test::random_orthogonal(anc_dim, rng).cast<Complex>();
            const double mixed = concurrence_r(test::mix_ancillas(parent, o), QubitSubset::front(2));
            worst_mixing = std::max(worst_mixing, std::abs(mixed - base));
        }
    }
    report(10,
           "purification: parent reproduces rho < 1e-10; real-orthogonal ancilla mixing "
           "leaves C_R unchanged < 1e-10 (1e3 states x 10 mixings)",
           worst_trace < 1e-10 && worst_mixing < 1e-10,
           "trace " + std::to_string(worst_trace) + ", mixing " + std::to_string(worst_mixing));
}

void criterion_11_round_trip_and_determinism() {
    // Library round trips.
    std::mt19937_64 rng(1101);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const PureState psi = random_pure(4, rng());
        const KetParseResult ket_back = parse_ket(format_ket(psi));
        const KetParseResult amp_back = parse_amplitude_file(format_amplitude_file(psi));
        for (std::size_t j = 0; j < psi.dim(); ++j) {
            worst = std::max(worst, std::abs(ket_back.state[j] - psi[j]));
            worst = std::max(worst, std::abs(amp_back.state[j] - psi[j]));
        }
    }
    bool ok = worst < 1e-10;

    // Byte-reproducibility across runs and thread counts.
    const auto bytes_of = [](const std::string& args, const fs::path& out) {
        const RunResult run = run_cli(args + " --out " + out.string());
        return run.exit_code == 0 ? slurp(out) : std::string("<failed>");
    };
    const fs::path dir = scratch_dir();
    const std::string c1 = bytes_of("compare --samples 300 --seed 7 --threads 1", dir / "c1.csv");
    const std::string c2 = bytes_of("compare --samples 300 --seed 7 --threads 4", dir / "c2.csv");
    const std::string c3 = bytes_of("compare --samples 300 --seed 7 --threads 1", dir / "c3.csv");
    ok = ok && c1 == c2 && c1 == c3 && c1 != "<failed>";

    const std::string s1 = bytes_of("spectrum --samples 100 --seed 5 --threads 1", dir / "s1.csv");
    const std::string s2 = bytes_of("spectrum --samples 100 --seed 5 --threads 3", dir / "s2.csv");
    ok = ok && s1 == s2 && s1 != "<failed>";

    const std::string r1 = bytes_of("random --qubits 5 --seed 11", dir / "r1.ket");
    const std::string r2 = bytes_of("random --qubits 5 --seed 11", dir / "r2.ket");
    ok = ok && r1 == r2 && r1 != "<failed>";

    report(11, "ket/file round trips < 1e-10; seeded commands byte-identical across runs/threads",
           ok, "round-trip worst " + std::to_string(worst));
}

} // namespace

int main() {
    std::cout << "qconc acceptance suite" << std::endl;
    criterion_1_steane_spectrum();
    criterion_2_shor_spectrum();
    criterion_3_two_qubit_equivalence();
    criterion_4_symplectic_equivalence();
    criterion_5_fermionic_orthogonality();
    criterion_6_werner_benchmark();
    criterion_7_real_rho_shortcut();
    criterion_8_compare_reproduction();
    criterion_9_eof();
    criterion_10_purification();
    criterion_11_round_trip_and_determinism();

    if (failures == 0) {
        std::cout << "all criteria passed" << std::endl;
        return 0;
    }
    std::cout << failures << " criteria failed" << std::endl;
    return 1;
}
