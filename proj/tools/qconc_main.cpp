// qconc: computes subset concurrences of multiqubit pure states, benchmarks
// them against the Wootters concurrence / EOF stack, and drives the seeded
// random-state experiment harnesses (CSV output).

#include <atomic>
#include <cstdint>
#include <exception>
#include <iostream>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qconc/codes.hpp"
#include "qconc/concurrence.hpp"
#include "qconc/ketparse.hpp"
#include "qconc/seeding.hpp"
#include "qconc/state.hpp"
#include "qconc/wootters.hpp"

#include "io_util.hpp"
#include "stats.hpp"

namespace {

using namespace qconc;
using cli::fmt12;
using nlohmann::json;

// Rounds through the 12-significant-digit text form so JSON output carries
// the same precision as the CSV/table writers.
double round12(double value) {
    return std::stod(cli::fmt12(value));
}

struct StateOptions {
    std::string ket;
    std::string file;
    bool spin_letters = false;
    int max_qubits = kDefaultMaxQubits;
};

void add_state_options(CLI::App* cmd, StateOptions& opts) {
    auto* ket = cmd->add_option("--ket", opts.ket, "State as a ket expression");
    auto* file = cmd->add_option("--file", opts.file, "State file (ket expression or amplitude file)");
    ket->excludes(file);
    cmd->add_flag("--spin-letters", opts.spin_letters, "Kets use u/d instead of 1/0");
    cmd->add_option("--max-qubits", opts.max_qubits, "Maximum allowed qubit count");
}

PureState load_state(const StateOptions& opts) {
    if (opts.ket.empty() && opts.file.empty()) {
        throw DomainError("provide a state via --ket or --file");
    }
    KetParseResult parsed = opts.ket.empty()
                                ? parse_state_auto(cli::read_file(opts.file), opts.spin_letters,
                                                   opts.max_qubits)
                                : parse_ket(opts.ket, opts.spin_letters, opts.max_qubits);
    if (parsed.norm_warning) {
        std::cerr << "warning: input norm was " << fmt12(parsed.raw_norm)
                  << "; the state has been normalized\n";
    }
    return std::move(parsed.state);
}

// Main output goes to --out when given (side text to stdout), otherwise to
// stdout (side text to stderr, keeping piped output clean).
void emit(const std::string& out_path, const std::string& content, const std::string& side = {}) {
    if (!out_path.empty()) {
        cli::write_file(out_path, content);
        if (!side.empty()) std::cout << side;
    } else {
        std::cout << content;
        if (!side.empty()) std::cerr << side;
    }
}

void run_indexed(std::uint64_t count, int threads, const std::function<void(std::uint64_t)>& body) {
    threads = std::max(threads, 1);
    if (threads == 1) {
        for (std::uint64_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            while (true) {
                const std::uint64_t i = next.fetch_add(1);
                if (i >= count) break;
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    next.store(count);
                    break;
                }
            }
        });
    }
    for (std::thread& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

std::vector<QubitSubset> pair_sectors(int n) {
    std::vector<QubitSubset> pairs;
    for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) pairs.emplace_back(std::vector<int>{a, b});
    }
    return pairs;
}

json sectors_to_json(const ConcurrenceReport& report) {
    json sectors = json::array();
    for (const auto& [subset, value] : report.entries) {
        sectors.push_back({{"indices", subset.indices()}, {"value", round12(value)}});
    }
    return sectors;
}

// ---------------------------------------------------------------------------
// concur

struct ConcurOptions {
    StateOptions state;
    std::vector<int> ks;
    std::string only;
    std::string format = "table";
    std::string out;
};

void cmd_concur(const ConcurOptions& opts) {
    const PureState state = load_state(opts.state);

    std::vector<ConcurrenceReport> reports;
    if (!opts.only.empty()) {
        const QubitSubset sector = QubitSubset::parse(opts.only);
        if (!opts.ks.empty() &&
            std::find(opts.ks.begin(), opts.ks.end(), sector.size()) == opts.ks.end()) {
            throw DomainError("--only sector has size " + std::to_string(sector.size()) +
                              ", which is not in --k");
        }
        ConcurrenceReport single;
        single.num_qubits = state.num_qubits();
        single.sector_size = sector.size();
        single.entries.emplace_back(sector, concurrence_r(state, sector));
        reports.push_back(std::move(single));
    } else {
        if (opts.ks.empty()) throw DomainError("provide sector sizes via --k");
        for (int k : opts.ks) reports.push_back(all_concurrences(state, k));
    }

    std::string text;
    if (opts.format == "json") {
        json doc;
        doc["num_qubits"] = state.num_qubits();
        doc["reports"] = json::array();
        for (const ConcurrenceReport& report : reports) {
            doc["reports"].push_back({{"k", report.sector_size}, {"sectors", sectors_to_json(report)}});
        }
        text = doc.dump(2) + "\n";
    } else if (opts.format == "csv") {
        text = "k,sector,c_r\n";
        for (const ConcurrenceReport& report : reports) {
            for (const auto& [sector, value] : report.entries) {
                text += std::to_string(report.sector_size) + "," + sector.str() + "," + fmt12(value) + "\n";
            }
        }
    } else if (opts.format == "table") {
        text = "qubits: " + std::to_string(state.num_qubits()) + "\n";
        for (const ConcurrenceReport& report : reports) {
            text += "k=" + std::to_string(report.sector_size) + "\n";
            text += "sector  c_r\n";
            for (const auto& [sector, value] : report.entries) {
                text += sector.str() + "  " + fmt12(value) + "\n";
            }
        }
    } else {
        throw DomainError("unknown format '" + opts.format + "'");
    }
    emit(opts.out, text);
}

// ---------------------------------------------------------------------------
// compare

struct CompareOptions {
    int qubits = 4;
    std::uint64_t samples = 1000;
    std::uint64_t seed = 0;
    std::string out;
    int threads = 1;
};

void cmd_compare(const CompareOptions& opts) {
    if (opts.samples < 1) throw DomainError("--samples must be >= 1");
    if (opts.qubits < 2) throw DomainError("--qubits must be >= 2");
    const std::vector<QubitSubset> pairs = pair_sectors(opts.qubits);

    struct SampleOut {
        std::string text;
        std::vector<std::pair<double, double>> cr_cw; // (c_r, c_w_clamped)
    };
    std::vector<SampleOut> rows(opts.samples);

    run_indexed(opts.samples, opts.threads, [&](std::uint64_t id) {
        const PureState psi = random_pure(opts.qubits, derive_seed(opts.seed, id));
        const DensityMatrix rho = DensityMatrix::from_pure(psi);
        SampleOut& out = rows[id];
        for (const QubitSubset& pair : pairs) {
            const double c_r = concurrence_r(psi, pair);
            const DensityMatrix reduced = partial_trace(rho, pair);
            const WoottersResult w = wootters_concurrence(reduced);
            const TwoQubitMeasures m = measures_2q(partial_trace(reduced, QubitSubset({1})));
            out.text += std::to_string(id) + "," + pair.str() + "," + fmt12(c_r) + "," +
                        fmt12(w.c_w) + "," + fmt12(w.c_w_unclamped) + "," + fmt12(m.e_n) + "," +
                        fmt12(m.e_tr) + "," + fmt12(m.e_d) + "\n";
            out.cr_cw.emplace_back(c_r, w.c_w);
        }
    });

    std::string csv = "sample_id,sector,c_r,c_w_clamped,c_w_unclamped,e_n,e_tr,e_d\n";
    std::vector<double> cr_kept;
    std::vector<double> cw_kept;
    double sum_cr = 0.0;
    double sum_cw = 0.0;
    std::size_t total_rows = 0;
    for (const SampleOut& row : rows) {
        csv += row.text;
        for (const auto& [c_r, c_w] : row.cr_cw) {
            sum_cr += c_r;
            sum_cw += c_w;
            ++total_rows;
            if (c_w > 0.05) {
                cr_kept.push_back(c_r);
                cw_kept.push_back(c_w);
            }
        }
    }

    const double rho_s = cli::spearman_rank_correlation(cr_kept, cw_kept);
    std::string summary;
    summary += "samples: " + std::to_string(opts.samples) + "\n";
    summary += "rows: " + std::to_string(total_rows) + "\n";
    summary += "mean c_r: " + fmt12(sum_cr / static_cast<double>(total_rows)) + "\n";
    summary += "mean c_w_clamped: " + fmt12(sum_cw / static_cast<double>(total_rows)) + "\n";
    summary += "rank correlation (c_w_clamped > 0.05, " + std::to_string(cr_kept.size()) +
               " rows): " + fmt12(rho_s) + "\n";
    emit(opts.out, csv, summary);
}

// ---------------------------------------------------------------------------
// sweep

struct SweepOptions {
    std::string file_a;
    std::string file_b;
    int steps = 101;
    std::string sector = "12";
    std::string out;
    bool spin_letters = false;
    int max_qubits = kDefaultMaxQubits;
};

void cmd_sweep(const SweepOptions& opts) {
    if (opts.steps < 2) throw DomainError("--steps must be >= 2");
    StateOptions src_a{"", opts.file_a, opts.spin_letters, opts.max_qubits};
    StateOptions src_b{"", opts.file_b, opts.spin_letters, opts.max_qubits};
    const PureState a = load_state(src_a);
    const PureState b = load_state(src_b);
    if (a.num_qubits() != b.num_qubits()) {
        throw DimensionMismatch("sweep endpoints have different qubit counts");
    }
    const QubitSubset sector = QubitSubset::parse(opts.sector);
    sector.require_valid_for(a.num_qubits());
    const bool pair_sector = sector.size() == 2;

    std::string csv = "t,c_r,c_w_clamped,c_w_unclamped\n";
    for (int step = 0; step < opts.steps; ++step) {
        const double t = static_cast<double>(step) / static_cast<double>(opts.steps - 1);
        std::vector<Complex> amps(a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i) amps[i] = (1.0 - t) * a[i] + t * b[i];
        const PureState raw(a.num_qubits(), std::move(amps));
        if (raw.norm() < 1e-10) {
            throw DegenerateInterpolant("interpolant vanishes at t = " + fmt12(t));
        }
        const PureState psi = normalize(raw);

        const double c_r = concurrence_r(psi, sector);
        double c_w = std::numeric_limits<double>::quiet_NaN();
        double c_w_unclamped = std::numeric_limits<double>::quiet_NaN();
        if (pair_sector) {
            const WoottersResult w =
                wootters_concurrence(partial_trace(DensityMatrix::from_pure(psi), sector));
            c_w = w.c_w;
            c_w_unclamped = w.c_w_unclamped;
        }
        csv += fmt12(t) + "," + fmt12(c_r) + "," + fmt12(c_w) + "," + fmt12(c_w_unclamped) + "\n";
    }
    emit(opts.out, csv);
}

// ---------------------------------------------------------------------------
// spectrum

struct SpectrumOptions {
    int qubits = 6;
    int k = 4;
    std::uint64_t samples = 1000;
    std::uint64_t seed = 0;
    std::string out;
    int threads = 1;
};

void cmd_spectrum(const SpectrumOptions& opts) {
    if (opts.samples < 1) throw DomainError("--samples must be >= 1");

    struct SampleOut {
        std::string text;
        std::vector<double> values;
    };
    std::vector<SampleOut> rows(opts.samples);

    run_indexed(opts.samples, opts.threads, [&](std::uint64_t id) {
        const PureState psi = random_pure(opts.qubits, derive_seed(opts.seed, id));
        const ConcurrenceReport report = all_concurrences(psi, opts.k);
        SampleOut& out = rows[id];
        out.text = std::to_string(id);
        for (const auto& [sector, value] : report.entries) {
            out.text += "," + fmt12(value);
            out.values.push_back(value);
        }
        out.text += "\n";
    });

    // Header sector names come from the lexicographic enumeration.
    std::string csv = "sample_id";
    {
        const PureState probe = random_pure(opts.qubits, derive_seed(opts.seed, 0));
        for (const auto& [sector, value] : all_concurrences(probe, opts.k).entries) {
            csv += ",c_" + sector.str();
        }
        csv += "\n";
    }
    std::vector<double> all_values;
    for (const SampleOut& row : rows) {
        csv += row.text;
        all_values.insert(all_values.end(), row.values.begin(), row.values.end());
    }

    const std::vector<std::size_t> counts = cli::histogram(all_values, 20, 0.0, 1.0);
    std::string summary = "histogram of " + std::to_string(all_values.size()) +
                          " sector values over [0,1], 20 bins\n";
    for (int bin = 0; bin < 20; ++bin) {
        const double lo = bin / 20.0;
        const double hi = (bin + 1) / 20.0;
        summary += fmt12(lo) + " " + fmt12(hi) + " " +
                   std::to_string(counts[static_cast<std::size_t>(bin)]) + "\n";
    }
    emit(opts.out, csv, summary);
}

// ---------------------------------------------------------------------------
// codes

struct CodesOptions {
    std::string code;
    std::vector<int> ks;
    std::string format = "json";
    std::string out;
};

void cmd_codes(const CodesOptions& opts) {
    if (opts.ks.empty()) throw DomainError("provide sector sizes via --k");
    const CodeReport report = verify_code(opts.code, opts.ks);

    std::string text;
    if (opts.format == "json") {
        json doc;
        doc["code"] = report.code_name;
        doc["n_qubits"] = report.state.num_qubits();
        doc["reports"] = json::array();
        for (const auto& [k, sectors] : report.per_k) {
            doc["reports"].push_back({{"k", k}, {"sectors", sectors_to_json(sectors)}});
        }
        doc["summary"] = json::array();
        for (const CodeSummaryRow& row : report.summary) {
            doc["summary"].push_back({{"k", row.k},
                                      {"num_zero_sectors", row.num_zero_sectors},
                                      {"num_unit_sectors", row.num_unit_sectors},
                                      {"max_other_value", round12(row.max_other_value)}});
        }
        text = doc.dump(2) + "\n";
    } else if (opts.format == "table") {
        text = "code: " + report.code_name + " (" + std::to_string(report.state.num_qubits()) +
               " qubits)\n";
        text += "k  zero  unit  max_other\n";
        for (const CodeSummaryRow& row : report.summary) {
            text += std::to_string(row.k) + "  " + std::to_string(row.num_zero_sectors) + "  " +
                    std::to_string(row.num_unit_sectors) + "  " + fmt12(row.max_other_value) + "\n";
        }
        for (const auto& [k, sectors] : report.per_k) {
            text += "k=" + std::to_string(k) + "\n";
            for (const auto& [sector, value] : sectors.entries) {
                text += "  " + sector.str() + "  " + fmt12(value) + "\n";
            }
        }
    } else {
        throw DomainError("unknown format '" + opts.format + "'");
    }
    emit(opts.out, text);
}

// ---------------------------------------------------------------------------
// mixed

struct MixedOptions {
    std::string rho_file;
    std::string format = "table";
    std::string out;
};

void cmd_mixed(const MixedOptions& opts) {
    const DensityMatrix rho = cli::read_matrix4(cli::read_file(opts.rho_file));
    rho.require_valid();

    const double c_r = concurrence_r_mixed(rho);
    const bool real_entries = rho.entries().imag().cwiseAbs().maxCoeff() < 1e-12;
    const double shortcut = real_entries ? real_rho_shortcut(rho) : 0.0;
    const WoottersResult w = wootters_concurrence(rho);

    std::string text;
    if (opts.format == "json") {
        json doc;
        doc["c_r_mixed"] = round12(c_r);
        if (real_entries) doc["real_shortcut"] = round12(shortcut);
        doc["lambdas"] = {round12(w.lambdas[0]), round12(w.lambdas[1]), round12(w.lambdas[2]),
                          round12(w.lambdas[3])};
        doc["c_w"] = round12(w.c_w);
        doc["c_w_unclamped"] = round12(w.c_w_unclamped);
        doc["eof"] = round12(w.eof);
        text = doc.dump(2) + "\n";
    } else if (opts.format == "table") {
        text += "c_r_mixed: " + fmt12(c_r) + "\n";
        text += "real_shortcut: " + (real_entries ? fmt12(shortcut) : std::string("n/a")) + "\n";
        text += "lambdas: " + fmt12(w.lambdas[0]) + " " + fmt12(w.lambdas[1]) + " " +
                fmt12(w.lambdas[2]) + " " + fmt12(w.lambdas[3]) + "\n";
        text += "c_w: " + fmt12(w.c_w) + "\n";
        text += "c_w_unclamped: " + fmt12(w.c_w_unclamped) + "\n";
        text += "eof: " + fmt12(w.eof) + "\n";
    } else {
        throw DomainError("unknown format '" + opts.format + "'");
    }
    emit(opts.out, text);
}

// ---------------------------------------------------------------------------
// random

struct RandomOptions {
    int qubits = 4;
    std::uint64_t seed = 0;
    std::string out;
    bool amplitude_file = false;
    int max_qubits = kDefaultMaxQubits;
};

void cmd_random(const RandomOptions& opts) {
    const PureState psi = random_pure(opts.qubits, opts.seed, opts.max_qubits);
    std::string text = opts.amplitude_file ? format_amplitude_file(psi) : format_ket(psi) + "\n";
    emit(opts.out, text);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"qconc: multiqubit concurrence toolkit"};
    app.require_subcommand(1);

    ConcurOptions concur;
    auto* concur_cmd = app.add_subcommand("concur", "Sector concurrences of a supplied state");
    add_state_options(concur_cmd, concur.state);
    concur_cmd->add_option("--k", concur.ks, "Sector sizes (even), e.g. 2,4")->delimiter(',');
    concur_cmd->add_option("--only", concur.only, "Compute a single sector, e.g. 1247");
    concur_cmd->add_option("--format", concur.format, "table, json or csv");
    concur_cmd->add_option("--out", concur.out, "Output path (default stdout)");
    concur_cmd->callback([&] { cmd_concur(concur); });

    CompareOptions compare;
    auto* compare_cmd =
        app.add_subcommand("compare", "Random-state comparison of C_R against C_W (CSV)");
    compare_cmd->add_option("--qubits", compare.qubits, "Qubit count (default 4)");
    compare_cmd->add_option("--samples", compare.samples, "Number of random states");
    compare_cmd->add_option("--seed", compare.seed, "Base seed");
    compare_cmd->add_option("--out", compare.out, "CSV path (default stdout)");
    compare_cmd->add_option("--threads", compare.threads, "Worker threads (output is identical)");
    compare_cmd->callback([&] { cmd_compare(compare); });

    SweepOptions sweep;
    auto* sweep_cmd =
        app.add_subcommand("sweep", "Concurrence along a normalized interpolation A -> B (CSV)");
    sweep_cmd->add_option("state_a", sweep.file_a, "Endpoint state file A")->required();
    sweep_cmd->add_option("state_b", sweep.file_b, "Endpoint state file B")->required();
    sweep_cmd->add_option("--steps", sweep.steps, "Grid points in [0,1] (default 101)");
    sweep_cmd->add_option("--sector", sweep.sector, "Sector, e.g. 12 (default)");
    sweep_cmd->add_option("--out", sweep.out, "CSV path (default stdout)");
    sweep_cmd->add_flag("--spin-letters", sweep.spin_letters, "Kets use u/d instead of 1/0");
    sweep_cmd->add_option("--max-qubits", sweep.max_qubits, "Maximum allowed qubit count");
    sweep_cmd->callback([&] { cmd_sweep(sweep); });

    SpectrumOptions spectrum;
    auto* spectrum_cmd =
        app.add_subcommand("spectrum", "All k-sector concurrences of random states (CSV)");
    spectrum_cmd->add_option("--qubits", spectrum.qubits, "Qubit count (default 6)");
    spectrum_cmd->add_option("--k", spectrum.k, "Sector size (default 4)");
    spectrum_cmd->add_option("--samples", spectrum.samples, "Number of random states");
    spectrum_cmd->add_option("--seed", spectrum.seed, "Base seed");
    spectrum_cmd->add_option("--out", spectrum.out, "CSV path (default stdout)");
    spectrum_cmd->add_option("--threads", spectrum.threads, "Worker threads (output is identical)");
    spectrum_cmd->callback([&] { cmd_spectrum(spectrum); });

    CodesOptions codes;
    auto* codes_cmd = app.add_subcommand("codes", "Concurrence spectra of Shor/Steane code states");
    codes_cmd->add_option("code", codes.code, "shor0, shor1 or steane0")->required();
    codes_cmd->add_option("--k", codes.ks, "Sector sizes, e.g. 2,4,6")->delimiter(',');
    codes_cmd->add_option("--format", codes.format, "json (default) or table");
    codes_cmd->add_option("--out", codes.out, "Output path (default stdout)");
    codes_cmd->callback([&] { cmd_codes(codes); });

    MixedOptions mixed;
    auto* mixed_cmd =
        app.add_subcommand("mixed", "Mixed 2-qubit concurrence via canonical purification");
    mixed_cmd->add_option("rho_file", mixed.rho_file, "4x4 density-matrix text file")->required();
    mixed_cmd->add_option("--format", mixed.format, "table (default) or json");
    mixed_cmd->add_option("--out", mixed.out, "Output path (default stdout)");
    mixed_cmd->callback([&] { cmd_mixed(mixed); });

    RandomOptions random_opts;
    auto* random_cmd = app.add_subcommand("random", "Emit a Haar-random state as a ket file");
    random_cmd->add_option("--qubits", random_opts.qubits, "Qubit count (default 4)");
    random_cmd->add_option("--seed", random_opts.seed, "Seed");
    random_cmd->add_option("--out", random_opts.out, "Output path (default stdout)");
    random_cmd->add_flag("--amp", random_opts.amplitude_file, "Emit the amplitude-file format");
    random_cmd->add_option("--max-qubits", random_opts.max_qubits, "Maximum allowed qubit count");
    random_cmd->callback([&] { cmd_random(random_opts); });

    try {
        app.parse(argc, argv);
        return 0;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2; // usage problems count as parse errors
    } catch (const qconc::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const qconc::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 4;
    } catch (const qconc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
