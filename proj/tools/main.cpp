// ranktau: weighted rank correlation between score files.
//
// Subcommands: tau (one pair), matrix (all pairs of many files), ap
// (average-precision correlation), bench (timing report), scatter
// (tau vs weighted tau clouds for plotting).
//
// Exit codes: 0 ok, 1 parse error, 2 length mismatch, 3 undefined
// correlation, 4 AP correlation on tied input.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "ranktau/ranktau.hpp"

namespace {

using namespace ranktau;

constexpr int kExitParse = 1;
constexpr int kExitLengthMismatch = 2;
constexpr int kExitUndefined = 3;
constexpr int kExitTies = 4;
constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;

constexpr std::size_t kOracleCap = 5000;

struct LengthMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, "cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string format_value(double v, int precision) {
    if (std::isnan(v)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", precision, v);
    return buf;
}

struct InputOptions {
    std::optional<std::size_t> column;
    std::string delimiter = "\t";

    ParseOptions parse_options() const {
        ParseOptions p;
        p.column = column;
        if (delimiter == "tab" || delimiter == "\\t") {
            p.delimiter = '\t';
        } else if (delimiter.size() == 1) {
            p.delimiter = delimiter[0];
        } else {
            throw UsageError("--delimiter takes a single character (or 'tab')");
        }
        return p;
    }
};

ScoreVector load_scores(const std::string& path, const InputOptions& in) {
    try {
        return parse_scores(read_file(path), in.parse_options());
    } catch (const ParseError& e) {
        throw ParseError(0, path + ": " + e.what());
    }
}

struct RankChoice {
    enum class Kind { Symmetric, First, Second, File } kind = Kind::Symmetric;
    std::string path;
};

RankChoice parse_rank_flag(const std::string& flag) {
    RankChoice rc;
    if (flag == "symmetric") {
        rc.kind = RankChoice::Kind::Symmetric;
    } else if (flag == "first") {
        rc.kind = RankChoice::Kind::First;
    } else if (flag == "second") {
        rc.kind = RankChoice::Kind::Second;
    } else if (flag.rfind("file:", 0) == 0) {
        rc.kind = RankChoice::Kind::File;
        rc.path = flag.substr(5);
        if (rc.path.empty()) throw UsageError("--rank file: needs a path");
    } else {
        throw UsageError("--rank must be symmetric, first, second or file:<path>");
    }
    return rc;
}

struct MeasureOptions {
    std::string measure = "tau";
    std::string weight = "hyperbolic";
    std::string combine = "add";
    std::string rank = "symmetric";
    std::optional<std::size_t> top_k;
    bool oracle = false;
};

struct LabeledBreakdown {
    std::string label;
    CorrelationBreakdown breakdown;
};

struct PairComputation {
    double value = 0;
    std::vector<LabeledBreakdown> breakdowns;
};

RankAssignment load_rank_file(const std::string& path, std::size_t n) {
    RankAssignment ranks;
    try {
        ranks = parse_ranks(read_file(path));
    } catch (const ParseError& e) {
        throw ParseError(0, path + ": " + e.what());
    }
    if (ranks.size() != n) {
        throw LengthMismatch("rank file " + path + " holds " + std::to_string(ranks.size()) +
                             " ranks for " + std::to_string(n) + " scores");
    }
    return ranks;
}

// tau and gamma share the ranking logic; gamma under the symmetric choice is
// the average of the two one-sided values, mirroring the symmetric tau.
PairComputation compute_tau_or_gamma(const ScoreVector& r, const ScoreVector& s,
                                     const MeasureOptions& mo) {
    const WeightScheme scheme = WeightScheme::by_name(mo.weight, mo.combine);
    const RankChoice rc = parse_rank_flag(mo.rank);
    const bool gamma = mo.measure == "gamma";

    auto maybe_truncate = [&](RankAssignment ranks) {
        return mo.top_k ? truncate_ranks(std::move(ranks), *mo.top_k) : std::move(ranks);
    };
    auto one_sided = [&](const RankAssignment& ranks, RankSource source,
                         const char* label) -> PairComputation {
        PairComputation out;
        if (gamma) {
            out.value = goodman_kruskal_gamma(r, s, ranks, scheme, source);
            out.breakdowns.push_back({label, correlation_breakdown(r, s, ranks, scheme, source)});
        } else {
            const TauResult res = weighted_tau(r, s, ranks, scheme, source);
            out.value = res.value;
            out.breakdowns.push_back({label, res.breakdown});
        }
        return out;
    };

    switch (rc.kind) {
        case RankChoice::Kind::First:
            return one_sided(maybe_truncate(lex_rank(r, s)), RankSource::LexByFirst, "rho-first");
        case RankChoice::Kind::Second:
            return one_sided(maybe_truncate(lex_rank(s, r)), RankSource::LexBySecond, "rho-second");
        case RankChoice::Kind::File:
            return one_sided(maybe_truncate(load_rank_file(rc.path, r.size())),
                             RankSource::External, "rho-file");
        case RankChoice::Kind::Symmetric: {
            PairComputation a =
                one_sided(maybe_truncate(lex_rank(r, s)), RankSource::LexByFirst, "rho-first");
            PairComputation b =
                one_sided(maybe_truncate(lex_rank(s, r)), RankSource::LexBySecond, "rho-second");
            PairComputation out;
            out.value = (a.value + b.value) / 2.0;
            out.breakdowns = {a.breakdowns[0], b.breakdowns[0]};
            return out;
        }
    }
    throw UsageError("unreachable rank choice");
}

// rank second = the second vector is the ground truth (the natural AP
// direction); rank first swaps the roles; symmetric averages both.
double compute_ap(const ScoreVector& r, const ScoreVector& s, const RankChoice& rc,
                  bool allow_ties) {
    auto directed = [&](const ScoreVector& a, const ScoreVector& b) {
        return allow_ties ? ap_correlation_with_ties(a, b) : ap_correlation(a, b);
    };
    switch (rc.kind) {
        case RankChoice::Kind::Second:
            return directed(r, s);
        case RankChoice::Kind::First:
            return directed(s, r);
        case RankChoice::Kind::Symmetric:
            return (directed(r, s) + directed(s, r)) / 2.0;
        case RankChoice::Kind::File:
            throw UsageError("--rank file: is not supported for the ap measure");
    }
    throw UsageError("unreachable rank choice");
}

void check_ap_ties(const ScoreVector& r, const ScoreVector& s, const std::string& file_a,
                   const std::string& file_b) {
    if (has_tied_scores(r)) {
        throw TiesNotAllowed(1, "AP correlation is undefined on ties: tied scores in " + file_a);
    }
    if (has_tied_scores(s)) {
        throw TiesNotAllowed(2, "AP correlation is undefined on ties: tied scores in " + file_b);
    }
}

double oracle_value(const ScoreVector& r, const ScoreVector& s, const MeasureOptions& mo) {
    const RankChoice rc = parse_rank_flag(mo.rank);
    if (mo.measure == "ap") {
        switch (rc.kind) {
            case RankChoice::Kind::Second:
                return oracle::ap_correlation(r, s);
            case RankChoice::Kind::First:
                return oracle::ap_correlation(s, r);
            default:
                return oracle::symmetric_ap(r, s);
        }
    }
    const WeightScheme scheme = WeightScheme::by_name(mo.weight, mo.combine);
    auto maybe_truncate = [&](RankAssignment ranks) {
        return mo.top_k ? truncate_ranks(std::move(ranks), *mo.top_k) : std::move(ranks);
    };
    auto one_sided = [&](const RankAssignment& ranks) {
        if (mo.measure == "gamma") {
            const auto bd = oracle::breakdown(r, s, ranks, scheme);
            const double c = bd.concordant();
            if (c + bd.discordant <= 0.0) {
                throw UndefinedCorrelation("undefined gamma (oracle)");
            }
            return (c - bd.discordant) / (c + bd.discordant);
        }
        return oracle::tau(r, s, ranks, scheme);
    };
    switch (rc.kind) {
        case RankChoice::Kind::First:
            return one_sided(maybe_truncate(lex_rank(r, s)));
        case RankChoice::Kind::Second:
            return one_sided(maybe_truncate(lex_rank(s, r)));
        case RankChoice::Kind::File:
            return one_sided(maybe_truncate(load_rank_file(rc.path, r.size())));
        case RankChoice::Kind::Symmetric:
            return (one_sided(maybe_truncate(lex_rank(r, s))) +
                    one_sided(maybe_truncate(lex_rank(s, r)))) /
                   2.0;
    }
    throw UsageError("unreachable rank choice");
}

void cross_check(const ScoreVector& r, const ScoreVector& s, const MeasureOptions& mo,
                 double computed) {
    if (r.size() > kOracleCap) {
        throw UsageError("--oracle is capped at " + std::to_string(kOracleCap) + " items, got " +
                         std::to_string(r.size()));
    }
    const double reference = oracle_value(r, s, mo);
    if (std::abs(reference - computed) > 1e-9) {
        throw std::runtime_error("oracle cross-check failed: engine " + format_score(computed) +
                                 " vs brute force " + format_score(reference));
    }
}

void print_breakdowns(const std::vector<LabeledBreakdown>& breakdowns, int precision) {
    for (const auto& lb : breakdowns) {
        const auto& bd = lb.breakdown;
        std::cout << "# " << lb.label << "\tT=" << format_value(bd.total, precision)
                  << "\tL=" << format_value(bd.left, precision)
                  << "\tR=" << format_value(bd.right, precision)
                  << "\tJ=" << format_value(bd.joint, precision)
                  << "\tD=" << format_value(bd.discordant, precision) << "\n";
    }
}

// ---- tau ----

struct TauArgs {
    std::string file_a, file_b;
    InputOptions input;
    MeasureOptions measure;
    int precision = 6;
    bool breakdown = false;
};

int run_tau(const TauArgs& args) {
    const ScoreVector r = load_scores(args.file_a, args.input);
    const ScoreVector s = load_scores(args.file_b, args.input);
    if (r.size() != s.size()) {
        throw LengthMismatch(args.file_a + " holds " + std::to_string(r.size()) + " scores, " +
                             args.file_b + " holds " + std::to_string(s.size()));
    }

    PairComputation result;
    if (args.measure.measure == "ap") {
        check_ap_ties(r, s, args.file_a, args.file_b);
        result.value = compute_ap(r, s, parse_rank_flag(args.measure.rank), false);
    } else if (args.measure.measure == "tau" || args.measure.measure == "gamma") {
        result = compute_tau_or_gamma(r, s, args.measure);
    } else {
        throw UsageError("--measure must be tau, gamma or ap");
    }
    if (args.measure.oracle) cross_check(r, s, args.measure, result.value);

    std::cout << format_value(result.value, args.precision) << "\n";
    if (args.breakdown) print_breakdowns(result.breakdowns, args.precision);
    return 0;
}

// ---- ap ----

struct ApArgs {
    std::string file_a, file_b;
    InputOptions input;
    std::string rank = "symmetric";
    int precision = 6;
    bool oracle = false;
    bool allow_ties = false;
};

int run_ap(const ApArgs& args) {
    const ScoreVector r = load_scores(args.file_a, args.input);
    const ScoreVector s = load_scores(args.file_b, args.input);
    if (r.size() != s.size()) {
        throw LengthMismatch(args.file_a + " holds " + std::to_string(r.size()) + " scores, " +
                             args.file_b + " holds " + std::to_string(s.size()));
    }
    if (!args.allow_ties) {
        check_ap_ties(r, s, args.file_a, args.file_b);
    } else {
        std::cerr << "note: --allow-ties computes a non-standard tie-aware AP variant\n";
    }
    const double value = compute_ap(r, s, parse_rank_flag(args.rank), args.allow_ties);
    if (args.oracle) {
        if (args.allow_ties) throw UsageError("--oracle does not cover --allow-ties");
        MeasureOptions mo;
        mo.measure = "ap";
        mo.rank = args.rank;
        cross_check(r, s, mo, value);
    }
    std::cout << format_value(value, args.precision) << "\n";
    return 0;
}

// ---- matrix ----

struct MatrixArgs {
    std::vector<std::string> files;
    InputOptions input;
    MeasureOptions measure;
    int precision = 6;
    unsigned threads = 0;
};

int run_matrix(const MatrixArgs& args) {
    const std::size_t count = args.files.size();
    std::vector<ScoreVector> vectors(count);
    for (std::size_t i = 0; i < count; ++i) vectors[i] = load_scores(args.files[i], args.input);
    for (std::size_t i = 1; i < count; ++i) {
        if (vectors[i].size() != vectors[0].size()) {
            throw LengthMismatch(args.files[i] + " holds " + std::to_string(vectors[i].size()) +
                                 " scores, " + args.files[0] + " holds " +
                                 std::to_string(vectors[0].size()));
        }
    }

    struct Cell {
        std::size_t a, b;
    };
    std::vector<Cell> pairs;
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = i + 1; j < count; ++j) pairs.push_back({i, j});
    }

    std::vector<std::vector<double>> values(count, std::vector<double>(count, 1.0));
    std::atomic<std::size_t> next{0};
    std::atomic<bool> any_undefined{false};
    std::vector<std::exception_ptr> failures(pairs.size());

    auto worker = [&] {
        for (;;) {
            const std::size_t at = next.fetch_add(1);
            if (at >= pairs.size()) return;
            const auto [i, j] = pairs[at];
            try {
                double value = 0;
                if (args.measure.measure == "ap") {
                    check_ap_ties(vectors[i], vectors[j], args.files[i], args.files[j]);
                    value = compute_ap(vectors[i], vectors[j], parse_rank_flag(args.measure.rank),
                                       false);
                } else {
                    value = compute_tau_or_gamma(vectors[i], vectors[j], args.measure).value;
                }
                if (args.measure.oracle) cross_check(vectors[i], vectors[j], args.measure, value);
                values[i][j] = values[j][i] = value;
            } catch (const UndefinedCorrelation&) {
                values[i][j] = values[j][i] = std::numeric_limits<double>::quiet_NaN();
                any_undefined = true;
            } catch (...) {
                failures[at] = std::current_exception();
            }
        }
    };

    unsigned threads = args.threads != 0 ? args.threads : std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;
    threads = std::min<unsigned>(threads, std::max<std::size_t>(pairs.size(), 1));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    for (const auto& failure : failures) {
        if (failure) std::rethrow_exception(failure);
    }

    for (std::size_t i = 0; i < count; ++i) {
        std::cout << args.files[i] << (i + 1 == count ? "\n" : "\t");
    }
    for (std::size_t i = 0; i < count; ++i) {
        std::cout << args.files[i];
        for (std::size_t j = 0; j < count; ++j) {
            std::cout << '\t' << format_value(values[i][j], args.precision);
        }
        std::cout << "\n";
    }
    return any_undefined ? kExitUndefined : 0;
}

// ---- bench ----

struct BenchArgs {
    std::size_t n = 1000000;
    unsigned reps = 3;
    std::uint64_t seed = 0;
    std::string weight = "hyperbolic";
    std::string combine = "add";
};

int run_bench(const BenchArgs& args) {
    if (args.n < 2) throw UsageError("bench needs -n of at least 2");
    if (args.reps < 1) throw UsageError("bench needs at least one repetition");
    const WeightScheme scheme = WeightScheme::by_name(args.weight, args.combine);

    std::cout << "n\tmedian_ms\ttau\n";
    std::vector<double> medians;
    const std::size_t sizes[3] = {args.n, 2 * args.n, 4 * args.n};
    for (std::size_t n : sizes) {
        // Fresh generator per size: the data for a given (seed, n) never
        // depends on which sizes were run before it.
        std::mt19937_64 rng(args.seed);
        std::uniform_real_distribution<double> dist(0.0, 1.0);
        ScoreVector r(n), s(n);
        for (auto& x : r) x = dist(rng);
        for (auto& x : s) x = dist(rng);

        std::vector<double> times;
        double tau = 0;
        for (unsigned rep = 0; rep < args.reps; ++rep) {
            const auto start = std::chrono::steady_clock::now();
            tau = symmetric_weighted_tau(r, s, scheme);
            const auto stop = std::chrono::steady_clock::now();
            times.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
        }
        std::sort(times.begin(), times.end());
        const double median = times[times.size() / 2];
        medians.push_back(median);
        std::cout << n << '\t' << format_value(median, 3) << '\t' << format_value(tau, 6) << "\n";
    }
    std::cout << "ratio\t" << sizes[1] << "/" << sizes[0] << '\t'
              << format_value(medians[1] / medians[0], 2) << "\n";
    std::cout << "ratio\t" << sizes[2] << "/" << sizes[1] << '\t'
              << format_value(medians[2] / medians[1], 2) << "\n";
    return 0;
}

// ---- scatter ----

struct ScatterArgs {
    std::string mode;
    std::optional<std::size_t> size;
    std::string weight = "hyperbolic";
    std::string combine = "add";
    int precision = 6;
};

int run_scatter(const ScatterArgs& args) {
    const WeightScheme scheme = WeightScheme::by_name(args.weight, args.combine);

    ScoreVector arrangement, reference;
    if (args.mode == "permutations") {
        const std::size_t size = args.size.value_or(8);
        if (size < 2 || size > 10) {
            throw UsageError("permutations mode enumerates size! lines; size must be in [2, 10], "
                             "got " +
                             std::to_string(size));
        }
        arrangement.resize(size);
        std::iota(arrangement.begin(), arrangement.end(), 0.0);
        reference = arrangement;  // the identity permutation
    } else if (args.mode == "skewed") {
        const std::size_t levels = args.size.value_or(4);
        if (levels < 2 || levels > 5) {
            throw UsageError(
                "skewed mode enumerates all multiset arrangements; levels must be in [2, 5], got " +
                std::to_string(levels));
        }
        for (std::size_t t = 0; t < levels; ++t) {
            for (std::size_t copy = 0; copy <= t; ++copy) arrangement.push_back(double(t));
        }
        reference.assign(arrangement.rbegin(), arrangement.rend());  // descending
    } else {
        throw UsageError("scatter mode must be 'permutations' or 'skewed'");
    }

    // std::next_permutation from the ascending start enumerates every
    // distinct arrangement exactly once.
    do {
        const double plain = kendall_tau_b(arrangement, reference);
        const double weighted = symmetric_weighted_tau(arrangement, reference, scheme);
        std::cout << format_value(plain, args.precision) << '\t'
                  << format_value(weighted, args.precision) << "\n";
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    return 0;
}

void add_input_options(CLI::App* cmd, InputOptions& input) {
    cmd->add_option("-c,--column", input.column, "0-based field index (default: whole line)");
    cmd->add_option("--delimiter", input.delimiter, "field delimiter (single character or 'tab')")
        ->capture_default_str();
}

void add_measure_options(CLI::App* cmd, MeasureOptions& measure) {
    cmd->add_option("--measure", measure.measure, "tau|gamma|ap")->capture_default_str();
    cmd->add_option("--weight", measure.weight, "hyperbolic|logarithmic|quadratic|constant")
        ->capture_default_str();
    cmd->add_option("--combine", measure.combine, "add|mul")->capture_default_str();
    cmd->add_option("--rank", measure.rank, "symmetric|first|second|file:<path>")
        ->capture_default_str();
    cmd->add_option("--top-k", measure.top_k, "truncate rankings to the top k items");
    cmd->add_flag("--oracle", measure.oracle,
                  "cross-check against the brute-force oracle (n <= 5000)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted rank correlation for scores with ties"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    TauArgs tau_args;
    auto* tau_cmd = app.add_subcommand("tau", "correlation between two score files");
    tau_cmd->add_option("file_a", tau_args.file_a, "first score file")->required();
    tau_cmd->add_option("file_b", tau_args.file_b, "second score file")->required();
    add_input_options(tau_cmd, tau_args.input);
    add_measure_options(tau_cmd, tau_args.measure);
    tau_cmd->add_option("--precision", tau_args.precision, "decimals in the output")
        ->capture_default_str();
    tau_cmd->add_flag("--breakdown", tau_args.breakdown, "also print the T/L/R/J/D totals");

    ApArgs ap_args;
    auto* ap_cmd = app.add_subcommand("ap", "average-precision correlation of two score files");
    ap_cmd->add_option("file_a", ap_args.file_a, "first score file")->required();
    ap_cmd->add_option("file_b", ap_args.file_b, "second score file (the default ground truth)")
        ->required();
    add_input_options(ap_cmd, ap_args.input);
    ap_cmd->add_option("--rank", ap_args.rank, "symmetric|first|second")->capture_default_str();
    ap_cmd->add_option("--precision", ap_args.precision, "decimals in the output")
        ->capture_default_str();
    ap_cmd->add_flag("--oracle", ap_args.oracle, "cross-check against the definitional oracle");
    ap_cmd->add_flag("--allow-ties", ap_args.allow_ties,
                     "non-standard: run the tie-aware engine with AP weights");

    MatrixArgs matrix_args;
    auto* matrix_cmd = app.add_subcommand("matrix", "pairwise correlation matrix as TSV");
    matrix_cmd->add_option("files", matrix_args.files, "score files")->required()->expected(2, -1);
    add_input_options(matrix_cmd, matrix_args.input);
    add_measure_options(matrix_cmd, matrix_args.measure);
    matrix_cmd->add_option("--precision", matrix_args.precision, "decimals in the output")
        ->capture_default_str();
    matrix_cmd->add_option("--threads", matrix_args.threads,
                           "worker threads (default: machine parallelism)");

    BenchArgs bench_args;
    auto* bench_cmd = app.add_subcommand("bench", "time symmetric weighted tau at n, 2n and 4n");
    bench_cmd->add_option("-n", bench_args.n, "base input size")->capture_default_str();
    bench_cmd->add_option("--reps", bench_args.reps, "repetitions per size (median is reported)")
        ->capture_default_str();
    bench_cmd->add_option("--seed", bench_args.seed, "seed for the generated scores")
        ->capture_default_str();
    bench_cmd->add_option("--weight", bench_args.weight, "weight scheme")->capture_default_str();
    bench_cmd->add_option("--combine", bench_args.combine, "add|mul")->capture_default_str();

    ScatterArgs scatter_args;
    auto* scatter_cmd =
        app.add_subcommand("scatter", "emit (tau, weighted tau) pairs for whole families");
    scatter_cmd->add_option("mode", scatter_args.mode, "permutations|skewed")->required();
    scatter_cmd->add_option("--size", scatter_args.size,
                            "permutation length (default 8) or skew levels (default 4)");
    scatter_cmd->add_option("--weight", scatter_args.weight, "weight scheme")
        ->capture_default_str();
    scatter_cmd->add_option("--combine", scatter_args.combine, "add|mul")->capture_default_str();
    scatter_cmd->add_option("--precision", scatter_args.precision, "decimals in the output")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (tau_cmd->parsed()) return run_tau(tau_args);
        if (ap_cmd->parsed()) return run_ap(ap_args);
        if (matrix_cmd->parsed()) return run_matrix(matrix_args);
        if (bench_cmd->parsed()) return run_bench(bench_args);
        if (scatter_cmd->parsed()) return run_scatter(scatter_args);
        std::cerr << "error: no subcommand\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const LengthMismatch& e) {
        std::cerr << "error: length mismatch: " << e.what() << "\n";
        return kExitLengthMismatch;
    } catch (const TiesNotAllowed& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitTies;
    } catch (const UndefinedCorrelation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUndefined;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
