#include "bt/cli.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bt/displacement.hpp"
#include "bt/generators.hpp"
#include "bt/matrix_file.hpp"
#include "bt/oracle.hpp"
#include "bt/product_criteria.hpp"

namespace bt {

namespace {

using nlohmann::ordered_json;

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDisagreement = 3;

/// Domain violations that map to exit 2 (bad operands rather than a failed
/// property).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t elapsed_ns(std::chrono::steady_clock::time_point start) {
    return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(
                                          std::chrono::steady_clock::now() - start)
                                          .count());
}

std::string join_args(int argc, const char* const* argv) {
    std::string joined = "bt";
    for (int i = 1; i < argc; ++i) {
        joined += ' ';
        joined += argv[i];
    }
    return joined;
}

ordered_json complex_json(const Complex& z) {
    return ordered_json::array({z.real(), z.imag()});
}

BlockGrid to_grid(const MatrixFile& file) {
    switch (file.kind()) {
    case MatrixKind::Dense: return file.dense();
    case MatrixKind::BlockToeplitz: return expand(file.toeplitz());
    case MatrixKind::DiagonalBlockToeplitz:
        return expand(file.diagonal().to_block_toeplitz());
    }
    throw UsageError("unreachable kind");
}

/// The product criteria are defined only on block Toeplitz operands; a
/// dense file must factor or it is rejected.
BlockToeplitz to_toeplitz(const MatrixFile& file, const std::string& name, Tolerance tol) {
    switch (file.kind()) {
    case MatrixKind::BlockToeplitz: return file.toeplitz();
    case MatrixKind::DiagonalBlockToeplitz: return file.diagonal().to_block_toeplitz();
    case MatrixKind::Dense: {
        auto factors = toeplitz_factor(file.dense(), tol);
        if (!factors) {
            throw UsageError(name + ": dense input is not block Toeplitz; "
                                    "this check is defined only on block Toeplitz operands");
        }
        return toeplitz_from_factors(*factors);
    }
    }
    throw UsageError("unreachable kind");
}

DiagonalBlockToeplitz to_diagonal(const MatrixFile& file, const std::string& name,
                                  Tolerance tol) {
    if (file.kind() == MatrixKind::DiagonalBlockToeplitz) return file.diagonal();
    const BlockToeplitz t = to_toeplitz(file, name, tol);
    const long limit = static_cast<long>(t.n()) - 1;
    double scale = 0.0;
    for (long k = -limit; k <= limit; ++k) scale = std::max(scale, max_abs(t.symbol(k)));
    DiagonalBlockToeplitz diag(t.n(), t.d());
    for (long k = -limit; k <= limit; ++k) {
        const Block& b = t.symbol(k);
        std::vector<Complex> entries(t.d());
        for (std::size_t p = 0; p < t.d(); ++p) {
            for (std::size_t q = 0; q < t.d(); ++q) {
                if (p != q && std::abs(b(p, q)) > tol.bound(scale)) {
                    throw UsageError(name + ": symbols are not diagonal matrices; "
                                            "the normality check covers diagonal entries only");
                }
            }
            entries[p] = b(p, p);
        }
        diag.set_symbol(k, std::move(entries));
    }
    return diag;
}

void require_oracle_cap(std::size_t n, std::size_t d) {
    if (n * d > kDenseCap) {
        throw UsageError("--oracle: nd = " + std::to_string(n * d) + " exceeds the dense cap " +
                         std::to_string(kDenseCap));
    }
}

struct CheckOptions {
    std::vector<std::string> files;
    double tol = 1e-9;
    bool oracle = false;
    bool json = false;
};

void attach_check_flags(CLI::App* cmd, CheckOptions& opts, std::size_t file_count) {
    cmd->add_option("files", opts.files, "matrix file(s)")
        ->required()
        ->expected(static_cast<int>(file_count));
    cmd->add_option("--tol", opts.tol, "relative tolerance (default 1e-9)");
    cmd->add_flag("--oracle", opts.oracle, "cross-check against the dense oracle");
    cmd->add_flag("--json", opts.json, "machine-readable report");
}

int finish_check(Report& report, const CheckOptions& opts,
                 std::chrono::steady_clock::time_point start) {
    report.total_ns = elapsed_ns(start);
    std::cout << (opts.json ? report_to_json(report) : report_to_text(report));
    if (report.oracle && *report.oracle != report.verdict) {
        std::cerr << "error: structured check and oracle disagree; this is a bug\n";
        return kExitDisagreement;
    }
    return report.verdict ? kExitHolds : kExitFails;
}

int run_check_toeplitz(const CheckOptions& opts, const std::string& command) {
    const auto start = std::chrono::steady_clock::now();
    const MatrixFile file = load_matrix_file(opts.files[0]);
    const BlockGrid g = to_grid(file);
    const Tolerance tol{opts.tol};

    Report report;
    report.command = command;
    report.tol = opts.tol;
    const auto t0 = std::chrono::steady_clock::now();
    report.residual = toeplitz_residual(g);
    report.verdict = report.residual <= tol.eps;
    report.structured_ns = elapsed_ns(t0);

    if (opts.oracle) {
        require_oracle_cap(g.n(), g.d());
        const auto t1 = std::chrono::steady_clock::now();
        report.oracle = oracle::diagonal_scan_is_toeplitz(g, tol);
        report.oracle_ns = elapsed_ns(t1);
    }
    return finish_check(report, opts, start);
}

int run_check_products(const std::string& which, const CheckOptions& opts,
                       const std::string& command) {
    const auto start = std::chrono::steady_clock::now();
    const Tolerance tol{opts.tol};
    std::vector<BlockToeplitz> ops;
    for (const std::string& path : opts.files) {
        ops.push_back(to_toeplitz(load_matrix_file(path), path, tol));
    }
    const bool pair = which == "product";
    // `product` is the C = D = 0 instance of the difference check.
    const BlockToeplitz zero(ops[0].n(), ops[0].d());
    const BlockToeplitz& c = pair ? zero : ops[2];
    const BlockToeplitz& d = pair ? zero : ops[3];

    Report report;
    report.command = command;
    report.tol = opts.tol;
    const auto t0 = std::chrono::steady_clock::now();
    CheckResult result{};
    if (which == "product") {
        result = product_toeplitz_check(ops[0], ops[1], tol);
    } else if (which == "difference") {
        result = difference_toeplitz_check(ops[0], ops[1], c, d, tol);
    } else {
        result = products_equal_check(ops[0], ops[1], c, d, tol);
    }
    report.verdict = result.verdict;
    report.residual = result.residual;
    report.structured_ns = elapsed_ns(t0);

    if (opts.oracle) {
        require_oracle_cap(ops[0].n(), ops[0].d());
        const auto t1 = std::chrono::steady_clock::now();
        const auto mode = which == "equal" ? oracle::ProductCheckMode::Equal
                                           : oracle::ProductCheckMode::Toeplitz;
        report.oracle = oracle::dense_product_check(ops[0], ops[1], c, d, mode, tol);
        report.oracle_ns = elapsed_ns(t1);
    }
    return finish_check(report, opts, start);
}

int run_check_normal(const CheckOptions& opts, const std::string& command) {
    const auto start = std::chrono::steady_clock::now();
    const Tolerance tol{opts.tol};
    const DiagonalBlockToeplitz t = to_diagonal(load_matrix_file(opts.files[0]),
                                                opts.files[0], tol);

    Report report;
    report.command = command;
    report.tol = opts.tol;
    const auto t0 = std::chrono::steady_clock::now();
    NormalityVerdict verdict = block_normal_classify(t, tol);
    report.verdict = verdict.overall;
    for (const SliceReport& s : verdict.slices) {
        report.residual = std::max(report.residual, s.residual);
    }
    report.slices = std::move(verdict.slices);
    report.structured_ns = elapsed_ns(t0);

    if (opts.oracle) {
        require_oracle_cap(t.n(), t.d());
        const auto t1 = std::chrono::steady_clock::now();
        report.oracle = normal_oracle(flatten(expand(t.to_block_toeplitz())), tol);
        report.oracle_ns = elapsed_ns(t1);
    }
    return finish_check(report, opts, start);
}

int run_gen(const std::string& kind, std::size_t n, std::size_t d, std::uint64_t seed,
            const std::string& out, bool json) {
    if (n * d > kStructuredCap) {
        throw UsageError("gen: nd exceeds the structured cap " +
                         std::to_string(kStructuredCap));
    }
    std::vector<MatrixFile> files;
    try {
        files = generate(kind, n, d, seed);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    std::vector<std::string> paths;
    if (files.size() == 1) {
        paths.push_back(out);
    } else {
        const std::array<const char*, 4> tags{"A", "B", "C", "D"};
        const std::filesystem::path base(out);
        std::filesystem::path stem = base;
        stem.replace_extension();
        const std::string ext = base.extension().string();
        for (std::size_t i = 0; i < files.size(); ++i) {
            paths.push_back(stem.string() + "." + tags[i] + (ext.empty() ? ".json" : ext));
        }
    }
    for (std::size_t i = 0; i < files.size(); ++i) save_matrix_file(paths[i], files[i]);

    if (json) {
        ordered_json j;
        j["command"] = "gen";
        j["kind"] = kind;
        j["n"] = n;
        j["d"] = d;
        j["seed"] = seed;
        j["files"] = paths;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const std::string& p : paths) std::cout << "wrote " << p << "\n";
    }
    return kExitHolds;
}

int run_bench_cmd(std::size_t n, std::size_t d, std::size_t reps, std::uint64_t seed,
                  std::size_t dense_cap, bool json, const std::string& command) {
    const BenchResult r = run_bench(n, d, reps, seed, dense_cap);
    if (json) {
        ordered_json j;
        j["command"] = command;
        j["n"] = r.n;
        j["d"] = r.d;
        j["reps"] = r.reps;
        j["structured_ns"] = r.structured_ns;
        j["dense_ns"] = r.dense_ns;
        j["speedup"] = r.speedup;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "bench n=" << r.n << " d=" << r.d << " reps=" << r.reps << "\n"
                  << "structured: " << r.structured_ns << " ns (median)\n"
                  << "dense:      " << r.dense_ns << " ns (median)\n"
                  << "speedup:    " << r.speedup << "x\n";
    }
    if (r.structured_verdict != r.dense_verdict) {
        std::cerr << "error: structured check and oracle disagree; this is a bug\n";
        return kExitDisagreement;
    }
    return kExitHolds;
}

} // namespace

std::string report_to_json(const Report& report) {
    ordered_json j;
    j["command"] = report.command;
    j["verdict"] = report.verdict;
    j["residual"] = report.residual;
    j["tol"] = report.tol;
    ordered_json slices = ordered_json::array();
    ordered_json lambdas = ordered_json::array();
    for (const SliceReport& s : report.slices) {
        ordered_json js;
        js["slice"] = s.slice;
        js["classification"] = to_string(s.classification);
        js["lambda"] = s.lambda ? complex_json(*s.lambda) : ordered_json(nullptr);
        js["residual"] = s.residual;
        slices.push_back(std::move(js));
        lambdas.push_back(s.lambda ? complex_json(*s.lambda) : ordered_json(nullptr));
    }
    j["slices"] = std::move(slices);
    j["lambda"] = std::move(lambdas);
    j["oracle"] = report.oracle ? ordered_json(*report.oracle) : ordered_json(nullptr);
    j["timings"] = ordered_json{{"structured_ns", report.structured_ns},
                                {"oracle_ns", report.oracle_ns},
                                {"total_ns", report.total_ns}};
    return j.dump(2) + "\n";
}

std::string report_to_text(const Report& report) {
    std::ostringstream out;
    out << "command:  " << report.command << "\n";
    out << "verdict:  " << (report.verdict ? "holds" : "fails") << "\n";
    out << "residual: " << report.residual << " (tol " << report.tol << ")\n";
    for (const SliceReport& s : report.slices) {
        out << "slice " << s.slice << ": " << to_string(s.classification);
        if (s.lambda) {
            out << ", lambda = " << s.lambda->real() << (s.lambda->imag() < 0 ? " - " : " + ")
                << std::abs(s.lambda->imag()) << "i";
        }
        out << ", residual " << s.residual << "\n";
    }
    if (report.oracle) {
        out << "oracle:   " << (*report.oracle == report.verdict ? "agrees" : "DISAGREES")
            << " (" << (*report.oracle ? "holds" : "fails") << ")\n";
    }
    out << "time:     " << report.total_ns << " ns total, " << report.structured_ns
        << " ns structured";
    if (report.oracle) out << ", " << report.oracle_ns << " ns oracle";
    out << "\n";
    return out.str();
}

BenchResult run_bench(std::size_t n, std::size_t d, std::size_t reps, std::uint64_t seed,
                      std::size_t dense_cap) {
    if (reps < 1) throw std::invalid_argument("bench: reps must be >= 1");
    if (n * d > dense_cap) {
        throw std::invalid_argument("bench: nd = " + std::to_string(n * d) +
                                    " exceeds the dense cap " + std::to_string(dense_cap));
    }
    Rng rng(seed);
    const auto quad = gap_matched_quadruple(rng, n, d);
    const Tolerance tol{};

    auto median = [](std::vector<std::uint64_t>& samples) {
        std::sort(samples.begin(), samples.end());
        return samples[samples.size() / 2];
    };

    BenchResult result;
    result.n = n;
    result.d = d;
    result.reps = reps;

    std::vector<std::uint64_t> structured, dense;
    for (std::size_t rep = 0; rep < reps; ++rep) {
        const auto t0 = std::chrono::steady_clock::now();
        result.structured_verdict =
            difference_is_toeplitz(quad[0], quad[1], quad[2], quad[3], tol);
        structured.push_back(elapsed_ns(t0));
    }
    for (std::size_t rep = 0; rep < reps; ++rep) {
        const auto t0 = std::chrono::steady_clock::now();
        result.dense_verdict = oracle::dense_product_check(
            quad[0], quad[1], quad[2], quad[3], oracle::ProductCheckMode::Toeplitz, tol);
        dense.push_back(elapsed_ns(t0));
    }
    result.structured_ns = median(structured);
    result.dense_ns = median(dense);
    result.speedup = result.structured_ns == 0
                         ? static_cast<double>(result.dense_ns)
                         : static_cast<double>(result.dense_ns) /
                               static_cast<double>(result.structured_ns);
    return result;
}

int cli_main(int argc, const char* const* argv) {
    const std::string command = join_args(argc, argv);

    CLI::App app{"block Toeplitz structure verifier"};
    app.require_subcommand(1);

    auto* check = app.add_subcommand("check", "decide a structural property");
    check->require_subcommand(1);
    CheckOptions toeplitz_opts, product_opts, difference_opts, equal_opts, normal_opts;
    attach_check_flags(check->add_subcommand("toeplitz", "is the matrix block Toeplitz"),
                       toeplitz_opts, 1);
    attach_check_flags(check->add_subcommand("product", "is AB block Toeplitz"),
                       product_opts, 2);
    attach_check_flags(check->add_subcommand("difference", "is AB - CD block Toeplitz"),
                       difference_opts, 4);
    attach_check_flags(check->add_subcommand("equal", "is AB = CD"), equal_opts, 4);
    attach_check_flags(check->add_subcommand("normal", "is the matrix normal"),
                       normal_opts, 1);

    std::string gen_kind, gen_out;
    std::size_t gen_n = 0, gen_d = 0;
    std::uint64_t gen_seed = 0;
    bool gen_json = false;
    auto* gen = app.add_subcommand("gen", "generate structured test instances");
    gen->add_option("kind", gen_kind,
                    "random-toeplitz | lower-triangular | circulant | "
                    "gap-matched-quadruple | normal-slices | non-normal")
        ->required();
    gen->add_option("--n", gen_n, "block count")->required()->check(CLI::PositiveNumber);
    gen->add_option("--d", gen_d, "block dimension")->required()->check(CLI::PositiveNumber);
    gen->add_option("--seed", gen_seed, "RNG seed (default 0)");
    gen->add_option("--out", gen_out, "output path (quadruples insert .A/.B/.C/.D)")
        ->required();
    gen->add_flag("--json", gen_json, "machine-readable report");

    std::size_t bench_n = 0, bench_d = 0, bench_reps = 0, bench_cap = kDenseCap;
    std::uint64_t bench_seed = 0;
    bool bench_json = false;
    auto* bench = app.add_subcommand("bench",
                                     "time the structured difference check against the "
                                     "dense product + diagonal scan");
    bench->add_option("--n", bench_n, "block count")->required()->check(CLI::PositiveNumber);
    bench->add_option("--d", bench_d, "block dimension")
        ->required()
        ->check(CLI::PositiveNumber);
    bench->add_option("--reps", bench_reps, "repetitions (median is reported)")->required();
    bench->add_option("--seed", bench_seed, "RNG seed (default 0)");
    bench->add_option("--dense-cap", bench_cap, "size cap nd for the dense arm");
    bench->add_flag("--json", bench_json, "machine-readable report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (check->parsed()) {
            if (check->got_subcommand("toeplitz")) {
                return run_check_toeplitz(toeplitz_opts, command);
            }
            if (check->got_subcommand("product")) {
                return run_check_products("product", product_opts, command);
            }
            if (check->got_subcommand("difference")) {
                return run_check_products("difference", difference_opts, command);
            }
            if (check->got_subcommand("equal")) {
                return run_check_products("equal", equal_opts, command);
            }
            return run_check_normal(normal_opts, command);
        }
        if (gen->parsed()) {
            return run_gen(gen_kind, gen_n, gen_d, gen_seed, gen_out, gen_json);
        }
        return run_bench_cmd(bench_n, bench_d, bench_reps, bench_seed, bench_cap, bench_json,
                             command);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

} // namespace bt
