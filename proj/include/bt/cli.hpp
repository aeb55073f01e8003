#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bt/normality.hpp"
#include "bt/types.hpp"

namespace bt {

/// What a check subcommand reports. Residual is relative to the check's
/// comparison scale, so verdict == (residual <= tol). Everything except the
/// timing fields is deterministic for fixed inputs.
struct Report {
    std::string command;
    bool verdict = false;
    double residual = 0.0;
    double tol = 1e-9;
    std::vector<SliceReport> slices;  // normality checks only
    std::optional<bool> oracle;       // present iff --oracle
    std::uint64_t structured_ns = 0;
    std::uint64_t oracle_ns = 0;
    std::uint64_t total_ns = 0;
};

std::string report_to_json(const Report& report);
std::string report_to_text(const Report& report);

struct BenchResult {
    std::size_t n = 0, d = 0, reps = 0;
    std::uint64_t structured_ns = 0; // median over reps
    std::uint64_t dense_ns = 0;      // median over reps
    double speedup = 0.0;
    bool structured_verdict = false;
    bool dense_verdict = false;
};

/// Times the structured difference check against the dense product +
/// diagonal scan on one gap-matched quadruple. reps must be >= 1 and
/// n*d must not exceed dense_cap (the dense arm's size cap).
BenchResult run_bench(std::size_t n, std::size_t d, std::size_t reps, std::uint64_t seed,
                      std::size_t dense_cap);

/// Exit codes: 0 property holds, 1 property fails, 2 usage/IO/parse error,
/// 3 structured/oracle disagreement (always a bug).
int cli_main(int argc, const char* const* argv);

} // namespace bt
