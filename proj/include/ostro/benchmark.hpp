#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ostro/efficiency.hpp"
#include "ostro/methods.hpp"
#include "ostro/problems.hpp"

namespace ostro {

enum class OutputFormat { Csv, Json, Markdown };
std::string_view to_string(OutputFormat format) noexcept;
/// Accepts "csv", "json", "md" and "markdown".
OutputFormat parse_output_format(std::string_view name);

/// Accepts "phi0", "phi1", "phi2".
MethodKind parse_method(std::string_view name);
/// Accepts "d1", "d2".
DividedDifferenceKind parse_dd(std::string_view name);

struct RunConfig {
    int digits = 4096;
    /// Empty selects every method (and every kind); when both are empty only the
    /// published rows of the problem are run.
    std::vector<MethodKind> methods;
    std::vector<DividedDifferenceKind> dd_kinds;
    int max_iters = 200;
    OutputFormat format = OutputFormat::Csv;
    std::string ell = "2.5";
    /// Overrides the problem's mu.
    std::optional<std::string> mu;
    /// Use estimate_mu on the problem's usage profile instead of the published mu.
    bool estimate_mu = false;
    OperandOrder operand_order = OperandOrder::BaseFirst;
    /// Rows run concurrently on this many threads.
    int jobs = 1;
};

/// One result row. High-precision values are kept as round-trip decimal strings.
struct BenchmarkRow {
    std::string problem;
    MethodKind method = MethodKind::Phi0;
    DividedDifferenceKind dd = DividedDifferenceKind::D1;
    int m = 0;
    std::string mu;
    std::string ell;
    int order = 0;

    std::string cost;
    std::string cei;
    /// 1 / log10 of the CEI rounded to nine decimals, as tabulated.
    std::string time_factor;

    std::optional<int> iterations;
    std::optional<int> iterations_performed;
    std::optional<std::string> acoc;
    std::optional<std::string> acoc_spread;
    std::optional<int> correct_decimals;
    std::string termination;

    OpCounters expected_per_iteration;
    /// Per-iteration counters of the first iteration whose counts differ from the
    /// formula, or of the first iteration when all agree.
    std::optional<OpCounters> measured_per_iteration;
    std::optional<bool> counters_match;

    double elapsed_ms = 0.0;
    std::optional<std::string> error;

    friend bool operator==(const BenchmarkRow&, const BenchmarkRow&) = default;
};

/// (method, dd) pairs selected by `config` for `problem`.
/// Throws std::invalid_argument when the selection is empty.
std::vector<std::pair<MethodKind, DividedDifferenceKind>> selected_pairs(const ProblemSpec& problem,
                                                                         const RunConfig& config);

/// mu used for the cost columns: override, estimate or the published value.
std::string effective_mu(const ProblemSpec& problem, const RunConfig& config);

/// Cost, CEI and TF columns only; pure function of (m, mu, ell, method, dd, order).
BenchmarkRow cost_row(const ProblemSpec& problem, MethodKind method, DividedDifferenceKind dd, const RunConfig& config);

/// Solves every selected pair. Solver errors are stored in the row; other rows still run.
/// Rows come back ordered as selected_pairs().
std::vector<BenchmarkRow> run_benchmark(const ProblemSpec& problem, const RunConfig& config);

void write_csv(std::ostream& out, const std::vector<BenchmarkRow>& rows);
void write_json(std::ostream& out, const std::vector<BenchmarkRow>& rows);
void write_markdown(std::ostream& out, const std::vector<BenchmarkRow>& rows);
void write_rows(std::ostream& out, const std::vector<BenchmarkRow>& rows, OutputFormat format);

/// Inverse of write_json. Throws std::invalid_argument on malformed input.
std::vector<BenchmarkRow> parse_json_rows(std::string_view text);

struct CurveSample {
    std::string m;
    std::optional<std::string> mu;  // empty when skipped at the pole
    /// "ok", "out-of-domain" (mu <= 0) or "pole".
    std::string status;
};

/// `samples` equally spaced m values on [m_min, m_max] (samples >= 2).
/// Points within 1e-6 of the asymptote are tagged "pole" and carry no mu.
std::vector<CurveSample> export_boundary_curve(BoundaryCurve which, const std::string& ell, const std::string& m_min,
                                               const std::string& m_max, int samples, const PrecisionContext& ctx);
void write_curve_csv(std::ostream& out, const std::vector<CurveSample>& samples);

/// Outcome of one named check.
struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

enum class CheckSuite { Operators, Counters, Tables, Theorems };
std::string_view to_string(CheckSuite suite) noexcept;
/// Accepts "operators", "counters", "tables", "theorems".
CheckSuite parse_check_suite(std::string_view name);

/// Runs one invariant suite. `digits` is the working precision of the solver runs
/// in "tables" and the random-pair checks in "operators".
std::vector<CheckResult> run_check_suite(CheckSuite suite, int digits);

}  // namespace ostro
