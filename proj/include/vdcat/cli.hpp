#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "vdcat/common.hpp"
#include "vdcat/complex.hpp"

namespace vdcat {

enum class Command { torus, diagram, matrix, zmap, check };
enum class OutputFormat { table, structured };

struct RunConfig {
    Command command = Command::torus;
    std::optional<int> n;
    std::optional<ColorVector> x;
    std::string input_path;
    /// zmap only: diagram file; the torus diagram on the morphism's length otherwise.
    std::string diagram_path;
    OutputFormat format = OutputFormat::table;
    std::uint64_t budget = kDefaultBasisBudget;
    unsigned threads = 1;
    bool skip_homology = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitMismatch = 2;

struct RunResult {
    int exit_code = kExitOk;
    std::string output;      ///< report, empty on input errors
    std::string diagnostic;  ///< single line, empty on success
};

/// kExitMismatch when the report records a disagreement, kExitOk otherwise.
int exit_status(const HomologyReport& report);

/// Runs one command. Never throws for bad input; see RunResult::exit_code.
RunResult run(const RunConfig& config);

/// Parses argv and runs; returns the process exit code.
int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// One entry of the built-in property suite.
struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

std::vector<CheckResult> run_property_checks(unsigned threads = 1);

/// Structured report with fields in a fixed order. Integers that do not fit
/// 64 bits are written as decimal strings.
std::string report_json(const HomologyReport& report, const std::string& command);

}  // namespace vdcat
