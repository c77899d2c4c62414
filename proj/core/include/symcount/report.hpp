#pragma once

#include <functional>
#include <optional>
#include <ostream>
#include <string>

#include <nlohmann/json.hpp>

#include "symcount/curves.hpp"

namespace symcount {

inline constexpr const char* kToolVersion = "1.0.0";

/// A run result: command echo, inputs, results with method provenance,
/// warnings, timing. Serializes deterministically (sorted keys); everything
/// except the timing block is stable across identical invocations.
struct ReportDocument {
    nlohmann::json body;  // complete document, including "timing"

    std::string to_json(int indent = 2) const;
    /// Document with timing removed; byte-identical across repeated runs.
    std::string stable_json(int indent = 2) const;
};

struct RunOptions {
    EnumerationBudget budget;
    int jobs = 0;
    CountStrategy strategy = CountStrategy::automatic;
    std::optional<std::string> cache_dir;  // overrides SYMCOUNT_CACHE_DIR
};

/// `count` command. One of r / minimal / linear_system may be set.
struct CountRequest {
    PolarizationType ptype;
    std::optional<Rational> r;
    bool minimal = false;
    bool linear_system = false;
};
ReportDocument run_count(const CountRequest& req, const RunOptions& opts = {});

/// `table` command: recompute the small-type count table and compare with
/// the printed values. Presets: "section4" (the 24-row table), "prop44"
/// (per-type rows for a given p, n). A custom (d1,d2) list is also accepted.
struct TableRow {
    std::string label;
    Int computed;
    std::optional<Int> pinned;
    bool match = false;
    bool flagged = false;  // known paper-internal conflict
    std::string method;
    std::string note;
};
struct TableResult {
    std::vector<TableRow> rows;
    int mismatches = 0;  // excluding flagged rows
};
TableResult table_section4(const RunOptions& opts = {});
TableResult table_prop44(std::int64_t p, int n, const RunOptions& opts = {});
TableResult table_custom(const std::vector<PolarizationType>& types, const RunOptions& opts = {});
ReportDocument table_report(const std::string& preset, const TableResult& result);

/// `verify` command: cross-check suites. Returns the machine-readable
/// report and whether every check other than the documented table conflict
/// passed.
enum class VerifyLevel { quick, full };
struct VerifyHooks {
    // Test seam: overrides the per-type closed form inside the verify run.
    std::function<Int(std::int64_t, int, const TypeLabel&)> nu_pp_by_type;
};
struct VerifyOutcome {
    ReportDocument report;
    bool ok = false;
};
VerifyOutcome run_verify(VerifyLevel level, const RunOptions& opts = {},
                         const VerifyHooks& hooks = {});

/// `enumerate` command: one record per maximal isotropic subgroup
/// (canonical basis rows, order, abelian invariants, type label when the
/// ambient module is primary of shape (p^n,p^n)), sorted.
enum class EmitFormat { jsonl, csv };
void run_enumerate(const PolarizationType& ptype, EmitFormat format, std::ostream& out,
                   const RunOptions& opts = {});

}  // namespace symcount
