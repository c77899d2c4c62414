// symcount: count and enumerate maximal isotropic subgroups of the finite
// symplectic modules K(d_1,...,d_g), and turn those counts into numbers of
// curve classes on abelian varieties of the corresponding polarization type.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symcount/cache.hpp"
#include "symcount/report.hpp"

namespace {

// Exit codes: 0 success, 2 usage, 3 ill-posed input, 4 budget exhausted,
// 5 verification mismatch.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitIllPosed = 3;
constexpr int kExitBudget = 4;
constexpr int kExitMismatch = 5;

struct CommonFlags {
    std::string type;
    std::uint64_t max_candidates = 1'000'000'000;
    double max_seconds = 600.0;
    int jobs = 0;
    std::string method = "auto";
    std::string cache_dir;

    symcount::RunOptions options() const {
        symcount::RunOptions opts;
        opts.budget.max_candidates = max_candidates;
        opts.budget.max_seconds = max_seconds;
        opts.jobs = jobs;
        if (method == "closed")
            opts.strategy = symcount::CountStrategy::closed_only;
        else if (method == "enumerate")
            opts.strategy = symcount::CountStrategy::enumerate_only;
        if (!cache_dir.empty()) opts.cache_dir = cache_dir;
        return opts;
    }
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool with_type = true) {
    if (with_type)
        cmd->add_option("type", flags.type,
                        "polarization type as a comma-separated divisor chain, e.g. 1,2,4")
            ->required();
    cmd->add_option("--max-candidates", flags.max_candidates,
                    "enumeration budget: candidate limit");
    cmd->add_option("--max-seconds", flags.max_seconds, "enumeration budget: wall-clock limit");
    cmd->add_option("--jobs", flags.jobs, "worker threads (0 = hardware concurrency)");
    cmd->add_option("--method", flags.method, "counting strategy")
        ->check(CLI::IsMember({"auto", "closed", "enumerate"}));
    cmd->add_option("--cache-dir", flags.cache_dir,
                    "result cache directory (overrides SYMCOUNT_CACHE_DIR)");
}

void print_report(const symcount::ReportDocument& doc, bool json_out) {
    if (json_out) {
        std::cout << doc.to_json() << "\n";
        return;
    }
    const auto& j = doc.body;
    if (j.contains("warnings"))
        for (const auto& w : j["warnings"]) std::cerr << "warning: " << w.get<std::string>() << "\n";
    if (j.contains("results") && j["results"].contains("count"))
        std::cout << j["results"]["count"]["value"].get<std::string>() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"maximal isotropic subgroup counts for finite symplectic modules"};
    app.require_subcommand(1);
    bool json_out = false;
    app.add_flag("--json", json_out, "emit the full JSON report instead of the bare answer");

    CommonFlags count_flags;
    std::string r_text;
    bool minimal = false, linear_system = false;
    CLI::App* count = app.add_subcommand(
        "count", "count maximal isotropic subgroups of K(d_1,...,d_g), or curve classes");
    add_common(count, count_flags);
    count->add_option("--r", r_text, "count curve classes in r * minimal class * (g-1)! scaling");
    count->add_flag("--minimal", minimal, "count curve classes in the minimal cohomology class");
    count->add_flag("--linear-system", linear_system,
                    "genus 2: count curves in a fixed ample linear system");

    CommonFlags table_flags;
    std::string preset = "section4";
    std::vector<std::string> custom_types;
    CLI::App* table = app.add_subcommand("table", "recompute the pinned count tables");
    add_common(table, table_flags, /*with_type=*/false);
    table->add_option("--preset", preset, "which table: section4 or pN,M (per-type, p=N, n=M)");
    table->add_option("--types", custom_types, "custom list of types to tabulate");

    CommonFlags verify_flags;
    std::string level = "quick";
    CLI::App* verify = app.add_subcommand("verify", "cross-check every closed form");
    add_common(verify, verify_flags, /*with_type=*/false);
    verify->add_option("--level", level, "quick (under a minute) or full")
        ->check(CLI::IsMember({"quick", "full"}));

    CommonFlags enum_flags;
    std::string format = "jsonl";
    std::string out_path;
    CLI::App* enumerate = app.add_subcommand(
        "enumerate", "list every maximal isotropic subgroup, one record per line");
    add_common(enumerate, enum_flags);
    enumerate->add_option("--format", format, "jsonl or csv")
        ->check(CLI::IsMember({"jsonl", "csv"}));
    enumerate->add_option("--out", out_path, "write to this file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (count->parsed()) {
            if (minimal + linear_system + !r_text.empty() > 1) {
                std::cerr << "error: --r, --minimal, --linear-system are mutually exclusive\n";
                return kExitUsage;
            }
            symcount::CountRequest req{symcount::parse_polarization_type(count_flags.type),
                                       std::nullopt, minimal, linear_system};
            if (!r_text.empty()) req.r = symcount::parse_rational(r_text);
            print_report(symcount::run_count(req, count_flags.options()), json_out);
            return kExitOk;
        }
        if (table->parsed()) {
            symcount::TableResult result;
            if (!custom_types.empty()) {
                std::vector<symcount::PolarizationType> types;
                for (const auto& t : custom_types)
                    types.push_back(symcount::parse_polarization_type(t));
                result = symcount::table_custom(types, table_flags.options());
                preset = "custom";
            } else if (preset == "section4") {
                result = symcount::table_section4(table_flags.options());
            } else if (preset.size() > 1 && preset[0] == 'p') {
                auto comma = preset.find(',');
                if (comma == std::string::npos) {
                    std::cerr << "error: per-type preset looks like p2,4\n";
                    return kExitUsage;
                }
                result = symcount::table_prop44(std::stoll(preset.substr(1, comma - 1)),
                                                std::stoi(preset.substr(comma + 1)),
                                                table_flags.options());
            } else {
                std::cerr << "error: unknown preset '" << preset << "'\n";
                return kExitUsage;
            }
            symcount::ReportDocument doc = symcount::table_report(preset, result);
            if (json_out) {
                std::cout << doc.to_json() << "\n";
            } else {
                for (const auto& row : result.rows) {
                    std::cout << row.label << " = " << row.computed;
                    if (row.pinned && !row.match)
                        std::cout << (row.flagged ? "  [flagged: printed value " : "  [MISMATCH: printed value ")
                                  << *row.pinned << "]";
                    std::cout << "\n";
                }
            }
            return result.mismatches == 0 ? kExitOk : kExitMismatch;
        }
        if (verify->parsed()) {
            symcount::VerifyOutcome outcome = symcount::run_verify(
                level == "full" ? symcount::VerifyLevel::full : symcount::VerifyLevel::quick,
                verify_flags.options());
            if (json_out) {
                std::cout << outcome.report.to_json() << "\n";
            } else {
                const auto& s = outcome.report.body["results"]["summary"];
                std::cout << "passed " << s["passed"] << ", failed " << s["failed"] << ", flagged "
                          << s["flagged"] << "\n";
                for (const auto& m : outcome.report.body["results"]["mismatches"])
                    std::cerr << "mismatch: " << m["suite"].get<std::string>() << "/"
                              << m["name"].get<std::string>() << ": expected "
                              << m["expected"].get<std::string>() << ", got "
                              << m["actual"].get<std::string>() << "\n";
            }
            return outcome.ok ? kExitOk : kExitMismatch;
        }
        if (enumerate->parsed()) {
            symcount::PolarizationType t = symcount::parse_polarization_type(enum_flags.type);
            symcount::EmitFormat fmt =
                format == "csv" ? symcount::EmitFormat::csv : symcount::EmitFormat::jsonl;
            if (out_path.empty()) {
                symcount::run_enumerate(t, fmt, std::cout, enum_flags.options());
            } else {
                std::ofstream out(out_path);
                if (!out) {
                    std::cerr << "error: cannot open '" << out_path << "' for writing\n";
                    return kExitUsage;
                }
                try {
                    symcount::run_enumerate(t, fmt, out, enum_flags.options());
                } catch (const symcount::BudgetExceeded&) {
                    // Never leave a partial listing behind.
                    out.close();
                    std::filesystem::remove(out_path);
                    throw;
                }
            }
            return kExitOk;
        }
    } catch (const symcount::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIllPosed;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIllPosed;
    }
    return kExitUsage;
}
