#include "symcount/report.hpp"

#include <chrono>
#include <map>
#include <numeric>
#include <sstream>

#include "symcount/cache.hpp"
#include "symcount/quotient.hpp"

namespace symcount {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

Int ipow(Int base, int exp) {
    Int r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

json count_value_json(const CountValue& cv) {
    json j;
    j["value"] = cv.value.str();
    j["method"] = to_string(cv.method);
    if (!cv.warnings.empty()) j["warnings"] = cv.warnings;
    return j;
}

json timing_json(Clock::time_point start) {
    json j;
    j["seconds"] = std::chrono::duration<double>(Clock::now() - start).count();
    return j;
}

// ---------------------------------------------------------------------------
// verify machinery

struct Check {
    std::string suite;
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
    bool flagged = false;  // documented paper-internal conflict, never fails the run
    std::string note;
};

class Verifier {
public:
    Verifier(VerifyLevel level, const RunOptions& opts, const VerifyHooks& hooks)
        : full_(level == VerifyLevel::full), opts_(opts), hooks_(hooks) {}

    std::vector<Check> run() {
        prop42_formula_vs_enumeration();
        prop43_sigma();
        prop44_census();
        prop41_multiplicativity();
        prop52_identities();
        group_orders_identity();
        biduality();
        consistency_square();
        reduction_identities();
        point_count_relation();
        table_conflict();
        table_conflict_mixed();
        if (full_) section4_table();
        return std::move(checks_);
    }

private:
    Int formula_by_type(std::int64_t p, int n, const TypeLabel& label) const {
        if (hooks_.nu_pp_by_type) return hooks_.nu_pp_by_type(p, n, label);
        return nu_pp_by_type(p, n, label);
    }

    void add(std::string suite, std::string name, Int expected, Int actual,
             bool flagged = false, std::string note = {}) {
        Check c;
        c.suite = std::move(suite);
        c.name = std::move(name);
        c.expected = expected.str();
        c.actual = actual.str();
        c.pass = expected == actual;
        c.flagged = flagged;
        c.note = std::move(note);
        checks_.push_back(std::move(c));
    }

    const TypeCensus& census(std::int64_t p, int n) {
        auto key = std::make_pair(p, n);
        auto it = census_cache_.find(key);
        if (it == census_cache_.end())
            it = census_cache_.emplace(key, census_by_type(p, n, opts_.budget, opts_.jobs)).first;
        return it->second;
    }

    Int enumerated(const PolarizationType& t) {
        SymplecticModule m(t);
        return static_cast<Int>(enumerate_maximal_isotropic(m, opts_.budget, opts_.jobs).size());
    }

    void prop42_formula_vs_enumeration() {
        std::vector<std::pair<std::int64_t, int>> cases = {{2, 1}, {3, 1}, {5, 1},
                                                           {7, 1}, {2, 2}, {3, 2}};
        if (full_) {
            cases.push_back({5, 2});
            cases.push_back({2, 3});
        }
        for (auto [p, g] : cases) {
            std::vector<std::int64_t> ds(g, p);
            add("prop42_formula_vs_enumeration", "p=" + std::to_string(p) + ",g=" + std::to_string(g),
                nu_elementary(p, g), enumerated(PolarizationType(ds)));
        }
    }

    void prop43_sigma() {
        const int dmax = full_ ? 50 : 20;
        for (int d = 1; d <= dmax; ++d)
            add("prop43_sigma", "d=" + std::to_string(d), sigma(d),
                enumerated(PolarizationType({1, d})));
    }

    void prop44_census() {
        std::vector<std::pair<std::int64_t, int>> cases = {{2, 1}, {2, 2}, {3, 1},
                                                           {3, 2}, {5, 1}, {7, 1}, {2, 3}};
        if (full_) cases.push_back({5, 2});
        for (auto [p, n] : cases) {
            const TypeCensus& c = census(p, n);
            Int total = 0;
            for (const auto& label : admissible_labels(n)) {
                Int expected = formula_by_type(p, n, label);
                total += expected;
                Int actual = 0;
                if (auto it = c.counts.find(label); it != c.counts.end()) actual = it->second;
                add("prop44_census",
                    "p=" + std::to_string(p) + ",n=" + std::to_string(n) + ",type=" + label.to_string(),
                    expected, actual);
            }
            add("prop44_census", "p=" + std::to_string(p) + ",n=" + std::to_string(n) + ",total",
                total, c.total);
        }
    }

    void prop41_multiplicativity() {
        std::vector<std::vector<std::int64_t>> cases = {{6, 6}, {2, 6}, {3, 6}, {2, 12}};
        if (full_) cases.push_back({6, 12});
        for (const auto& ds : cases) {
            PolarizationType t(ds);
            add("prop41_multiplicativity", t.to_string(),
                count_maximal_isotropic(SymplecticModule(t), opts_.budget, opts_.jobs),
                enumerated(t));
        }
    }

    void prop52_identities() {
        for (std::int64_t p : {2, 3, 5, 7}) {
            for (int m = 2; m <= 5; ++m)
                add("prop52_identities", "odd,p=" + std::to_string(p) + ",m=" + std::to_string(m),
                    nu_pp_total(p, 2 * m + 1), nu_prop52_odd(p, m));
            for (int m = 3; m <= 5; ++m)
                add("prop52_identities", "even,p=" + std::to_string(p) + ",m=" + std::to_string(m),
                    nu_pp_total(p, 2 * m), nu_prop52_even(p, m));
        }
    }

    void group_orders_identity() {
        for (int g = 1; g <= 4; ++g)
            for (std::int64_t p : {2, 3, 5, 7, 11, 13}) {
                GroupOrders o = group_orders(g, p);
                add("group_orders", "g=" + std::to_string(g) + ",p=" + std::to_string(p),
                    nu_elementary(p, g) * o.stabilizer_order, o.sp_order);
            }
    }

    void biduality() {
        std::vector<std::vector<std::int64_t>> chains = {
            {1}, {3}, {1, 2}, {2, 4}, {1, 1, 6}, {1, 2, 4}, {2, 6, 12},
            {1, 2, 4, 8}, {1, 1, 3, 9, 9}, {1, 2, 2, 4, 12, 24}};
        for (const auto& ds : chains) {
            PolarizationType t(ds);
            PolarizationType dd = dual_type(dual_type(t));
            add("biduality", t.to_string(), Int(dd == t ? 1 : 0), Int(1), false,
                "dual(dual(t)) == t");
        }
    }

    void consistency_square() {
        std::vector<std::pair<std::int64_t, std::int64_t>> cases = {
            {1, 1}, {1, 2}, {1, 4}, {2, 2}, {2, 4}, {2, 6}, {3, 3}};
        if (full_) cases.push_back({2, 8});
        for (auto [d2, d3] : cases) {
            PolarizationType t({1, d2, d3});
            auto nm = n_min(t, opts_.budget);
            CurveClassProblem prob(t, Rational(1, 2 * d2));
            auto g3 = genus3_translation_classes(prob, opts_.budget);
            add("consistency_square", t.to_string(), nm.count.value, g3.count.value);
        }
    }

    void reduction_identities() {
        std::vector<std::pair<std::int64_t, int>> cases = {{2, 3}};
        if (full_) {
            cases.push_back({3, 3});
            cases.push_back({2, 4});
        }
        for (auto [p, n] : cases) {
            const TypeCensus& big = census(p, n);
            for (const auto& label : admissible_labels(n)) {
                if (label.kind != 4 && label.kind != 5 && label.kind != 6) continue;
                int drop = 2 * (label.kind == 6 ? label.k : label.l);
                TypeLabel small_label = label.kind == 4 ? TypeLabel{2, label.k - label.l, 0}
                                      : label.kind == 5 ? TypeLabel{3, 0, 0}
                                                        : TypeLabel{1, 0, 0};
                const TypeCensus& small = census(p, n - drop);
                Int lhs = 0, rhs = 0;
                if (auto it = big.counts.find(label); it != big.counts.end()) lhs = it->second;
                if (auto it = small.counts.find(small_label); it != small.counts.end())
                    rhs = it->second;
                add("reduction_identities",
                    "p=" + std::to_string(p) + ",n=" + std::to_string(n) + "," + label.to_string() +
                        "->" + small_label.to_string() + "@n=" + std::to_string(n - drop),
                    rhs, lhs);
            }
        }
    }

    void point_count_relation() {
        std::vector<std::pair<std::int64_t, int>> cases = {{2, 2}, {2, 3}, {3, 2}};
        if (full_) cases.push_back({2, 4});
        for (auto [p, n] : cases) {
            const TypeCensus& c = census(p, n);
            Int lhs = 0;
            if (auto it = c.counts.find(TypeLabel{1, 0, 0}); it != c.counts.end()) lhs = it->second;
            add("point_count_relation", "p=" + std::to_string(p) + ",n=" + std::to_string(n),
                ipow(p, 3 * (n - 1)) * nu_elementary(p, 2), lhs);
        }
    }

    void table_conflict() {
        // The printed small-value table and the per-type formulas disagree at
        // (16,16); the enumeration oracle adjudicates. Reported, never failing.
        Int formula_total = 0;
        for (const auto& label : admissible_labels(4)) formula_total += formula_by_type(2, 4, label);
        add("table_conflict_16_16", "formula_sum_vs_printed_table", Int(10191), formula_total, true,
            "paper-internal conflict, oracle value pinned");
        if (full_) {
            add("table_conflict_16_16", "enumeration_adjudication", formula_total,
                census(2, 4).total, false,
                "exhaustive enumeration of K(16,16) against the formula sum");
        }
    }

    void table_conflict_mixed() {
        // The printed two-elementary-divisor table disagrees with direct
        // enumeration exactly on the cells with gcd(d1, d2/d1) > 1. The printed
        // values also fail every internal cross-check (they are inconsistent
        // with each other under any fixed pairing normalization), so the
        // enumeration oracle adjudicates. Reported, never failing.
        struct Cell {
            std::vector<std::int64_t> type;
            std::int64_t printed;
        };
        std::vector<Cell> cells = {{{2, 4}, 51}};
        if (full_)
            cells.insert(cells.end(), {{{2, 8}, 114},
                                       {{2, 12}, 204},
                                       {{3, 9}, 184},
                                       {{4, 8}, 363},
                                       {{6, 12}, 2040}});
        for (auto& cell : cells) {
            PolarizationType t(cell.type);
            CountValue cv = nu(t, opts_.budget, opts_.strategy, opts_.jobs);
            add("table_conflict_mixed", "printed_vs_enumeration" + t.to_string(),
                Int(cell.printed), cv.value, true, "paper-internal conflict, oracle value pinned");
        }
        // Structural cross-check of the adjudicated value: counting must be
        // multiplicative over coprime parts, so nu(2,12) = nu(2,4) * nu(1,3).
        if (full_) {
            Int lhs = nu(PolarizationType({2, 12}), opts_.budget, opts_.strategy, opts_.jobs).value;
            Int rhs = nu(PolarizationType({2, 4}), opts_.budget, opts_.strategy, opts_.jobs).value *
                      nu(PolarizationType({1, 3}), opts_.budget, opts_.strategy, opts_.jobs).value;
            add("table_conflict_mixed", "adjudicated_value_multiplicativity", rhs, lhs);
        }
    }

    void section4_table() {
        TableResult t = table_section4(opts_);
        for (const auto& row : t.rows) {
            if (!row.pinned) continue;
            add("section4_table", row.label, *row.pinned, row.computed, row.flagged, row.note);
        }
    }

    bool full_;
    const RunOptions& opts_;
    const VerifyHooks& hooks_;
    std::vector<Check> checks_;
    std::map<std::pair<std::int64_t, int>, TypeCensus> census_cache_;
};

}  // namespace

std::string ReportDocument::to_json(int indent) const { return body.dump(indent); }

std::string ReportDocument::stable_json(int indent) const {
    json copy = body;
    copy.erase("timing");
    return copy.dump(indent);
}

ReportDocument run_count(const CountRequest& req, const RunOptions& opts) {
    auto start = Clock::now();
    ReportDocument doc;
    json& j = doc.body;
    j["command"] = "count";
    j["version"] = kToolVersion;
    j["inputs"]["type"] = req.ptype.key();
    if (req.r) j["inputs"]["r"] = req.r->to_string();
    if (req.minimal) j["inputs"]["minimal"] = true;
    if (req.linear_system) j["inputs"]["linear_system"] = true;
    j["warnings"] = json::array();

    auto add_warnings = [&](const std::vector<std::string>& ws) {
        for (const auto& w : ws) j["warnings"].push_back(w);
    };

    if (req.minimal) {
        CurveClassReport rep = n_min(req.ptype, opts.budget);
        j["results"]["count"] = count_value_json(rep.count);
        j["results"]["theorem_group"] = rep.theorem_group_type.key();
        j["results"]["r"] = rep.r.to_string();
        j["results"]["interpretation"] =
            rep.interpretation == Interpretation::exact ? "exact" : "upper_bound";
        add_warnings(rep.warnings);
    } else if (req.linear_system) {
        CountValue cv = genus2_curves_in_linear_system(req.ptype, opts.budget);
        j["results"]["count"] = count_value_json(cv);
        j["results"]["interpretation"] = "exact";
        add_warnings(cv.warnings);
    } else if (req.r) {
        CurveClassProblem prob(req.ptype, *req.r);
        if (req.ptype.genus() == 3) {
            CurveClassReport rep = genus3_translation_classes(prob, opts.budget);
            j["results"]["count"] = count_value_json(rep.count);
            j["results"]["theorem_group"] = rep.theorem_group_type.key();
            j["results"]["interpretation"] = "exact";
            add_warnings(rep.warnings);
        } else {
            PolarizationType tg = theorem_group(prob);
            CountValue cv = nu(tg, opts.budget, opts.strategy, opts.jobs);
            j["results"]["count"] = count_value_json(cv);
            j["results"]["theorem_group"] = tg.key();
            j["results"]["interpretation"] = req.ptype.genus() <= 3 ? "exact" : "upper_bound";
            if (req.ptype.genus() >= 4)
                j["warnings"].push_back(
                    "g >= 4: the count is an upper bound (Jacobian type is not decided)");
        }
    } else {
        // Plain subgroup count; this path consults the cache.
        std::optional<std::string> dir = opts.cache_dir ? opts.cache_dir : cache_dir_from_env();
        std::optional<CountValue> cv;
        if (dir) {
            ResultCache cache(*dir);
            if (auto hit = cache.lookup(req.ptype)) {
                cv = CountValue{Int(hit->count), CountMethod::table_pin, {}};
                j["results"]["cache"] = "hit";
                j["results"]["count"] = json{{"value", hit->count}, {"method", hit->method}};
            }
        }
        if (!cv) {
            CountValue fresh = nu(req.ptype, opts.budget, opts.strategy, opts.jobs);
            j["results"]["count"] = count_value_json(fresh);
            add_warnings(fresh.warnings);
            if (dir) {
                ResultCache cache(*dir);
                cache.store(req.ptype, fresh);
                j["results"]["cache"] = "stored";
            }
        }
    }

    j["timing"] = timing_json(start);
    return doc;
}

namespace {

struct PinnedCell {
    std::vector<std::int64_t> type;
    Int value;
    bool flagged;
};

std::vector<PinnedCell> section4_pins() {
    std::vector<PinnedCell> pins;
    const std::vector<std::int64_t> d_col = {2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 16};
    const std::vector<std::int64_t> nu_1d = {3, 4, 7, 6, 12, 8, 15, 13, 18, 12, 28, 31};
    const std::vector<std::int64_t> nu_dd = {15,  40,   151,  156,  600,  400,
                                             1335, 1201, 2340, 1464, 6040, 10191};
    for (std::size_t i = 0; i < d_col.size(); ++i) {
        pins.push_back({{1, d_col[i]}, nu_1d[i], false});
        pins.push_back({{d_col[i], d_col[i]}, nu_dd[i], d_col[i] == 16});
    }
    // Mixed cells with gcd(d1, d2/d1) > 1 are documented conflicts: the printed
    // values disagree with direct enumeration (and with each other under every
    // pairing normalization), so the enumeration value supersedes them.
    const std::vector<std::pair<std::vector<std::int64_t>, std::int64_t>> mixed = {
        {{2, 4}, 51},  {{2, 6}, 60},   {{2, 8}, 114},  {{2, 10}, 90},
        {{2, 12}, 204}, {{3, 6}, 120},  {{3, 9}, 184},  {{3, 12}, 280},
        {{4, 8}, 363},  {{4, 12}, 604}, {{5, 10}, 468}, {{6, 12}, 2040}};
    for (const auto& [t, v] : mixed) {
        const bool conflict = std::gcd(t[0], t[1] / t[0]) > 1;
        pins.push_back({t, v, conflict});
    }
    return pins;
}

}  // namespace

TableResult table_section4(const RunOptions& opts) {
    TableResult result;
    for (const auto& pin : section4_pins()) {
        PolarizationType t(pin.type);
        TableRow row;
        row.label = "nu" + t.to_string();
        row.pinned = pin.value;
        row.flagged = pin.flagged;
        try {
            CountValue cv = nu(t, opts.budget, opts.strategy, opts.jobs);
            row.computed = cv.value;
            row.method = to_string(cv.method);
            row.match = row.computed == pin.value;
            if (pin.flagged && !row.match)
                row.note = "paper-internal conflict: printed table value superseded by enumeration";
        } catch (const BudgetExceeded& e) {
            row.note = std::string("budget exhausted: ") + e.what();
            row.match = false;
        }
        if (!row.match && !row.flagged) ++result.mismatches;
        result.rows.push_back(std::move(row));
    }
    return result;
}

TableResult table_prop44(std::int64_t p, int n, const RunOptions& opts) {
    TableResult result;
    TypeCensus c = census_by_type(p, n, opts.budget, opts.jobs);
    for (const auto& label : admissible_labels(n)) {
        TableRow row;
        row.label = "nu(p^n,p^n)(" + label.to_string() + "),p=" + std::to_string(p) +
                    ",n=" + std::to_string(n);
        row.pinned = nu_pp_by_type(p, n, label);
        Int actual = 0;
        if (auto it = c.counts.find(label); it != c.counts.end()) actual = it->second;
        row.computed = actual;
        row.method = "enumeration";
        row.match = row.computed == *row.pinned;
        if (!row.match) ++result.mismatches;
        result.rows.push_back(std::move(row));
    }
    return result;
}

TableResult table_custom(const std::vector<PolarizationType>& types, const RunOptions& opts) {
    TableResult result;
    for (const auto& t : types) {
        TableRow row;
        row.label = "nu" + t.to_string();
        try {
            CountValue cv = nu(t, opts.budget, opts.strategy, opts.jobs);
            row.computed = cv.value;
            row.method = to_string(cv.method);
            row.match = true;  // nothing pinned to compare against
        } catch (const BudgetExceeded& e) {
            row.note = std::string("budget exhausted: ") + e.what();
        }
        result.rows.push_back(std::move(row));
    }
    return result;
}

ReportDocument table_report(const std::string& preset, const TableResult& result) {
    ReportDocument doc;
    json& j = doc.body;
    j["command"] = "table";
    j["version"] = kToolVersion;
    j["inputs"]["preset"] = preset;
    j["results"]["rows"] = json::array();
    for (const auto& row : result.rows) {
        json r;
        r["label"] = row.label;
        r["computed"] = row.computed.str();
        if (row.pinned) r["pinned"] = row.pinned->str();
        r["match"] = row.match;
        if (row.flagged) r["flagged"] = true;
        if (!row.method.empty()) r["method"] = row.method;
        if (!row.note.empty()) r["note"] = row.note;
        j["results"]["rows"].push_back(std::move(r));
    }
    j["results"]["mismatches"] = result.mismatches;
    j["warnings"] = json::array();
    for (const auto& row : result.rows)
        if (row.flagged && !row.match)
            j["warnings"].push_back(row.label +
                                    ": paper-internal conflict, enumeration value pinned");
    j["timing"] = timing_json(Clock::now());
    return doc;
}

VerifyOutcome run_verify(VerifyLevel level, const RunOptions& opts, const VerifyHooks& hooks) {
    auto start = Clock::now();
    Verifier verifier(level, opts, hooks);
    std::vector<Check> checks = verifier.run();

    VerifyOutcome outcome;
    json& j = outcome.report.body;
    j["command"] = "verify";
    j["version"] = kToolVersion;
    j["inputs"]["level"] = level == VerifyLevel::quick ? "quick" : "full";
    j["results"]["checks"] = json::array();
    j["results"]["mismatches"] = json::array();
    int passed = 0, failed = 0, flagged = 0;
    for (const auto& c : checks) {
        json cj;
        cj["suite"] = c.suite;
        cj["name"] = c.name;
        cj["expected"] = c.expected;
        cj["actual"] = c.actual;
        cj["pass"] = c.pass;
        if (c.flagged) cj["flagged"] = true;
        if (!c.note.empty()) cj["note"] = c.note;
        j["results"]["checks"].push_back(cj);
        if (c.flagged && !c.pass) {
            ++flagged;
        } else if (c.pass) {
            ++passed;
        } else {
            ++failed;
            j["results"]["mismatches"].push_back(cj);
        }
    }
    j["results"]["summary"] = {{"passed", passed}, {"failed", failed}, {"flagged", flagged}};
    j["warnings"] = json::array(
        {"nu(16,16): paper-internal conflict, oracle value pinned",
         "nu(d1,d2) with gcd(d1,d2/d1) > 1: printed table values are paper-internal conflicts, "
         "oracle values pinned"});
    outcome.ok = failed == 0;
    j["timing"] = timing_json(start);
    return outcome;
}

void run_enumerate(const PolarizationType& ptype, EmitFormat format, std::ostream& out,
                   const RunOptions& opts) {
    SymplecticModule m(ptype);
    auto subgroups = enumerate_maximal_isotropic(m, opts.budget, opts.jobs);

    // Type labels only make sense when the module is primary of shape (p^n,p^n).
    std::optional<std::pair<std::int64_t, int>> pn;
    auto primaries = primary_decompose(m);
    if (primaries.size() == 1) {
        std::vector<int> exps;
        for (auto d : primaries[0].second.ptype().divisors()) {
            int e = 0;
            while (d % primaries[0].first == 0) {
                d /= primaries[0].first;
                ++e;
            }
            if (e) exps.push_back(e);
        }
        if (exps.size() == 2 && exps[0] == exps[1]) pn = {primaries[0].first, exps[0]};
    }

    if (format == EmitFormat::csv) out << "index,order,invariants,type,basis\n";
    std::size_t index = 0;
    for (const auto& h : subgroups) {
        auto inv = abelian_invariants(h);
        std::string type_str;
        if (pn) type_str = classify_invariants(pn->first, pn->second, inv).to_string();

        std::ostringstream inv_os, basis_os;
        for (std::size_t i = 0; i < inv.size(); ++i) inv_os << (i ? "|" : "") << inv[i];
        for (std::size_t i = 0; i < h.basis().size(); ++i) {
            if (i) basis_os << ";";
            for (std::size_t k = 0; k < h.basis()[i].size(); ++k)
                basis_os << (k ? " " : "") << h.basis()[i][k];
        }

        if (format == EmitFormat::jsonl) {
            json r;
            r["index"] = index;
            r["order"] = h.order().str();
            r["invariants"] = inv;
            if (pn) r["type"] = type_str;
            r["basis"] = json::array();
            for (const auto& row : h.basis()) r["basis"].push_back(row);
            out << r.dump() << "\n";
        } else {
            out << index << "," << h.order() << "," << inv_os.str() << "," << type_str << ","
                << basis_os.str() << "\n";
        }
        ++index;
    }
}

}  // namespace symcount
