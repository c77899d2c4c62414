// Acceptance harness: re-derives every published number from scratch and
// prints one PASS/FAIL line per criterion. Exits nonzero if any criterion
// fails. Expected runtime is dominated by the K(16,16) and K(32,32)
// enumerations; everything is exact integer arithmetic.

#include <chrono>
#include <iostream>
#include <map>
#include <sstream>
#include <vector>

#include "symcount/cache.hpp"
#include "symcount/report.hpp"

#include "oracle.hpp"

using namespace symcount;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;
std::map<std::pair<std::int64_t, int>, TypeCensus> census_memo;

// The heavyweight censuses get more wall clock than the library default.
EnumerationBudget patient_budget() {
    EnumerationBudget b;
    b.max_candidates = 4'000'000'000ull;
    b.max_seconds = 3000.0;
    return b;
}

const TypeCensus& census(std::int64_t p, int n, const EnumerationBudget& budget) {
    auto key = std::make_pair(p, n);
    auto it = census_memo.find(key);
    if (it == census_memo.end()) it = census_memo.emplace(key, census_by_type(p, n, budget, 0)).first;
    return it->second;
}

void report(int criterion, bool pass, const std::string& what, const std::string& detail = {}) {
    std::cout << "criterion " << criterion << ": " << (pass ? "PASS" : "FAIL") << " — " << what;
    if (!pass && !detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!pass) ++failures;
}

Int ipow(Int base, int exp) {
    Int r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

void criterion1_table() {
    RunOptions opts;
    opts.budget = patient_budget();
    TableResult t = table_section4(opts);
    std::ostringstream detail;
    bool ok = t.mismatches == 0;
    // Documented conflicts: cells whose printed value disagrees with the
    // enumeration oracle. Each must be flagged and must recompute to the
    // adjudicated value.
    const std::map<std::string, Int> adjudicated = {
        {"nu(16,16)", 11191}, {"nu(2,4)", 39},  {"nu(2,8)", 87},   {"nu(2,12)", 156},
        {"nu(3,9)", 148},     {"nu(4,8)", 375}, {"nu(6,12)", 1560}};
    int flagged = 0;
    for (const auto& row : t.rows) {
        if (row.flagged) {
            ++flagged;
            auto it = adjudicated.find(row.label);
            if (it == adjudicated.end() || row.computed != it->second) {
                ok = false;
                detail << row.label << " flagged but computed " << row.computed << "; ";
            }
            continue;
        }
        if (!row.match) detail << row.label << " computed " << row.computed << " vs printed "
                               << (row.pinned ? row.pinned->str() : "?") << "; ";
    }
    ok = ok && flagged == static_cast<int>(adjudicated.size());
    report(1, ok,
           "small-value table reproduced: 17 cells exact, 7 documented conflicts "
           "recomputed to the adjudicated oracle values",
           detail.str());
}

void criterion2_adjudication() {
    try {
        // Default budget on purpose: completing within it is part of the criterion.
        SymplecticModule m(PolarizationType({16, 16}));
        Int enumerated = Int(enumerate_maximal_isotropic(m, {}, 0).size());
        bool ok = enumerated == nu_pp_total(2, 4) && enumerated == 11191;
        // The hybrid counter must pin this value and flag the other printed one.
        CountValue cv = nu(PolarizationType({16, 16}));
        bool warned = false;
        for (const auto& w : cv.warnings) warned = warned || w.find("10191") != std::string::npos;
        ok = ok && cv.value == enumerated && warned;
        report(2, ok, "K(16,16) adjudicated by enumeration: 11191, conflicting cell flagged",
               "enumerated " + enumerated.str());
    } catch (const BudgetExceeded& e) {
        report(2, false, "K(16,16) adjudicated by enumeration within the default budget", e.what());
    }
}

void criterion3_elementary() {
    bool ok = true;
    std::ostringstream detail;
    const std::vector<std::pair<std::int64_t, int>> cases = {
        {2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2}, {3, 2}, {5, 2}, {2, 3}};
    for (auto [p, g] : cases) {
        std::vector<std::int64_t> ds(g, p);
        SymplecticModule m{PolarizationType(ds)};
        Int direct = Int(enumerate_maximal_isotropic(m).size());
        if (direct != nu_elementary(p, g)) {
            ok = false;
            detail << "p=" << p << ",g=" << g << ": " << direct << " vs " << nu_elementary(p, g)
                   << "; ";
        }
        if (p == 2 && g == 3 && direct != 135) ok = false;
    }
    report(3, ok, "nu(p,...,p) formula equals direct enumeration, K(2,2,2) = 135", detail.str());
}

void criterion4_sigma() {
    bool ok = true;
    std::ostringstream detail;
    for (std::int64_t d = 1; d <= 50; ++d) {
        SymplecticModule m(PolarizationType({1, d}));
        Int direct = Int(enumerate_maximal_isotropic(m).size());
        if (direct != sigma(d)) {
            ok = false;
            detail << "d=" << d << ": " << direct << " vs " << sigma(d) << "; ";
        }
    }
    report(4, ok, "nu(1,d) = sigma(d) by enumeration for all d <= 50", detail.str());
}

void criterion5_per_type() {
    bool ok = true;
    std::ostringstream detail;
    const std::vector<std::pair<std::int64_t, int>> cases = {
        {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}, {5, 2}, {7, 1}};
    for (auto [p, n] : cases) {
        const TypeCensus& c = census(p, n, patient_budget());
        for (const auto& label : admissible_labels(n)) {
            Int counted = 0;
            if (auto it = c.counts.find(label); it != c.counts.end()) counted = it->second;
            if (counted != nu_pp_by_type(p, n, label)) {
                ok = false;
                detail << "p=" << p << ",n=" << n << ",type " << label.to_string() << ": "
                       << counted << " vs " << nu_pp_by_type(p, n, label) << "; ";
            }
        }
    }
    report(5, ok, "per-type census equals the per-type formulas, label by label", detail.str());
}

void criterion6_multiplicativity() {
    bool ok = true;
    std::ostringstream detail;
    const std::vector<std::pair<std::vector<std::int64_t>, std::int64_t>> cases = {
        {{6, 6}, 600}, {{2, 6}, 60}, {{3, 6}, 120}, {{2, 12}, 156}, {{6, 12}, 1560}};
    for (const auto& [ds, pinned] : cases) {
        SymplecticModule m{PolarizationType(ds)};
        Int direct = Int(enumerate_maximal_isotropic(m).size());
        Int product = count_maximal_isotropic(m);
        if (direct != product || direct != pinned) {
            ok = false;
            detail << PolarizationType(ds).to_string() << ": direct " << direct << ", product "
                   << product << ", expected " << pinned << "; ";
        }
    }
    report(6, ok, "direct enumeration = product over primary components = expected values",
           detail.str());
}

void criterion7_prop52() {
    bool ok = true;
    for (std::int64_t p : {2, 3, 5, 7}) {
        for (int m = 2; m <= 5; ++m) ok = ok && nu_prop52_odd(p, m) == nu_pp_total(p, 2 * m + 1);
        for (int m = 3; m <= 5; ++m) ok = ok && nu_prop52_even(p, m) == nu_pp_total(p, 2 * m);
    }
    report(7, ok, "closed odd/even forms equal the per-type sums for all p, m in range");
}

void criterion8_curves() {
    bool ok = true;
    std::ostringstream detail;
    for (std::int64_t d = 1; d <= 10; ++d) {
        Int n = n_min(PolarizationType({d, d, d})).count.value;
        if (n != 1) {
            ok = false;
            detail << "N_min(" << d << "," << d << "," << d << ") = " << n << "; ";
        }
    }
    // 39 is the enumeration-adjudicated value; the printed 51 inherits the
    // nu(2,4) table conflict.
    if (n_min(PolarizationType({1, 2, 4})).count.value != 39) {
        ok = false;
        detail << "N_min(1,2,4) != 39; ";
    }
    for (std::int64_t d = 1; d <= 12; ++d) {
        if (n_min(PolarizationType({1, d, d})).count.value != sigma(d)) {
            ok = false;
            detail << "N_min(1," << d << "," << d << ") != sigma; ";
        }
        Int ls = genus2_curves_in_linear_system(PolarizationType({1, d})).value;
        if (ls != Int(d) * d * sigma(d)) {
            ok = false;
            detail << "linear system (1," << d << ") != d^2 sigma(d); ";
        }
    }
    report(8, ok, "curve census: (d,d,d) minimal = 1, N_min(1,2,4) = 39, N_min(1,d,d) = sigma(d), "
                  "genus-2 linear system = d^2 sigma(d)",
           detail.str());
}

bool pairing_properties() {
    for (const auto& ds : {std::vector<std::int64_t>{2, 4}, {3, 3}, {1, 6}}) {
        SymplecticModule m{PolarizationType(ds)};
        auto elements = oracle::all_elements(m);
        const std::int64_t dd = m.pairing_denominator();
        int radical = 0;
        for (const auto& x : elements) {
            if (!m.pairing(x, x).is_zero()) return false;
            bool trivial = true;
            for (const auto& y : elements) {
                std::int64_t xy = m.pairing(x, y).numerator;
                if (xy != 0) trivial = false;
                if ((xy + m.pairing(y, x).numerator) % dd != 0) return false;
                for (const auto& z : elements) {
                    if (z < y) continue;  // bilinearity once per unordered pair
                    std::int64_t lhs = m.pairing(x, m.add(y, z)).numerator;
                    if ((lhs - xy - m.pairing(x, z).numerator) % dd != 0) return false;
                }
            }
            if (trivial) ++radical;
        }
        if (radical != 1) return false;
    }
    return true;
}

bool perp_properties() {
    for (const auto& ds :
         {std::vector<std::int64_t>{2, 2}, {2, 4}, {3, 3}, {4, 4}, {1, 8}, {2, 2, 2}, {1, 12}}) {
        SymplecticModule m{PolarizationType(ds)};
        for (const auto& h : enumerate_all_subgroups(m)) {
            Subgroup perp = orthogonal_complement(h);
            if (h.order() * perp.order() != m.order()) return false;
            if (is_maximal_isotropic(h) != (perp == h)) return false;
            // canonicalization idempotence
            std::vector<ModuleVector> rows;
            for (std::size_t i = 0; i < m.moduli().size(); ++i)
                rows.push_back(h.row_element(static_cast<int>(i)));
            if (!(Subgroup::from_generators(m, rows) == h)) return false;
        }
    }
    return true;
}

bool biduality_property() {
    for (const auto& ds : {std::vector<std::int64_t>{1, 2}, {2, 4}, {1, 1, 6}, {1, 2, 4},
                           {2, 6, 12}, {1, 2, 4, 8}, {1, 1, 3, 9, 9}}) {
        PolarizationType t{ds};
        if (dual_type(dual_type(t)) != t) return false;
    }
    return true;
}

bool containing_property() {
    for (const auto& ds : {std::vector<std::int64_t>{2, 2}, {4, 4}, {3, 3}}) {
        SymplecticModule m{PolarizationType(ds)};
        auto maximal = enumerate_maximal_isotropic(m);
        for (const auto& w : enumerate_all_subgroups(m)) {
            if (!is_isotropic(w)) continue;
            Int direct = 0;
            for (const auto& h : maximal) {
                bool inside = true;
                for (const auto& e : w.elements())
                    if (!h.contains(e)) {
                        inside = false;
                        break;
                    }
                if (inside) ++direct;
            }
            if (count_containing(w) != direct) return false;
        }
    }
    return true;
}

bool reduction_property() {
    // All (p,n) with p^{4n} <= 2^20 that carry types 4, 5 or 6.
    const std::vector<std::pair<std::int64_t, int>> cases = {{2, 3}, {2, 4}, {2, 5}, {3, 3}};
    for (auto [p, n] : cases) {
        const TypeCensus& big = census(p, n, patient_budget());
        for (const auto& label : admissible_labels(n)) {
            if (label.kind != 4 && label.kind != 5 && label.kind != 6) continue;
            int drop = 2 * (label.kind == 6 ? label.k : label.l);
            TypeLabel small_label = label.kind == 4 ? TypeLabel{2, label.k - label.l, 0}
                                  : label.kind == 5 ? TypeLabel{3, 0, 0}
                                                    : TypeLabel{1, 0, 0};
            const TypeCensus& small = census(p, n - drop, patient_budget());
            Int lhs = 0, rhs = 0;
            if (auto it = big.counts.find(label); it != big.counts.end()) lhs = it->second;
            if (auto it = small.counts.find(small_label); it != small.counts.end())
                rhs = it->second;
            if (lhs != rhs) return false;
        }
    }
    return true;
}

bool point_count_property() {
    for (auto [p, n] : std::vector<std::pair<std::int64_t, int>>{{2, 2}, {2, 3}, {3, 2}, {2, 4}}) {
        const TypeCensus& c = census(p, n, patient_budget());
        Int type1 = 0;
        if (auto it = c.counts.find(TypeLabel{1, 0, 0}); it != c.counts.end()) type1 = it->second;
        if (type1 != ipow(p, 3 * (n - 1)) * nu_elementary(p, 2)) return false;
    }
    return true;
}

void criterion9_properties() {
    bool ok = true;
    std::ostringstream detail;
    struct Named {
        const char* name;
        bool (*fn)();
    };
    for (const Named& prop : {Named{"pairing", pairing_properties},
                              Named{"perp", perp_properties},
                              Named{"biduality", biduality_property},
                              Named{"count_containing", containing_property},
                              Named{"reduction", reduction_property},
                              Named{"point_count", point_count_property}}) {
        bool pass = false;
        try {
            pass = prop.fn();
        } catch (const std::exception& e) {
            detail << prop.name << " threw: " << e.what() << "; ";
        }
        if (!pass) {
            ok = false;
            detail << prop.name << " failed; ";
        }
    }
    report(9, ok, "property suites (pairing, complements, biduality, containment, reductions, "
                  "point counts)",
           detail.str());
}

void criterion10_determinism() {
    auto start = Clock::now();
    VerifyOutcome a = run_verify(VerifyLevel::quick);
    double first = std::chrono::duration<double>(Clock::now() - start).count();
    VerifyOutcome b = run_verify(VerifyLevel::quick);
    bool ok = a.ok && b.ok && first <= 60.0 && a.report.stable_json() == b.report.stable_json();
    std::ostringstream detail;
    detail << "first run " << first << " s, ok=" << a.ok
           << ", byte-identical=" << (a.report.stable_json() == b.report.stable_json());
    report(10, ok, "quick verification passes in <= 60 s and repeats byte-identically",
           ok ? "" : detail.str());
}

}  // namespace

int main() {
    criterion1_table();
    criterion2_adjudication();
    criterion3_elementary();
    criterion4_sigma();
    criterion5_per_type();
    criterion6_multiplicativity();
    criterion7_prop52();
    criterion8_curves();
    criterion9_properties();
    criterion10_determinism();
    if (failures) {
        std::cout << failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all criteria passed" << std::endl;
    return 0;
}
