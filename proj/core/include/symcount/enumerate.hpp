#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "symcount/subgroup.hpp"

namespace symcount {

struct EnumerationBudget {
    std::uint64_t max_candidates = 1'000'000'000;
    double max_seconds = 600.0;
};

/// Thrown when an enumeration overruns its budget; carries the progress
/// made so far so callers never mistake a partial answer for a full one.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(std::string what, std::uint64_t visited, double elapsed)
        : std::runtime_error(std::move(what)),
          candidates_visited(visited),
          elapsed_seconds(elapsed) {}

    std::uint64_t candidates_visited;
    double elapsed_seconds;
};

/// One of the seven isomorphism types of maximal isotropic subgroups of
/// K(p^n,p^n), with its parameters k, l where applicable.
struct TypeLabel {
    int kind = 1;  // 1..7
    int k = 0;     // types 2, 4, 6 (and implicitly 3, 5, 7 where 2k = n)
    int l = 0;     // types 4, 5

    bool admissible(int n) const;
    std::string to_string() const;  // "1", "2_1", "4_{2,1}", ...

    auto operator<=>(const TypeLabel&) const = default;
};

/// All labels admissible for K(p^n,p^n) in a fixed deterministic order.
std::vector<TypeLabel> admissible_labels(int n);

/// Maps the elementary divisors of a maximal isotropic subgroup of
/// K(p^n,p^n) to its TypeLabel. Throws std::logic_error if the invariants
/// match no admissible label (that would falsify the type table).
TypeLabel classify_invariants(std::int64_t p, int n, const std::vector<std::int64_t>& invariants);

struct TypeCensus {
    std::map<TypeLabel, Int> counts;
    Int total = 0;
};

/// All maximal isotropic subgroups of m, canonical, sorted, deterministic.
/// Strategy: Hermite-form sublattices Lambda <= L <= Z^{2g} of the right
/// index, rows filled bottom-up with containment and incremental isotropy
/// pruning; independent diagonal tuples may be searched in parallel.
/// jobs = 0 means one worker per hardware thread.
std::vector<Subgroup> enumerate_maximal_isotropic(const SymplecticModule& m,
                                                  const EnumerationBudget& budget = {},
                                                  int jobs = 0);

/// Count only. Decomposes into primary components first and multiplies
/// component counts, so only primary modules are enumerated.
Int count_maximal_isotropic(const SymplecticModule& m,
                            const EnumerationBudget& budget = {},
                            int jobs = 0);

/// Enumerates K(p^n,p^n) and classifies every subgroup by type.
TypeCensus census_by_type(std::int64_t p, int n,
                          const EnumerationBudget& budget = {},
                          int jobs = 0);

/// Number of maximal isotropic subgroups containing the isotropic W,
/// via the W^perp/W reduction. Throws std::invalid_argument if W is not
/// isotropic.
Int count_containing(const Subgroup& w, const EnumerationBudget& budget = {});

/// All subgroups of m (optionally only those of a given order), canonical
/// and sorted. Test and tooling aid; same lattice engine, no isotropy pruning.
std::vector<Subgroup> enumerate_all_subgroups(const SymplecticModule& m,
                                              std::optional<Int> order = std::nullopt,
                                              const EnumerationBudget& budget = {});

}  // namespace symcount
