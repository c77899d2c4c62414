#pragma once

// Brute-force oracle used to cross-check the lattice enumeration engine.
// Works directly with element sets: subgroups are grown by closing a set of
// elements under addition, isotropic subgroups by only ever adjoining
// elements that pair trivially with everything already present (bilinearity
// keeps the closure isotropic). Nothing here shares code with the Hermite
// form machinery, which is the point.

#include <algorithm>
#include <deque>
#include <set>
#include <vector>

#include "symcount/module.hpp"

namespace oracle {

using symcount::Int;
using symcount::ModuleVector;
using symcount::SymplecticModule;

using ElemSet = std::set<std::vector<std::int64_t>>;

inline std::vector<ModuleVector> all_elements(const SymplecticModule& m) {
    std::vector<ModuleVector> out;
    ModuleVector v;
    v.coords.assign(m.moduli().size(), 0);
    while (true) {
        out.push_back(v);
        std::size_t i = 0;
        for (; i < v.coords.size(); ++i) {
            if (++v.coords[i] < m.moduli()[i]) break;
            v.coords[i] = 0;
        }
        if (i == v.coords.size()) break;
    }
    return out;
}

inline ElemSet closure(const SymplecticModule& m, const std::vector<ModuleVector>& gens) {
    ElemSet set;
    set.insert(std::vector<std::int64_t>(m.moduli().size(), 0));
    std::deque<ModuleVector> frontier;
    for (const auto& g : gens)
        if (set.insert(g.coords).second) frontier.push_back(g);
    while (!frontier.empty()) {
        ModuleVector x = frontier.front();
        frontier.pop_front();
        for (const auto& s : set) {
            ModuleVector y = m.add(x, ModuleVector{s});
            if (set.insert(y.coords).second) frontier.push_back(y);
        }
    }
    return set;
}

inline bool set_isotropic(const SymplecticModule& m, const ElemSet& set) {
    for (const auto& a : set)
        for (const auto& b : set)
            if (m.pairing_numerator(a.data(), b.data()) != 0) return false;
    return true;
}

/// All isotropic subgroups of m as element sets (breadth-first closure
/// growth, deduplicated by the element set itself).
inline std::set<ElemSet> isotropic_subgroups(const SymplecticModule& m) {
    const auto elements = all_elements(m);
    std::set<ElemSet> seen;
    std::deque<ElemSet> frontier;
    ElemSet trivial;
    trivial.insert(std::vector<std::int64_t>(m.moduli().size(), 0));
    seen.insert(trivial);
    frontier.push_back(trivial);
    while (!frontier.empty()) {
        ElemSet cur = frontier.front();
        frontier.pop_front();
        for (const auto& x : elements) {
            if (cur.count(x.coords)) continue;
            bool ok = true;
            for (const auto& s : cur)
                if (m.pairing_numerator(x.coords.data(), s.data()) != 0) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            ElemSet bigger = cur;
            std::vector<ModuleVector> gens;
            for (const auto& s : bigger) gens.push_back(ModuleVector{s});
            gens.push_back(x);
            ElemSet next = closure(m, gens);
            if (seen.insert(next).second) frontier.push_back(next);
        }
    }
    return seen;
}

/// Element sets of the maximal isotropic subgroups: the isotropic subgroups
/// of order d_1...d_g.
inline std::vector<ElemSet> maximal_isotropic_subgroups(const SymplecticModule& m) {
    Int target = m.ptype().degree();
    std::vector<ElemSet> out;
    for (const auto& s : isotropic_subgroups(m))
        if (Int(s.size()) == target) out.push_back(s);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace oracle
