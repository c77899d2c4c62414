#pragma once

#include <map>
#include <vector>

#include "symcount/subgroup.hpp"

namespace symcount {

/// The quotient W^perp / W of an isotropic subgroup W, carrying the induced
/// nondegenerate alternating pairing, expressed as a SymplecticModule via a
/// symplectic basis extracted greedily (maximal-order element first, partner
/// of matching pairing order, split off, recurse; ties broken by the
/// lexicographically smallest canonical coset representative).
///
/// Subgroups H with W <= H <= W^perp correspond bijectively and
/// isotropy-preservingly to subgroups of the quotient module.
class QuotientWithForm {
public:
    explicit QuotientWithForm(const Subgroup& w);  // throws if w not isotropic

    const SymplecticModule& quotient_module() const { return quotient_; }
    const Subgroup& w() const { return w_; }
    const Subgroup& w_perp() const { return w_perp_; }

    /// Coset representative in the ambient module of the quotient element q.
    ModuleVector lift(const ModuleVector& q) const;

    /// Quotient coordinates of x (x must lie in W^perp).
    ModuleVector project(const ModuleVector& x) const;

    /// W <= h <= W^perp  ->  subgroup of the quotient module.
    Subgroup project_subgroup(const Subgroup& h) const;

    /// Inverse of project_subgroup.
    Subgroup lift_subgroup(const Subgroup& hq) const;

private:
    std::vector<std::int64_t> coset_rep(const ModuleVector& x) const;

    Subgroup w_;
    Subgroup w_perp_;
    SymplecticModule quotient_;
    std::vector<ModuleVector> basis_lifts_;  // f_1..f_{2g'} of the quotient, lifted
    std::map<std::vector<std::int64_t>, std::vector<std::int64_t>> dlog_;  // coset rep -> coords
};

QuotientWithForm quotient_with_form(const Subgroup& w);

}  // namespace symcount
