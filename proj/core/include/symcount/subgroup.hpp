#pragma once

#include <cstdint>
#include <vector>

#include "symcount/module.hpp"

namespace symcount {

/// A subgroup of a SymplecticModule, represented by its preimage lattice
/// L with Lambda <= L <= Z^{2g}, where Lambda is the diagonal lattice of
/// the modulus vector. The basis is held in a fixed canonical Hermite form
/// (upper triangular, positive diagonal, entry (i,j) for j > i reduced
/// into [0, basis[j][j])), so two Subgroups describe the same element set
/// iff their bases are identical.
class Subgroup {
public:
    /// Canonical subgroup spanned by `gens` together with Lambda.
    /// Idempotent: re-canonicalizing the rows of the result is a no-op.
    static Subgroup from_generators(const SymplecticModule& m,
                                    const std::vector<ModuleVector>& gens);

    /// Fast path for rows already in canonical form (used by the enumerator).
    static Subgroup from_canonical_basis(const SymplecticModule& m,
                                         std::vector<std::vector<std::int64_t>> basis);

    static Subgroup trivial(const SymplecticModule& m);
    static Subgroup whole(const SymplecticModule& m);

    const SymplecticModule& module() const { return module_; }
    const std::vector<std::vector<std::int64_t>>& basis() const { return basis_; }

    /// |L / Lambda| = prod(moduli) / det(basis).
    const Int& order() const { return order_; }

    /// Basis row i reduced into the module.
    ModuleVector row_element(int i) const;

    /// True iff x (reduced) lies in the subgroup.
    bool contains(const ModuleVector& x) const;

    /// All elements, each exactly once (order must fit in memory).
    std::vector<ModuleVector> elements() const;

    bool operator==(const Subgroup& o) const { return basis_ == o.basis_; }
    bool operator<(const Subgroup& o) const { return basis_ < o.basis_; }

private:
    Subgroup(SymplecticModule m, std::vector<std::vector<std::int64_t>> basis, Int order);

    SymplecticModule module_;
    std::vector<std::vector<std::int64_t>> basis_;
    Int order_;
};

/// True iff the pairing vanishes on all pairs of basis rows. By bilinearity
/// this is equivalent to vanishing on all element pairs; the generator
/// criterion is the implemented one.
bool is_isotropic(const Subgroup& h);

/// True iff isotropic and of order d_1...d_g. Agrees with h == h^perp.
bool is_maximal_isotropic(const Subgroup& h);

/// h^perp = { x : pairing(x, a) = 0 for all a in h }, computed by solving
/// the linear congruence system given by h's basis rows. Satisfies
/// |h| * |h^perp| = |K|.
Subgroup orthogonal_complement(const Subgroup& h);

/// Elementary divisors of the finite group h (Smith normal form of the
/// matrix expressing Lambda in h's lattice basis), 1's dropped, returned
/// as an ascending divisor chain.
std::vector<std::int64_t> abelian_invariants(const Subgroup& h);

}  // namespace symcount
