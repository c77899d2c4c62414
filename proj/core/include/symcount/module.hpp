#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "symcount/polarization.hpp"

namespace symcount {

/// Element of a symplectic module: 2g coordinates, coordinate i reduced
/// modulo the i-th entry of the module's modulus vector.
struct ModuleVector {
    std::vector<std::int64_t> coords;

    bool is_zero() const;
    bool operator==(const ModuleVector& o) const { return coords == o.coords; }
    bool operator<(const ModuleVector& o) const { return coords < o.coords; }
};

/// Additive pairing value: numerator / denominator in Q/Z with
/// 0 <= numerator < denominator. The multiplicative form of the pairing
/// is exp(2*pi*i * numerator / denominator); it is trivial iff numerator == 0.
struct PairingValue {
    std::int64_t numerator = 0;
    std::int64_t denominator = 1;

    bool is_zero() const { return numerator == 0; }
    bool operator==(const PairingValue& o) const = default;
};

/// The finite group K(d_1,...,d_g) = (Z/d_1 x ... x Z/d_g)^2 with the
/// standard alternating pairing: on the standard generators f_1,...,f_2g,
/// the additive pairing of f_i with f_{g+i} is 1/d_i and all other basis
/// pairs vanish.
class SymplecticModule {
public:
    explicit SymplecticModule(PolarizationType ptype);

    const PolarizationType& ptype() const { return ptype_; }
    int genus() const { return ptype_.genus(); }
    int rank() const { return 2 * ptype_.genus(); }

    /// (d_1,...,d_g,d_1,...,d_g): the order of each coordinate.
    const std::vector<std::int64_t>& moduli() const { return moduli_; }

    /// D = d_g, the common denominator of all pairing values.
    std::int64_t pairing_denominator() const { return denom_; }

    /// |K| = (d_1...d_g)^2.
    Int order() const;

    /// Reduces an arbitrary integer vector of length 2g coordinatewise.
    ModuleVector reduce(const std::vector<std::int64_t>& raw) const;

    /// Standard generator f_i (0-based: i in [0, 2g)).
    ModuleVector basis_vector(int i) const;

    ModuleVector add(const ModuleVector& x, const ModuleVector& y) const;
    ModuleVector negate(const ModuleVector& x) const;
    ModuleVector scale(std::int64_t c, const ModuleVector& x) const;

    /// Additive order of x in the module.
    std::int64_t element_order(const ModuleVector& x) const;

    /// The additive pairing: numerator = sum_i (D/d_i)(x_i y_{g+i} - x_{g+i} y_i) mod D.
    PairingValue pairing(const ModuleVector& x, const ModuleVector& y) const;

    /// Pairing numerator on raw (unreduced) vectors; avoids allocation in hot loops.
    std::int64_t pairing_numerator(const std::int64_t* x, const std::int64_t* y) const;

    bool operator==(const SymplecticModule& o) const { return ptype_ == o.ptype_; }

private:
    PolarizationType ptype_;
    std::vector<std::int64_t> moduli_;
    std::vector<std::int64_t> weights_;  // D/d_i, length g
    std::int64_t denom_;
};

SymplecticModule make_module(PolarizationType ptype);

/// Splits the module into its p-primary components: for each prime p | d_g,
/// the component K(p^{v_p(d_1)},...,p^{v_p(d_g)}). A module with d_g = 1
/// yields the empty list. The product of component orders is |K|.
std::vector<std::pair<std::int64_t, SymplecticModule>> primary_decompose(const SymplecticModule& m);

}  // namespace symcount
