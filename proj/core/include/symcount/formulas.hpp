#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symcount/enumerate.hpp"

namespace symcount {

enum class CountMethod { closed_form, enumeration, product_of_components, table_pin };

std::string to_string(CountMethod m);

/// An exact count together with how it was obtained.
struct CountValue {
    Int value = 0;
    CountMethod method = CountMethod::closed_form;
    std::vector<std::string> warnings;
};

/// Sum of positive divisors.
Int sigma(std::int64_t d);

/// nu(p,...,p) with g repetitions: prod_{i=1..g} (p^i + 1).
Int nu_elementary(std::int64_t p, int g);

/// |Sp(2g,p)|, |GL(g,p)| and the order of the stabilizer of a maximal
/// isotropic subgroup, GL(g,p) extended by the symmetric matrices.
/// sp_order / stabilizer_order = nu_elementary(p, g).
struct GroupOrders {
    Int sp_order;
    Int gl_order;
    Int stabilizer_order;
};
GroupOrders group_orders(int g, std::int64_t p);

/// The per-type count of maximal isotropic subgroups of K(p^n,p^n).
/// Throws std::invalid_argument if the label is inadmissible for n.
Int nu_pp_by_type(std::int64_t p, int n, const TypeLabel& label);

/// Sum of nu_pp_by_type over all admissible labels; n = 0 gives 1.
Int nu_pp_total(std::int64_t p, int n);

/// Closed forms for nu(p^{2m+1},p^{2m+1}) (valid for m >= 2) and
/// nu(p^{2m},p^{2m}) (valid for m >= 3). Every division is asserted exact.
Int nu_prop52_odd(std::int64_t p, int m);
Int nu_prop52_even(std::int64_t p, int m);

enum class CountStrategy { automatic, closed_only, enumerate_only };

/// The hybrid counter: nu(d_1,...,d_g), the number of maximal isotropic
/// subgroups of K(d_1,...,d_g). Splits into primary components, strips
/// trivial coordinates, and picks per component: closed form where the
/// shape has one (single prime power; elementary p,...,p; square p^n,p^n),
/// enumeration otherwise. K(16,16) is always settled by enumeration and
/// carries a warning naming the two conflicting printed values.
CountValue nu(const PolarizationType& ptype,
              const EnumerationBudget& budget = {},
              CountStrategy strategy = CountStrategy::automatic,
              int jobs = 0);

}  // namespace symcount
