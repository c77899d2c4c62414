#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symcount/formulas.hpp"

namespace symcount {

/// Positive rational in lowest terms.
struct Rational {
    std::int64_t num = 1;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d);  // throws if not positive

    std::string to_string() const;
    bool operator==(const Rational&) const = default;
};

Rational parse_rational(const std::string& text);

/// Type of the dual polarization: (d_1, d_1 d_g / d_{g-1}, ..., d_1 d_g / d_2, d_g).
/// Involutive: dual_type(dual_type(t)) == t.
PolarizationType dual_type(const PolarizationType& ptype);

/// Type of the k-th power: every d_i multiplied by k. Throws on k <= 0.
PolarizationType power_type(const PolarizationType& ptype, std::int64_t k);

/// The data naming the curve class r * wedge^{g-1} c_1(L) on a polarized
/// abelian variety of type `ptype`. Well-posedness (integrality of the
/// class, i.e. r * (g-1)! * d_1...d_{g-1} a positive integer) is checked
/// at construction.
class CurveClassProblem {
public:
    CurveClassProblem(PolarizationType ptype, Rational r);

    const PolarizationType& ptype() const { return ptype_; }
    const Rational& r() const { return r_; }
    int genus() const { return ptype_.genus(); }

    /// r * (g-1)! * deg L (always a positive integer for well-posed input).
    Int beta() const;

    /// Degree of the isogeny from the Jacobian: r^g ((g-1)!)^g (deg L)^{g-1}.
    Int isogeny_degree() const;

    /// The problem with the minimal class: r = 1 / ((g-1)! d_1...d_{g-1}).
    static CurveClassProblem minimal(const PolarizationType& ptype);

private:
    PolarizationType ptype_;
    Rational r_;
};

/// The symplectic module whose maximal isotropic subgroups classify the
/// translation classes: type r(g-1)! * (deg L / d_g, ..., deg L / d_1).
/// Requires the exponent r(g-1)! d_2...d_{g-1} to be a positive integer;
/// throws std::invalid_argument naming the violated condition otherwise.
/// For g = 3 this equals (2r d_1 d_2, 2r d_1 d_3, 2r d_2 d_3).
PolarizationType theorem_group(const CurveClassProblem& problem);

enum class Interpretation { exact, upper_bound };

struct CurveClassReport {
    PolarizationType problem_type;
    Rational r;
    PolarizationType theorem_group_type;
    CountValue count;
    Interpretation interpretation = Interpretation::exact;
    std::vector<std::string> warnings;  // always includes the simplicity assumption
};

/// Number of genus-2 curves in the linear system |L| on a simple abelian
/// surface of type (d_1, d_2): d_1^2 d_2^2 * nu(d_1, d_2).
CountValue genus2_curves_in_linear_system(const PolarizationType& ptype,
                                          const EnumerationBudget& budget = {});

/// Number of translation classes of genus-3 curves in the class
/// r * wedge^2 c_1(L) on a simple abelian threefold.
CurveClassReport genus3_translation_classes(const CurveClassProblem& problem,
                                            const EnumerationBudget& budget = {});

/// Translation classes of genus-g curves in the minimal cohomology class.
/// Exact for g in {2, 3}; an upper bound (with a warning) for g >= 4.
CurveClassReport n_min(const PolarizationType& ptype,
                       const EnumerationBudget& budget = {});

}  // namespace symcount
