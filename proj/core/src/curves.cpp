#include "symcount/curves.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace symcount {

namespace {

constexpr const char* kSimplicityNote =
    "assumes the abelian variety is simple; simplicity is not derivable from the type";

Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (num <= 0 || den < 0) throw std::invalid_argument("r must be a positive rational");
    std::int64_t g = std::gcd(num, den);
    num /= g;
    den /= g;
}

std::string Rational::to_string() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(text), 1);
        return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad rational '" + text + "'");
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("bad rational '" + text + "'");
    }
}

PolarizationType dual_type(const PolarizationType& ptype) {
    const auto& d = ptype.divisors();
    const int g = ptype.genus();
    std::vector<std::int64_t> out;
    out.push_back(d[0]);
    for (int i = g - 2; i >= 1; --i) out.push_back(d[0] * d[g - 1] / d[i]);
    if (g >= 2) out.push_back(d[g - 1]);
    return PolarizationType(out);
}

PolarizationType power_type(const PolarizationType& ptype, std::int64_t k) {
    if (k <= 0) throw std::invalid_argument("power_type: k must be positive");
    std::vector<std::int64_t> out;
    for (auto d : ptype.divisors()) out.push_back(k * d);
    return PolarizationType(out);
}

CurveClassProblem::CurveClassProblem(PolarizationType ptype, Rational r)
    : ptype_(std::move(ptype)), r_(r) {
    const int g = ptype_.genus();
    if (g < 2) throw std::invalid_argument("curve class problems need dimension g >= 2");
    // Integrality of the class: r (g-1)! d_1...d_{g-1} must be a positive integer.
    Int num = r_.num * factorial(g - 1);
    for (int i = 0; i + 1 < g; ++i) num *= ptype_.divisor(i);
    if (num % r_.den != 0) {
        throw std::invalid_argument(
            "ill-posed curve class: r=" + r_.to_string() + " makes the class of type " +
            ptype_.to_string() + " non-integral (r*(g-1)!*d_1...d_{g-1} is not an integer)");
    }
}

Int CurveClassProblem::beta() const {
    Int b = r_.num * factorial(genus() - 1) * ptype_.degree();
    return b / r_.den;
}

Int CurveClassProblem::isogeny_degree() const {
    const int g = genus();
    Int num = Int(1), den = Int(1);
    for (int i = 0; i < g; ++i) {
        num *= r_.num * factorial(g - 1);
        den *= r_.den;
    }
    Int deg = ptype_.degree();
    for (int i = 0; i + 1 < g; ++i) num *= deg;
    if (num % den != 0) throw std::logic_error("isogeny_degree: not an integer");
    return num / den;
}

CurveClassProblem CurveClassProblem::minimal(const PolarizationType& ptype) {
    const int g = ptype.genus();
    Int den = factorial(g - 1);
    for (int i = 0; i + 1 < g; ++i) den *= ptype.divisor(i);
    return CurveClassProblem(ptype, Rational(1, static_cast<std::int64_t>(den)));
}

PolarizationType theorem_group(const CurveClassProblem& problem) {
    const PolarizationType& t = problem.ptype();
    const Rational& r = problem.r();
    const int g = t.genus();
    // Exponent r (g-1)! d_2...d_{g-1} must be a positive integer (empty product = 1 for g=2).
    Int expo_num = r.num * factorial(g - 1);
    for (int i = 1; i + 1 < g; ++i) expo_num *= t.divisor(i);
    if (expo_num % r.den != 0) {
        throw std::invalid_argument("ill-posed curve class: the exponent r*(g-1)!*d_2...d_{g-1} = " +
                                    Rational(static_cast<std::int64_t>(expo_num), r.den).to_string() +
                                    " is not an integer");
    }

    Int deg = t.degree();
    std::vector<std::int64_t> out;
    for (int i = g - 1; i >= 0; --i) {
        Int v = r.num * factorial(g - 1) * (deg / t.divisor(i));
        if (v % r.den != 0) throw std::logic_error("theorem_group: non-integral entry");
        out.push_back(static_cast<std::int64_t>(v / r.den));
    }
    PolarizationType result{out};

    if (g == 3) {
        // Must coincide with the triple (2r d1 d2, 2r d1 d3, 2r d2 d3).
        std::vector<std::int64_t> triple = {
            static_cast<std::int64_t>(Int(2) * r.num * t.divisor(0) * t.divisor(1) / r.den),
            static_cast<std::int64_t>(Int(2) * r.num * t.divisor(0) * t.divisor(2) / r.den),
            static_cast<std::int64_t>(Int(2) * r.num * t.divisor(1) * t.divisor(2) / r.den)};
        if (result.divisors() != triple)
            throw std::logic_error("theorem_group: g=3 specialization mismatch");
    }
    return result;
}

CountValue genus2_curves_in_linear_system(const PolarizationType& ptype,
                                          const EnumerationBudget& budget) {
    if (ptype.genus() != 2)
        throw std::invalid_argument("genus2_curves_in_linear_system needs a type of length 2");
    CountValue cv = nu(ptype, budget);
    Int d2 = ptype.degree();
    cv.value *= d2 * d2;
    cv.warnings.push_back(kSimplicityNote);
    return cv;
}

CurveClassReport genus3_translation_classes(const CurveClassProblem& problem,
                                            const EnumerationBudget& budget) {
    if (problem.genus() != 3)
        throw std::invalid_argument("genus3_translation_classes needs a type of length 3");
    CurveClassReport rep{problem.ptype(), problem.r(), theorem_group(problem),
                         CountValue{},     Interpretation::exact,
                         {kSimplicityNote}};
    rep.count = nu(rep.theorem_group_type, budget);
    return rep;
}

CurveClassReport n_min(const PolarizationType& ptype, const EnumerationBudget& budget) {
    const int g = ptype.genus();
    if (g < 2) throw std::invalid_argument("n_min needs dimension g >= 2");
    // Scale invariance: divide the chain through by d_1.
    std::vector<std::int64_t> reduced;
    for (auto d : ptype.divisors()) reduced.push_back(d / ptype.divisor(0));
    PolarizationType rt{reduced};

    CurveClassProblem problem = CurveClassProblem::minimal(rt);
    CurveClassReport rep{ptype, problem.r(), theorem_group(problem),
                         CountValue{}, Interpretation::exact,
                         {kSimplicityNote}};
    rep.count = nu(rep.theorem_group_type, budget);
    if (g >= 4) {
        rep.interpretation = Interpretation::upper_bound;
        rep.warnings.push_back(
            "g >= 4: the count is only an upper bound; whether a maximal isotropic subgroup "
            "is of Jacobian type is not decided, and the generic count is 0");
    }
    return rep;
}

}  // namespace symcount
