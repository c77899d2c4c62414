#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace symcount {

using Int = boost::multiprecision::cpp_int;

/// A polarization type: a chain of positive integers d_1 | d_2 | ... | d_g.
///
/// This is the arithmetic identity of a polarized abelian variety of
/// dimension g; everything downstream (the symplectic module, the counts,
/// the curve census) is a function of it.
class PolarizationType {
public:
    /// Throws std::invalid_argument if the divisor chain is violated,
    /// naming the first offending pair.
    explicit PolarizationType(std::vector<std::int64_t> divisors);

    int genus() const { return static_cast<int>(divisors_.size()); }
    const std::vector<std::int64_t>& divisors() const { return divisors_; }
    std::int64_t divisor(int i) const { return divisors_.at(i); }

    /// deg L = d_1 * ... * d_g.
    Int degree() const;

    /// "(d1,d2,...,dg)"
    std::string to_string() const;

    /// "d1,d2,...,dg" (CLI / cache key form)
    std::string key() const;

    bool operator==(const PolarizationType& o) const { return divisors_ == o.divisors_; }
    bool operator!=(const PolarizationType& o) const { return !(*this == o); }

private:
    std::vector<std::int64_t> divisors_;
};

/// Parses "d1,d2,...,dg". Throws std::invalid_argument on malformed input.
PolarizationType parse_polarization_type(const std::string& text);

}  // namespace symcount
