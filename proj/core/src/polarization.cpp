#include "symcount/polarization.hpp"

#include <sstream>
#include <stdexcept>

namespace symcount {

PolarizationType::PolarizationType(std::vector<std::int64_t> divisors)
    : divisors_(std::move(divisors)) {
    if (divisors_.empty()) {
        throw std::invalid_argument("polarization type needs at least one divisor");
    }
    for (std::size_t i = 0; i < divisors_.size(); ++i) {
        if (divisors_[i] < 1) {
            throw std::invalid_argument("divisor d" + std::to_string(i + 1) +
                                        " = " + std::to_string(divisors_[i]) + " is not positive");
        }
        if (i > 0 && divisors_[i] % divisors_[i - 1] != 0) {
            throw std::invalid_argument("not a divisor chain: " + std::to_string(divisors_[i - 1]) +
                                        " does not divide " + std::to_string(divisors_[i]));
        }
    }
}

Int PolarizationType::degree() const {
    Int d = 1;
    for (auto v : divisors_) d *= v;
    return d;
}

std::string PolarizationType::to_string() const {
    return "(" + key() + ")";
}

std::string PolarizationType::key() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < divisors_.size(); ++i) {
        if (i) os << ",";
        os << divisors_[i];
    }
    return os.str();
}

PolarizationType parse_polarization_type(const std::string& text) {
    std::vector<std::int64_t> ds;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) {
        std::size_t pos = 0;
        std::int64_t v;
        try {
            v = std::stoll(item, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad divisor '" + item + "' in type '" + text + "'");
        }
        if (pos != item.size()) {
            throw std::invalid_argument("bad divisor '" + item + "' in type '" + text + "'");
        }
        ds.push_back(v);
    }
    if (ds.empty()) throw std::invalid_argument("empty polarization type");
    return PolarizationType(std::move(ds));
}

}  // namespace symcount
