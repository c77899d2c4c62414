#include "symcount/module.hpp"

#include <numeric>
#include <stdexcept>

namespace symcount {

namespace {

std::int64_t mod_reduce(std::int64_t v, std::int64_t m) {
    v %= m;
    if (v < 0) v += m;
    return v;
}

}  // namespace

bool ModuleVector::is_zero() const {
    for (auto c : coords)
        if (c != 0) return false;
    return true;
}

SymplecticModule::SymplecticModule(PolarizationType ptype) : ptype_(std::move(ptype)) {
    const auto& d = ptype_.divisors();
    const int g = static_cast<int>(d.size());
    denom_ = d.back();
    moduli_.reserve(2 * g);
    for (int half = 0; half < 2; ++half)
        for (int i = 0; i < g; ++i) moduli_.push_back(d[i]);
    weights_.reserve(g);
    for (int i = 0; i < g; ++i) weights_.push_back(denom_ / d[i]);
}

Int SymplecticModule::order() const {
    Int d = ptype_.degree();
    return d * d;
}

ModuleVector SymplecticModule::reduce(const std::vector<std::int64_t>& raw) const {
    if (raw.size() != moduli_.size())
        throw std::invalid_argument("vector has wrong length for this module");
    ModuleVector v;
    v.coords.resize(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) v.coords[i] = mod_reduce(raw[i], moduli_[i]);
    return v;
}

ModuleVector SymplecticModule::basis_vector(int i) const {
    ModuleVector v;
    v.coords.assign(moduli_.size(), 0);
    v.coords.at(i) = moduli_[i] == 1 ? 0 : 1;
    return v;
}

ModuleVector SymplecticModule::add(const ModuleVector& x, const ModuleVector& y) const {
    ModuleVector v;
    v.coords.resize(moduli_.size());
    for (std::size_t i = 0; i < moduli_.size(); ++i)
        v.coords[i] = mod_reduce(x.coords[i] + y.coords[i], moduli_[i]);
    return v;
}

ModuleVector SymplecticModule::negate(const ModuleVector& x) const {
    ModuleVector v;
    v.coords.resize(moduli_.size());
    for (std::size_t i = 0; i < moduli_.size(); ++i)
        v.coords[i] = mod_reduce(-x.coords[i], moduli_[i]);
    return v;
}

ModuleVector SymplecticModule::scale(std::int64_t c, const ModuleVector& x) const {
    ModuleVector v;
    v.coords.resize(moduli_.size());
    for (std::size_t i = 0; i < moduli_.size(); ++i)
        v.coords[i] = mod_reduce(mod_reduce(c, moduli_[i]) * x.coords[i], moduli_[i]);
    return v;
}

std::int64_t SymplecticModule::element_order(const ModuleVector& x) const {
    std::int64_t ord = 1;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        if (x.coords[i] == 0) continue;
        std::int64_t o = moduli_[i] / std::gcd(x.coords[i], moduli_[i]);
        ord = std::lcm(ord, o);
    }
    return ord;
}

PairingValue SymplecticModule::pairing(const ModuleVector& x, const ModuleVector& y) const {
    return PairingValue{pairing_numerator(x.coords.data(), y.coords.data()), denom_};
}

std::int64_t SymplecticModule::pairing_numerator(const std::int64_t* x,
                                                 const std::int64_t* y) const {
    const int g = genus();
    std::int64_t acc = 0;
    for (int i = 0; i < g; ++i) {
        std::int64_t term = x[i] * y[g + i] - x[g + i] * y[i];
        acc = mod_reduce(acc + weights_[i] * mod_reduce(term, denom_), denom_);
    }
    return acc;
}

SymplecticModule make_module(PolarizationType ptype) { return SymplecticModule(std::move(ptype)); }

std::vector<std::pair<std::int64_t, SymplecticModule>> primary_decompose(
    const SymplecticModule& m) {
    std::vector<std::pair<std::int64_t, SymplecticModule>> out;
    std::int64_t rest = m.ptype().divisors().back();
    for (std::int64_t p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        while (rest % p == 0) rest /= p;
        out.emplace_back(p, SymplecticModule(PolarizationType({1})));  // placeholder
    }
    if (rest > 1) out.emplace_back(rest, SymplecticModule(PolarizationType({1})));
    for (auto& [p, comp] : out) {
        std::vector<std::int64_t> ds;
        for (auto d : m.ptype().divisors()) {
            std::int64_t q = 1;
            while (d % p == 0) {
                q *= p;
                d /= p;
            }
            ds.push_back(q);
        }
        comp = SymplecticModule(PolarizationType(std::move(ds)));
    }
    return out;
}

}  // namespace symcount
