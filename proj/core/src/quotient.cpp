#include "symcount/quotient.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace symcount {

namespace {

constexpr std::int64_t kMaxQuotientElements = 1 << 22;

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
    std::int64_t t = 0, new_t = 1, r = m, new_r = a % m;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1) throw std::logic_error("inverse_mod: not invertible");
    return t < 0 ? t + m : t;
}

}  // namespace

QuotientWithForm::QuotientWithForm(const Subgroup& w)
    : w_(w), w_perp_(orthogonal_complement(w)), quotient_(PolarizationType({1})) {
    if (!is_isotropic(w)) throw std::invalid_argument("quotient_with_form: W is not isotropic");

    const SymplecticModule& m = w.module();
    Int qsize = w_perp_.order() / w_.order();
    if (qsize > kMaxQuotientElements)
        throw std::runtime_error("quotient_with_form: quotient too large to realize explicitly");

    // Distinct coset representatives of W^perp / W.
    std::set<std::vector<std::int64_t>> reps;
    for (const auto& x : w_perp_.elements()) reps.insert(coset_rep(x));

    // Greedy hyperbolic-pair extraction, largest order first.
    std::vector<std::vector<std::int64_t>> live(reps.begin(), reps.end());
    std::vector<std::pair<ModuleVector, ModuleVector>> pairs;  // (x, y), pairing 1/delta
    std::vector<std::int64_t> deltas;
    auto quotient_order = [&](const ModuleVector& x) {
        ModuleVector acc = x;
        std::int64_t k = 1;
        while (coset_rep(acc) != std::vector<std::int64_t>(acc.coords.size(), 0)) {
            acc = m.add(acc, x);
            ++k;
        }
        return k;
    };
    while (true) {
        std::int64_t best_ord = 1;
        const std::vector<std::int64_t>* best = nullptr;
        for (const auto& r : live) {
            ModuleVector x{r};
            std::int64_t o = quotient_order(x);
            if (o > best_ord) {
                best_ord = o;
                best = &r;
            }
        }
        if (!best) break;  // only the zero coset remains
        ModuleVector x{*best};
        const std::int64_t delta = best_ord;
        const std::int64_t dd = m.pairing_denominator();

        // Partner whose pairing with x has order exactly delta.
        const std::vector<std::int64_t>* mate = nullptr;
        std::int64_t mate_num = 0;
        for (const auto& r : live) {
            std::int64_t num = m.pairing_numerator(x.coords.data(), r.data());
            if (num != 0 && dd / std::gcd(num, dd) == delta) {
                mate = &r;
                mate_num = num;
                break;  // live is sorted, first hit is the lexicographic minimum
            }
        }
        if (!mate) throw std::logic_error("quotient_with_form: induced form is degenerate");
        // Scale so that the pairing is exactly 1/delta.
        std::int64_t a = mate_num / (dd / delta);
        ModuleVector y = m.scale(inverse_mod(a, delta), ModuleVector{*mate});

        pairs.emplace_back(x, y);
        deltas.push_back(delta);

        // Restrict to the symplectic complement of the extracted pair.
        std::vector<std::vector<std::int64_t>> next;
        for (auto& r : live) {
            if (m.pairing_numerator(x.coords.data(), r.data()) == 0 &&
                m.pairing_numerator(y.coords.data(), r.data()) == 0) {
                next.push_back(std::move(r));
            }
        }
        live = std::move(next);
    }

    // deltas came out largest-first; the module convention is ascending.
    std::vector<std::int64_t> chain(deltas.rbegin(), deltas.rend());
    if (chain.empty()) chain.push_back(1);
    quotient_ = SymplecticModule(PolarizationType(chain));
    const int gq = quotient_.genus();
    basis_lifts_.assign(2 * gq, quotient_.basis_vector(0));  // placeholder, overwritten below
    const std::size_t np = pairs.size();
    if (np == 0) {
        // Trivial quotient K(1): both generators are the zero coset.
        basis_lifts_[0] = m.reduce(std::vector<std::int64_t>(m.rank(), 0));
        basis_lifts_[1] = basis_lifts_[0];
    } else {
        for (std::size_t j = 0; j < np; ++j) {
            // Pairs were extracted largest-delta-first; flip to ascending.
            std::size_t pos = np - 1 - j;
            basis_lifts_[pos] = pairs[j].first;
            basis_lifts_[gq + pos] = pairs[j].second;
        }
    }

    // Discrete-log table: quotient coordinates -> canonical coset representative.
    const auto& qmod = quotient_.moduli();
    std::vector<std::int64_t> c(qmod.size(), 0);
    while (true) {
        std::vector<std::int64_t> raw(m.rank(), 0);
        ModuleVector acc = m.reduce(raw);
        for (std::size_t i = 0; i < c.size(); ++i)
            if (c[i]) acc = m.add(acc, m.scale(c[i], basis_lifts_[i]));
        dlog_[coset_rep(acc)] = c;
        std::size_t k = 0;
        while (k < c.size() && ++c[k] == qmod[k]) c[k++] = 0;
        if (k == c.size()) break;
    }
    if (static_cast<Int>(dlog_.size()) != qsize)
        throw std::logic_error("quotient_with_form: symplectic basis does not span the quotient");
}

std::vector<std::int64_t> QuotientWithForm::coset_rep(const ModuleVector& x) const {
    const auto& b = w_.basis();
    const std::size_t n = b.size();
    std::vector<std::int64_t> v = x.coords;
    for (std::size_t i = 0; i < n; ++i) {
        std::int64_t q = v[i] / b[i][i];
        if (v[i] % b[i][i] < 0) --q;
        if (q != 0)
            for (std::size_t j = i; j < n; ++j) v[j] -= q * b[i][j];
    }
    return v;
}

ModuleVector QuotientWithForm::lift(const ModuleVector& q) const {
    const SymplecticModule& m = w_.module();
    ModuleVector acc = m.reduce(std::vector<std::int64_t>(m.rank(), 0));
    for (std::size_t i = 0; i < q.coords.size(); ++i)
        if (q.coords[i]) acc = m.add(acc, m.scale(q.coords[i], basis_lifts_[i]));
    return acc;
}

ModuleVector QuotientWithForm::project(const ModuleVector& x) const {
    auto it = dlog_.find(coset_rep(x));
    if (it == dlog_.end())
        throw std::invalid_argument("project: element does not lie in W^perp");
    return ModuleVector{it->second};
}

Subgroup QuotientWithForm::project_subgroup(const Subgroup& h) const {
    std::vector<ModuleVector> gens;
    for (int i = 0; i < h.module().rank(); ++i) gens.push_back(project(h.row_element(i)));
    return Subgroup::from_generators(quotient_, gens);
}

Subgroup QuotientWithForm::lift_subgroup(const Subgroup& hq) const {
    std::vector<ModuleVector> gens;
    for (int i = 0; i < quotient_.rank(); ++i) gens.push_back(lift(hq.row_element(i)));
    for (int i = 0; i < w_.module().rank(); ++i) gens.push_back(w_.row_element(i));
    return Subgroup::from_generators(w_.module(), gens);
}

QuotientWithForm quotient_with_form(const Subgroup& w) { return QuotientWithForm(w); }

}  // namespace symcount
