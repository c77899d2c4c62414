#include "symcount/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <sstream>
#include <thread>

#include "symcount/quotient.hpp"

namespace symcount {

namespace {

using Clock = std::chrono::steady_clock;

struct SearchState {
    std::atomic<std::uint64_t> visited{0};
    std::atomic<bool> stop{false};
    Clock::time_point start = Clock::now();

    double elapsed() const {
        return std::chrono::duration<double>(Clock::now() - start).count();
    }
};

std::vector<std::int64_t> divisors_of(std::int64_t m) {
    std::vector<std::int64_t> out;
    for (std::int64_t a = 1; a <= m; ++a)
        if (m % a == 0) out.push_back(a);
    return out;
}

// All diagonal tuples (a_1,...,a_n) with a_i | m_i and, when target_det is
// set, prod a_i == target_det. These are the independent search partitions.
std::vector<std::vector<std::int64_t>> diagonal_tuples(
    const std::vector<std::int64_t>& moduli, std::optional<std::int64_t> target_det) {
    std::vector<std::vector<std::int64_t>> divs;
    for (auto m : moduli) divs.push_back(divisors_of(m));
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> cur(moduli.size());
    auto rec = [&](auto&& self, std::size_t i, std::int64_t prod) -> void {
        if (i == moduli.size()) {
            if (!target_det || prod == *target_det) out.push_back(cur);
            return;
        }
        for (auto a : divs[i]) {
            if (target_det && (*target_det % (prod * a)) != 0) continue;
            cur[i] = a;
            self(self, i + 1, prod * a);
        }
    };
    rec(rec, 0, 1);
    return out;
}

// Depth-first fill of the off-diagonal digits of a canonical Hermite basis,
// rows from the bottom up, with containment and (optionally) isotropy
// pruning as soon as each row is complete.
class DiagonalSearch {
public:
    DiagonalSearch(const SymplecticModule& m, std::vector<std::int64_t> diag,
                   bool isotropic_only, const EnumerationBudget& budget, SearchState& state)
        : m_(m),
          n_(static_cast<std::size_t>(m.rank())),
          diag_(std::move(diag)),
          isotropic_only_(isotropic_only),
          budget_(budget),
          state_(state) {
        basis_.assign(n_, std::vector<std::int64_t>(n_, 0));
        reduced_.assign(n_, std::vector<std::int64_t>(n_, 0));
        for (std::size_t i = 0; i < n_; ++i) basis_[i][i] = diag_[i];
    }

    void run(std::vector<Subgroup>& out) {
        out_ = &out;
        fill_row(static_cast<int>(n_) - 1);
    }

private:
    void note_candidate() {
        std::uint64_t v = state_.visited.fetch_add(1, std::memory_order_relaxed) + 1;
        if ((v & 0xFFF) == 0) {
            if (v > budget_.max_candidates || state_.elapsed() > budget_.max_seconds)
                state_.stop.store(true, std::memory_order_relaxed);
        }
    }

    bool containment_ok(std::size_t i) const {
        // m_i e_i must be an integer combination of rows i..n-1.
        std::vector<std::int64_t> v(n_, 0);
        v[i] = m_.moduli()[i];
        for (std::size_t k = i; k < n_; ++k) {
            if (v[k] % basis_[k][k] != 0) return false;
            std::int64_t c = v[k] / basis_[k][k];
            if (c != 0)
                for (std::size_t j = k; j < n_; ++j) v[j] -= c * basis_[k][j];
        }
        return true;
    }

    bool row_ok(std::size_t i) {
        const auto& mods = m_.moduli();
        for (std::size_t j = 0; j < n_; ++j) reduced_[i][j] = basis_[i][j] % mods[j];
        if (!containment_ok(i)) return false;
        if (isotropic_only_) {
            for (std::size_t j = i + 1; j < n_; ++j)
                if (m_.pairing_numerator(reduced_[i].data(), reduced_[j].data()) != 0)
                    return false;
        }
        return true;
    }

    void fill_row(int i) {
        if (state_.stop.load(std::memory_order_relaxed)) return;
        if (i < 0) {
            out_->push_back(Subgroup::from_canonical_basis(m_, basis_));
            return;
        }
        fill_digit(i, static_cast<std::size_t>(i) + 1);
    }

    void fill_digit(int i, std::size_t j) {
        if (state_.stop.load(std::memory_order_relaxed)) return;
        if (j == n_) {
            note_candidate();
            if (row_ok(static_cast<std::size_t>(i))) fill_row(i - 1);
            return;
        }
        for (std::int64_t t = 0; t < diag_[j]; ++t) {
            basis_[static_cast<std::size_t>(i)][j] = t;
            fill_digit(i, j + 1);
        }
        basis_[static_cast<std::size_t>(i)][j] = 0;
    }

    const SymplecticModule& m_;
    std::size_t n_;
    std::vector<std::int64_t> diag_;
    bool isotropic_only_;
    const EnumerationBudget& budget_;
    SearchState& state_;
    std::vector<std::vector<std::int64_t>> basis_;
    std::vector<std::vector<std::int64_t>> reduced_;
    std::vector<Subgroup>* out_ = nullptr;
};

std::vector<Subgroup> run_search(const SymplecticModule& m,
                                 std::optional<std::int64_t> target_det, bool isotropic_only,
                                 const EnumerationBudget& budget, int jobs) {
    auto diagonals = diagonal_tuples(m.moduli(), target_det);
    SearchState state;

    unsigned workers = jobs > 0 ? static_cast<unsigned>(jobs)
                                : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, std::max<std::size_t>(diagonals.size(), 1));

    std::vector<std::vector<Subgroup>> partials(diagonals.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        while (!state.stop.load(std::memory_order_relaxed)) {
            std::size_t idx = next.fetch_add(1, std::memory_order_relaxed);
            if (idx >= diagonals.size()) break;
            DiagonalSearch search(m, diagonals[idx], isotropic_only, budget, state);
            search.run(partials[idx]);
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    if (state.stop.load()) {
        std::ostringstream what;
        what << "enumeration budget exceeded for K" << m.ptype().to_string() << " after "
             << state.visited.load() << " candidates, " << state.elapsed() << " s";
        throw BudgetExceeded(what.str(), state.visited.load(), state.elapsed());
    }

    std::vector<Subgroup> out;
    for (auto& p : partials)
        for (auto& s : p) out.push_back(std::move(s));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

bool TypeLabel::admissible(int n) const {
    switch (kind) {
        case 1: return n >= 1 && k == 0 && l == 0;
        case 2: return l == 0 && 0 < k && k < n - k;
        case 3: return k == 0 && l == 0 && n >= 2 && n % 2 == 0;
        case 4: return 0 < l && l < k && k < n - k;
        case 5: return k == 0 && n % 2 == 0 && 0 < l && l < n / 2;
        case 6: return l == 0 && 0 < k && k < n - k;
        case 7: return k == 0 && l == 0 && n >= 2 && n % 2 == 0;
        default: return false;
    }
}

std::string TypeLabel::to_string() const {
    switch (kind) {
        case 2: return "2_" + std::to_string(k);
        case 4: return "4_{" + std::to_string(k) + "," + std::to_string(l) + "}";
        case 5: return "5_" + std::to_string(l);
        case 6: return "6_" + std::to_string(k);
        default: return std::to_string(kind);
    }
}

std::vector<TypeLabel> admissible_labels(int n) {
    std::vector<TypeLabel> out;
    if (n < 1) return out;
    out.push_back({1, 0, 0});
    for (int k = 1; k < n - k; ++k) out.push_back({2, k, 0});
    if (n % 2 == 0) out.push_back({3, 0, 0});
    for (int k = 1; k < n - k; ++k)
        for (int l = 1; l < k; ++l) out.push_back({4, k, l});
    if (n % 2 == 0)
        for (int l = 1; l < n / 2; ++l) out.push_back({5, 0, l});
    for (int k = 1; k < n - k; ++k) out.push_back({6, k, 0});
    if (n % 2 == 0) out.push_back({7, 0, 0});
    return out;
}

TypeLabel classify_invariants(std::int64_t p, int n,
                              const std::vector<std::int64_t>& invariants) {
    auto fail = [&](const char* why) {
        std::ostringstream os;
        os << "unclassifiable maximal isotropic subgroup of K(p^n,p^n), p=" << p << ", n=" << n
           << ", invariants (";
        for (std::size_t i = 0; i < invariants.size(); ++i)
            os << (i ? "," : "") << invariants[i];
        os << "): " << why;
        throw std::logic_error(os.str());
    };

    std::vector<int> e;  // exponents, descending
    for (auto it = invariants.rbegin(); it != invariants.rend(); ++it) {
        std::int64_t v = *it;
        int exp = 0;
        while (v % p == 0) {
            v /= p;
            ++exp;
        }
        if (v != 1 || exp == 0) fail("invariant is not a power of p");
        e.push_back(exp);
    }
    int sum = std::accumulate(e.begin(), e.end(), 0);
    if (sum != 2 * n) fail("wrong order");

    TypeLabel label;
    if (e.size() == 2 && e[0] == n && e[1] == n) {
        label = {1, 0, 0};
    } else if (e.size() == 3 && e[0] == n) {
        if (e[1] == e[2])
            label = {3, 0, 0};
        else
            label = {2, e[2], 0};
    } else if (e.size() == 4) {
        if (e[0] == e[3])
            label = {7, 0, 0};
        else if (e[0] == e[1] && e[2] == e[3])
            label = {6, e[2], 0};
        else if (e[1] == e[2])
            label = {5, 0, e[3]};
        else
            label = {4, e[2], e[3]};
    } else {
        fail("rank/pattern matches no type");
    }
    if (!label.admissible(n)) fail("pattern violates the type's restrictions");
    // Cross-check the full exponent pattern, not just the parameters.
    std::vector<int> expect;
    switch (label.kind) {
        case 1: expect = {n, n}; break;
        case 2: expect = {n, n - label.k, label.k}; break;
        case 3: expect = {n, n / 2, n / 2}; break;
        case 4: expect = {n - label.l, n - label.k, label.k, label.l}; break;
        case 5: expect = {n - label.l, n / 2, n / 2, label.l}; break;
        case 6: expect = {n - label.k, n - label.k, label.k, label.k}; break;
        case 7: expect = {n / 2, n / 2, n / 2, n / 2}; break;
    }
    if (e != expect) fail("exponents disagree with the matched type");
    return label;
}

std::vector<Subgroup> enumerate_maximal_isotropic(const SymplecticModule& m,
                                                  const EnumerationBudget& budget, int jobs) {
    Int d = m.ptype().degree();
    if (d > (Int(1) << 31))
        throw std::domain_error("enumerate_maximal_isotropic: module is beyond desk scale");
    // det(basis) = prod(moduli) / |L/Lambda| = d^2 / d = d.
    std::int64_t target = static_cast<std::int64_t>(d);
    return run_search(m, target, /*isotropic_only=*/true, budget, jobs);
}

Int count_maximal_isotropic(const SymplecticModule& m, const EnumerationBudget& budget,
                            int jobs) {
    Int total = 1;
    for (const auto& [p, comp] : primary_decompose(m))
        total *= static_cast<Int>(enumerate_maximal_isotropic(comp, budget, jobs).size());
    return total;
}

TypeCensus census_by_type(std::int64_t p, int n, const EnumerationBudget& budget, int jobs) {
    if (n < 0) throw std::invalid_argument("census_by_type: n must be >= 0");
    TypeCensus census;
    if (n == 0) {
        census.total = 1;
        return census;
    }
    std::int64_t pn = 1;
    for (int i = 0; i < n; ++i) pn *= p;
    SymplecticModule m(PolarizationType({pn, pn}));
    for (const auto& h : enumerate_maximal_isotropic(m, budget, jobs)) {
        TypeLabel label = classify_invariants(p, n, abelian_invariants(h));
        census.counts[label] += 1;
        census.total += 1;
    }
    return census;
}

Int count_containing(const Subgroup& w, const EnumerationBudget& budget) {
    if (!is_isotropic(w)) throw std::invalid_argument("count_containing: W is not isotropic");
    QuotientWithForm q(w);
    return count_maximal_isotropic(q.quotient_module(), budget);
}

std::vector<Subgroup> enumerate_all_subgroups(const SymplecticModule& m, std::optional<Int> order,
                                              const EnumerationBudget& budget) {
    std::optional<std::int64_t> target;
    if (order) {
        Int whole = 1;
        for (auto mod : m.moduli()) whole *= mod;
        if (*order == 0 || whole % *order != 0) return {};
        target = static_cast<std::int64_t>(whole / *order);
    }
    return run_search(m, target, /*isotropic_only=*/false, budget, 1);
}

}  // namespace symcount
