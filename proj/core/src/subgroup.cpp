#include "symcount/subgroup.hpp"

#include <numeric>
#include <stdexcept>

#include "symcount/linalg.hpp"

namespace symcount {

namespace {

using linalg::Mat;

Mat lambda_rows(const SymplecticModule& m) {
    const std::size_t n = m.moduli().size();
    Mat rows(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) rows[i][i] = m.moduli()[i];
    return rows;
}

std::vector<std::vector<std::int64_t>> to_int64(const Mat& h) {
    std::vector<std::vector<std::int64_t>> out(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) {
        out[i].reserve(h[i].size());
        for (const auto& v : h[i]) out[i].push_back(static_cast<std::int64_t>(v));
    }
    return out;
}

Int index_in_lambda(const SymplecticModule& m,
                    const std::vector<std::vector<std::int64_t>>& basis) {
    Int det = 1;
    for (std::size_t i = 0; i < basis.size(); ++i) det *= basis[i][i];
    Int whole = 1;
    for (auto mod : m.moduli()) whole *= mod;
    return whole / det;
}

}  // namespace

Subgroup::Subgroup(SymplecticModule m, std::vector<std::vector<std::int64_t>> basis, Int order)
    : module_(std::move(m)), basis_(std::move(basis)), order_(std::move(order)) {}

Subgroup Subgroup::from_generators(const SymplecticModule& m,
                                   const std::vector<ModuleVector>& gens) {
    const std::size_t n = m.moduli().size();
    Mat rows = lambda_rows(m);
    for (const auto& g : gens) {
        if (g.coords.size() != n) throw std::invalid_argument("generator has wrong length");
        std::vector<Int> row(n);
        for (std::size_t i = 0; i < n; ++i) row[i] = g.coords[i];
        rows.push_back(std::move(row));
    }
    Mat h = linalg::hnf(std::move(rows), n);
    auto basis = to_int64(h);
    Int order = index_in_lambda(m, basis);
    return Subgroup(m, std::move(basis), std::move(order));
}

Subgroup Subgroup::from_canonical_basis(const SymplecticModule& m,
                                        std::vector<std::vector<std::int64_t>> basis) {
    Int order = index_in_lambda(m, basis);
    return Subgroup(m, std::move(basis), std::move(order));
}

Subgroup Subgroup::trivial(const SymplecticModule& m) { return from_generators(m, {}); }

Subgroup Subgroup::whole(const SymplecticModule& m) {
    std::vector<ModuleVector> gens;
    for (int i = 0; i < m.rank(); ++i) gens.push_back(m.basis_vector(i));
    return from_generators(m, gens);
}

ModuleVector Subgroup::row_element(int i) const { return module_.reduce(basis_.at(i)); }

bool Subgroup::contains(const ModuleVector& x) const {
    const std::size_t n = basis_.size();
    std::vector<std::int64_t> v = x.coords;
    for (std::size_t k = 0; k < n; ++k) {
        if (v[k] % basis_[k][k] != 0) return false;
        std::int64_t c = v[k] / basis_[k][k];
        if (c != 0)
            for (std::size_t j = k; j < n; ++j) v[j] -= c * basis_[k][j];
    }
    return true;
}

std::vector<ModuleVector> Subgroup::elements() const {
    const std::size_t n = basis_.size();
    // Coefficients c_i in [0, m_i / a_ii) parameterize L/Lambda exactly once.
    std::vector<std::int64_t> limits(n);
    for (std::size_t i = 0; i < n; ++i) limits[i] = module_.moduli()[i] / basis_[i][i];
    std::vector<ModuleVector> out;
    std::vector<std::int64_t> c(n, 0);
    while (true) {
        std::vector<std::int64_t> raw(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            if (c[i])
                for (std::size_t j = i; j < n; ++j) raw[j] += c[i] * basis_[i][j];
        out.push_back(module_.reduce(raw));
        std::size_t k = 0;
        while (k < n && ++c[k] == limits[k]) c[k++] = 0;
        if (k == n) break;
    }
    return out;
}

bool is_isotropic(const Subgroup& h) {
    const int n = h.module().rank();
    std::vector<ModuleVector> rows;
    rows.reserve(n);
    for (int i = 0; i < n; ++i) rows.push_back(h.row_element(i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!h.module().pairing(rows[i], rows[j]).is_zero()) return false;
    return true;
}

bool is_maximal_isotropic(const Subgroup& h) {
    return h.order() == h.module().ptype().degree() && is_isotropic(h);
}

Subgroup orthogonal_complement(const Subgroup& h) {
    const SymplecticModule& m = h.module();
    const int g = m.genus();
    const std::size_t n = static_cast<std::size_t>(2 * g);
    const std::int64_t dd = m.pairing_denominator();

    // Row per basis row a of h: the linear form x -> D * pairing(x, a).
    Mat c(n, std::vector<Int>(n, 0));
    for (std::size_t r = 0; r < n; ++r) {
        ModuleVector a = h.row_element(static_cast<int>(r));
        for (int i = 0; i < g; ++i) {
            std::int64_t w = dd / m.ptype().divisor(i);
            c[r][i] = w * a.coords[g + i] % dd;
            c[r][g + i] = (-w * a.coords[i]) % dd;
        }
    }
    auto t = linalg::snf_with_transform(std::move(c));

    // C x == 0 mod D  <=>  z = V^{-1} x has z_i == 0 mod D / gcd(s_i, D);
    // a basis of the solution lattice is the scaled columns of V.
    Mat rows = lambda_rows(m);
    for (std::size_t i = 0; i < n; ++i) {
        Int s = i < t.s.size() ? t.s[i][i] : Int(0);
        Int scale = Int(dd) / gcd(s, Int(dd));
        std::vector<Int> row(n);
        for (std::size_t r = 0; r < n; ++r) row[r] = scale * t.v[r][i];
        rows.push_back(std::move(row));
    }
    Mat hn = linalg::hnf(std::move(rows), n);
    auto basis = [&] {
        std::vector<std::vector<std::int64_t>> b(hn.size());
        for (std::size_t i = 0; i < hn.size(); ++i)
            for (const auto& v : hn[i]) b[i].push_back(static_cast<std::int64_t>(v));
        return b;
    }();
    return Subgroup::from_canonical_basis(m, std::move(basis));
}

std::vector<std::int64_t> abelian_invariants(const Subgroup& h) {
    const std::size_t n = h.basis().size();
    const auto& b = h.basis();
    // X solves X * basis = diag(moduli); integral because Lambda <= L.
    Mat x(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Int rhs = (i == j) ? Int(h.module().moduli()[i]) : Int(0);
            for (std::size_t k = 0; k < j; ++k) rhs -= x[i][k] * b[k][j];
            if (rhs % b[j][j] != 0) throw std::logic_error("subgroup basis does not contain Lambda");
            x[i][j] = rhs / b[j][j];
        }
    }
    auto diag = linalg::snf_diagonal(std::move(x));
    std::vector<std::int64_t> out;
    for (const auto& d : diag)
        if (d > 1) out.push_back(static_cast<std::int64_t>(d));
    return out;
}

}  // namespace symcount
