#include "symcount/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace symcount::linalg {

namespace {

Int floordiv(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

Mat identity(std::size_t n) {
    Mat m(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

Mat hnf(Mat rows, std::size_t n) {
    const std::size_t m = rows.size();
    std::size_t pivot = 0;
    for (std::size_t col = 0; col < n && pivot < m; ++col) {
        // Euclidean elimination in this column below the pivot.
        while (true) {
            std::size_t best = m;
            for (std::size_t r = pivot; r < m; ++r) {
                if (rows[r][col] != 0 &&
                    (best == m || abs(rows[r][col]) < abs(rows[best][col]))) {
                    best = r;
                }
            }
            if (best == m) break;  // column is zero below pivot
            std::swap(rows[pivot], rows[best]);
            bool eliminated = true;
            for (std::size_t r = pivot + 1; r < m; ++r) {
                if (rows[r][col] == 0) continue;
                Int q = floordiv(rows[r][col], rows[pivot][col]);
                for (std::size_t c = col; c < n; ++c) rows[r][c] -= q * rows[pivot][c];
                if (rows[r][col] != 0) eliminated = false;
            }
            if (eliminated) break;
        }
        if (rows[pivot][col] != 0) {
            if (rows[pivot][col] < 0) {
                for (std::size_t c = col; c < n; ++c) rows[pivot][c] = -rows[pivot][c];
            }
            ++pivot;
        }
    }
    if (pivot != n) throw std::invalid_argument("hnf: row lattice is not full rank");
    rows.resize(n);
    // Reduce above-diagonal entries into [0, diagonal of their column).
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            Int q = floordiv(rows[i][j], rows[j][j]);
            if (q == 0) continue;
            for (std::size_t c = j; c < n; ++c) rows[i][c] -= q * rows[j][c];
        }
    }
    return rows;
}

namespace {

// Reduces a to Smith form in place; u/v are updated when non-null.
void snf_inplace(Mat& a, Mat* u, Mat* v) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    auto row_op = [&](std::size_t dst, std::size_t src, const Int& q) {
        for (std::size_t c = 0; c < cols; ++c) a[dst][c] -= q * a[src][c];
        if (u)
            for (std::size_t c = 0; c < rows; ++c) (*u)[dst][c] -= q * (*u)[src][c];
    };
    auto col_op = [&](std::size_t dst, std::size_t src, const Int& q) {
        for (std::size_t r = 0; r < rows; ++r) a[r][dst] -= q * a[r][src];
        if (v)
            for (std::size_t r = 0; r < cols; ++r) (*v)[r][dst] -= q * (*v)[r][src];
    };
    auto swap_rows = [&](std::size_t i, std::size_t j) {
        std::swap(a[i], a[j]);
        if (u) std::swap((*u)[i], (*u)[j]);
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < rows; ++r) std::swap(a[r][i], a[r][j]);
        if (v)
            for (std::size_t r = 0; r < cols; ++r) std::swap((*v)[r][i], (*v)[r][j]);
    };

    const std::size_t k = std::min(rows, cols);
    for (std::size_t t = 0; t < k; ++t) {
        while (true) {
            // Find the nonzero entry of least magnitude in the trailing block.
            std::size_t pr = rows, pc = cols;
            for (std::size_t r = t; r < rows; ++r)
                for (std::size_t c = t; c < cols; ++c)
                    if (a[r][c] != 0 && (pr == rows || abs(a[r][c]) < abs(a[pr][pc]))) {
                        pr = r;
                        pc = c;
                    }
            if (pr == rows) return;  // trailing block zero; done
            if (pr != t) swap_rows(t, pr);
            if (pc != t) swap_cols(t, pc);

            bool clean = true;
            for (std::size_t r = t + 1; r < rows; ++r) {
                if (a[r][t] == 0) continue;
                row_op(r, t, floordiv(a[r][t], a[t][t]));
                if (a[r][t] != 0) clean = false;
            }
            for (std::size_t c = t + 1; c < cols; ++c) {
                if (a[t][c] == 0) continue;
                col_op(c, t, floordiv(a[t][c], a[t][t]));
                if (a[t][c] != 0) clean = false;
            }
            if (!clean) continue;
            // Divisibility: a[t][t] must divide the rest of the block.
            bool divides = true;
            for (std::size_t r = t + 1; r < rows && divides; ++r)
                for (std::size_t c = t + 1; c < cols && divides; ++c)
                    if (a[r][c] % a[t][t] != 0) {
                        // Fold row r into row t and retry.
                        row_op(t, r, Int(-1));
                        divides = false;
                    }
            if (divides) break;
        }
        if (a[t][t] < 0) {
            for (std::size_t c = t; c < cols; ++c) a[t][c] = -a[t][c];
            if (u)
                for (std::size_t c = 0; c < rows; ++c) (*u)[t][c] = -(*u)[t][c];
        }
    }
}

}  // namespace

std::vector<Int> snf_diagonal(Mat a) {
    snf_inplace(a, nullptr, nullptr);
    std::vector<Int> d;
    const std::size_t k = a.empty() ? 0 : std::min(a.size(), a[0].size());
    for (std::size_t i = 0; i < k; ++i) d.push_back(a[i][i]);
    return d;
}

SnfTransform snf_with_transform(Mat a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    SnfTransform t{identity(rows), {}, identity(cols)};
    snf_inplace(a, &t.u, &t.v);
    t.s = std::move(a);
    return t;
}

}  // namespace symcount::linalg
