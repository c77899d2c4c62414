#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace symcount::linalg {

using Int = boost::multiprecision::cpp_int;
using Mat = std::vector<std::vector<Int>>;

/// Row-style Hermite normal form of the lattice spanned by `rows`
/// (each of length n). The row lattice must have full rank n.
/// Result: n x n upper triangular, positive diagonal, entry (i,j) for
/// j > i reduced into [0, H[j][j]).
Mat hnf(Mat rows, std::size_t n);

/// Diagonal of the Smith normal form: the chain s_1 | s_2 | ... | s_k,
/// nonnegative, with any zeros at the end.
std::vector<Int> snf_diagonal(Mat a);

/// u * a * v = s with u, v unimodular and s in Smith normal form.
struct SnfTransform {
    Mat u, s, v;
};
SnfTransform snf_with_transform(Mat a);

Mat identity(std::size_t n);

}  // namespace symcount::linalg
