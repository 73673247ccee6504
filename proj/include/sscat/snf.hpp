#pragma once

#include <vector>

#include "sscat/common.hpp"
#include "sscat/matrix.hpp"

namespace sscat {

using DenseMatrix = std::vector<std::vector<Integer>>;

/// Nonzero invariant factors d_1 | d_2 | ... | d_r, all positive.
/// Sparse unit-pivot elimination first, then a dense reduction of what is
/// left. Arithmetic runs in int64 and is redone in GMP on overflow.
std::vector<Integer> invariant_factors(const SparseMatrix& a);

/// min(rows, cols) diagonal entries of the Smith form, zeros included.
std::vector<Integer> smith_diagonal(const SparseMatrix& a);

/// Smith form with unimodular transforms, U * A * V = D.
struct SmithDecomposition {
    DenseMatrix u;
    DenseMatrix v;
    DenseMatrix d;
    Index rank = 0;
};

SmithDecomposition smith_decomposition(const DenseMatrix& a, Index rows, Index cols);

/// Rank over Z (equal to the rank over Q).
Index rank(const SparseMatrix& a);

/// Rank after reduction mod a prime p.
Index rank_mod_p(const SparseMatrix& a, long p);

/// Basis of ker(A) over Z, as columns of length cols(A).
std::vector<std::vector<Integer>> integer_kernel(const SparseMatrix& a);

/// Tests whether each column of W lies in the Z-span of the columns of A.
bool in_integer_image(const SparseMatrix& a, const std::vector<std::vector<Integer>>& columns);

}  // namespace sscat
