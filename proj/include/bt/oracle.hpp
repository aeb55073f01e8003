#pragma once

#include "bt/dense.hpp"
#include "bt/normality.hpp"
#include "bt/product_criteria.hpp"
#include "bt/toeplitz.hpp"

// Independent dense brute-force counterparts of every structured predicate.
// Everything here is deliberately naive — triple-loop products, explicit
// shift and permutation matrices — and shares no decision logic with the
// structured implementations it cross-checks. Sizes are desk scale only
// (nd <= 512).

namespace bt::oracle {

/// Triple-loop dense product.
DenseMatrix dense_mul(const DenseMatrix& a, const DenseMatrix& b);

DenseMatrix dense_sub(const DenseMatrix& a, const DenseMatrix& b);

DenseMatrix dense_adjoint(const DenseMatrix& m);

/// The nd x nd block shift: d x d identity blocks on the first block
/// subdiagonal, zeros elsewhere.
DenseMatrix dense_shift_matrix(std::size_t n, std::size_t d);

/// M - S M S* with the shift applied as two explicit dense products.
DenseMatrix dense_displacement(const DenseMatrix& m, std::size_t n, std::size_t d);

/// True iff all blocks with equal j-i agree within tol.eps * scale(g).
bool diagonal_scan_is_toeplitz(const BlockGrid& g, Tolerance tol = {});

/// Relative residual behind diagonal_scan_is_toeplitz.
double diagonal_scan_residual(const BlockGrid& g);

enum class ProductCheckMode { Toeplitz, Equal };

/// Forms AB - CD densely; mode Toeplitz applies the diagonal scan, mode
/// Equal tests the difference against zero.
bool dense_product_check(const BlockToeplitz& a, const BlockToeplitz& b,
                         const BlockToeplitz& c, const BlockToeplitz& d,
                         ProductCheckMode mode, Tolerance tol = {});

/// P flatten(expand(t)) P^T for the explicit perfect-shuffle permutation
/// matrix P mapping flat index (block i, slot k) to (slot k, block i).
/// Block-diagonal with the n x n shuffle slices on the diagonal.
DenseMatrix dense_shuffle_conjugate(const DiagonalBlockToeplitz& t);

} // namespace bt::oracle
