#pragma once

#include <optional>

#include "bt/grid.hpp"
#include "bt/toeplitz.hpp"

namespace bt {

// The block shift S (identity blocks on the first block subdiagonal) is
// never materialized here; S g S* is an index shift. The oracle module
// builds the dense S for cross-checks.

/// S g S*: result(i,j) = g(i-1, j-1), zero first block row and column.
BlockGrid shift_down(const BlockGrid& g);

/// Displacement operator: g - S g S*.
BlockGrid displacement(const BlockGrid& g);

/// Inverse of the displacement operator: sum_{k=0}^{n-1} S^k dG S^k*.
/// For dG = displacement(g) this returns g (the sum telescopes, S^n = 0).
BlockGrid reconstruct(const BlockGrid& dG);

/// The factors X, X' of the rank-2 border decomposition
/// displacement(g) = X P+ + P+* X'*, where P+ = (I, 0, ..., 0) is the
/// first block coordinate row. Canonical normalization: xprime entry 0 is
/// the zero block, so the (0,0) slot is carried entirely by x.
struct DisplacementFactors {
    BlockColumn x;      // column i holds displacement(g)(i, 0)
    BlockColumn xprime; // entry j >= 1 holds adjoint(displacement(g)(0, j))
};

/// Materializes X P+ + P+* X'* as a grid (border blocks only).
BlockGrid factors_to_displacement(const DisplacementFactors& f);

/// A grid is block Toeplitz exactly when its displacement is supported on
/// the first block row and column. Returns the border factors when every
/// block outside that border has max-entry magnitude <= tol.eps * scale(g),
/// scale(g) = max(1, largest entry magnitude of g); otherwise nullopt.
std::optional<DisplacementFactors> toeplitz_factor(const BlockGrid& g,
                                                   Tolerance tol = {});

bool is_block_toeplitz(const BlockGrid& g, Tolerance tol = {});

/// Largest displacement magnitude outside the first block row/column,
/// relative to max(1, largest entry magnitude of g). is_block_toeplitz is
/// `residual <= tol.eps`.
double toeplitz_residual(const BlockGrid& g);

/// Reads the symbols off the factors: T_{-i} = x_i, T_j = adjoint(xprime_j).
/// This recovers the unique block Toeplitz matrix with the given border.
BlockToeplitz toeplitz_from_factors(const DisplacementFactors& f);

} // namespace bt
