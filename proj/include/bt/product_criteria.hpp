#pragma once

#include "bt/displacement.hpp"
#include "bt/grid.hpp"
#include "bt/toeplitz.hpp"

namespace bt {

/// The four bordered wing vectors of a block Toeplitz matrix, each with the
/// zero block in the zeroth slot:
///   minus_col (A~-) entry i = T_{-i}         plus_col (A~+) entry i = T_{n-i}
///   plus_row  (B~+) entry j = T_j            minus_row (B~-) entry j = T_{j-n}
struct WingSet {
    BlockColumn minus_col;
    BlockColumn plus_col;
    BlockRow plus_row;
    BlockRow minus_row;
};

WingSet wings(const BlockToeplitz& t);

/// The obstruction A~- B~+ - A~+ B~- to a product of two block Toeplitz
/// matrices being block Toeplitz, kept in factored block-rank <= 2 form.
/// Its materialization has zero first block row and column and interior
/// entry (i,j) = A_{-i} B_j - A_{n-i} B_{j-n} for 1 <= i,j <= n-1.
class WingGap {
public:
    WingGap(BlockColumn a_minus, BlockColumn a_plus, BlockRow b_plus, BlockRow b_minus);

    std::size_t n() const { return a_minus_.n(); }
    std::size_t d() const { return a_minus_.d(); }

    /// Entry (i,j) of the materialization; two block products per interior
    /// entry, zero block on the border.
    Block entry(std::size_t i, std::size_t j) const;

    BlockGrid materialize() const;

    /// max interior |entry| over max(1, same); zero gap has residual 0.
    double zero_residual() const;

    /// max interior |entry - other.entry| relative to the larger gap scale.
    double diff_residual(const WingGap& other) const;

private:
    BlockColumn a_minus_, a_plus_;
    BlockRow b_plus_, b_minus_;
};

/// Factored form of A~- B~+ - A~+ B~- for two block Toeplitz matrices of
/// matching shape.
WingGap wing_gap(const BlockToeplitz& a, const BlockToeplitz& b);

/// The rank-2-plus-gap decomposition of the displacement of a product:
/// displacement(AB) = Y P+ + P+* Y'* + gap. y and yprime are read off the
/// first block column and row of AB, which are computed directly from the
/// symbols at O(n^2 d^3) cost; the full product is never formed.
struct ProductDisplacement {
    BlockColumn y;      // entry i = (AB)(i, 0)
    BlockColumn yprime; // entry 0 = 0, entry j = adjoint((AB)(0, j))
    WingGap gap;

    BlockGrid materialize() const;
};

ProductDisplacement product_displacement(const BlockToeplitz& a, const BlockToeplitz& b);

/// Decision outcome plus the relative residual it was based on; the verdict
/// is exactly `residual <= tol.eps`.
struct CheckResult {
    bool verdict;
    double residual;
};

/// AB is block Toeplitz iff the wing gap of (a, b) vanishes.
CheckResult product_toeplitz_check(const BlockToeplitz& a, const BlockToeplitz& b,
                                   Tolerance tol = {});
bool product_is_toeplitz(const BlockToeplitz& a, const BlockToeplitz& b,
                         Tolerance tol = {});

/// AB - CD is block Toeplitz iff the wing gaps of (a, b) and (c, d) agree.
CheckResult difference_toeplitz_check(const BlockToeplitz& a, const BlockToeplitz& b,
                                      const BlockToeplitz& c, const BlockToeplitz& d,
                                      Tolerance tol = {});
bool difference_is_toeplitz(const BlockToeplitz& a, const BlockToeplitz& b,
                            const BlockToeplitz& c, const BlockToeplitz& d,
                            Tolerance tol = {});

/// AB = CD iff AB - CD is block Toeplitz and the (y, yprime) pairs of both
/// products agree.
CheckResult products_equal_check(const BlockToeplitz& a, const BlockToeplitz& b,
                                 const BlockToeplitz& c, const BlockToeplitz& d,
                                 Tolerance tol = {});
bool products_equal(const BlockToeplitz& a, const BlockToeplitz& b,
                    const BlockToeplitz& c, const BlockToeplitz& d,
                    Tolerance tol = {});

} // namespace bt
