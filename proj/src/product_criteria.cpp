#include "bt/product_criteria.hpp"

#include <stdexcept>

namespace bt {

namespace {
void check_pair(const BlockToeplitz& a, const BlockToeplitz& b, const char* what) {
    if (a.n() != b.n() || a.d() != b.d()) throw std::invalid_argument(what);
}
} // namespace

WingSet wings(const BlockToeplitz& t) {
    const std::size_t n = t.n(), d = t.d();
    const long ln = static_cast<long>(n);
    BlockColumn minus_col(n, d), plus_col(n, d);
    BlockRow plus_row(n, d), minus_row(n, d);
    for (long i = 1; i < ln; ++i) {
        minus_col.entry(static_cast<std::size_t>(i)) = t.symbol(-i);
        plus_col.entry(static_cast<std::size_t>(i)) = t.symbol(ln - i);
        plus_row.entry(static_cast<std::size_t>(i)) = t.symbol(i);
        minus_row.entry(static_cast<std::size_t>(i)) = t.symbol(i - ln);
    }
    return WingSet{std::move(minus_col), std::move(plus_col), std::move(plus_row),
                   std::move(minus_row)};
}

WingGap::WingGap(BlockColumn a_minus, BlockColumn a_plus, BlockRow b_plus, BlockRow b_minus)
    : a_minus_(std::move(a_minus)), a_plus_(std::move(a_plus)),
      b_plus_(std::move(b_plus)), b_minus_(std::move(b_minus)) {
    if (a_minus_.n() != a_plus_.n() || a_minus_.n() != b_plus_.n() ||
        a_minus_.n() != b_minus_.n() || a_minus_.d() != a_plus_.d() ||
        a_minus_.d() != b_plus_.d() || a_minus_.d() != b_minus_.d()) {
        throw std::invalid_argument("WingGap: factor shape mismatch");
    }
    if (max_abs(a_minus_.entry(0)) != 0.0 || max_abs(a_plus_.entry(0)) != 0.0 ||
        max_abs(b_plus_.entry(0)) != 0.0 || max_abs(b_minus_.entry(0)) != 0.0) {
        throw std::invalid_argument("WingGap: zeroth wing component must be zero");
    }
}

Block WingGap::entry(std::size_t i, std::size_t j) const {
    if (i == 0 || j == 0) return Block(d());
    return block_mul(a_minus_.entry(i), b_plus_.entry(j)) -
           block_mul(a_plus_.entry(i), b_minus_.entry(j));
}

BlockGrid WingGap::materialize() const {
    BlockGrid g(n(), d());
    for (std::size_t i = 1; i < n(); ++i)
        for (std::size_t j = 1; j < n(); ++j) g.block(i, j) = entry(i, j);
    return g;
}

double WingGap::zero_residual() const {
    double worst = 0.0;
    for (std::size_t i = 1; i < n(); ++i)
        for (std::size_t j = 1; j < n(); ++j) worst = std::max(worst, max_abs(entry(i, j)));
    return worst / scale_floor(worst);
}

double WingGap::diff_residual(const WingGap& other) const {
    if (n() != other.n() || d() != other.d()) {
        throw std::invalid_argument("WingGap: shape mismatch");
    }
    double worst = 0.0;
    double scale = 0.0;
    for (std::size_t i = 1; i < n(); ++i) {
        for (std::size_t j = 1; j < n(); ++j) {
            const Block lhs = entry(i, j);
            const Block rhs = other.entry(i, j);
            scale = std::max({scale, max_abs(lhs), max_abs(rhs)});
            worst = std::max(worst, max_abs_diff(lhs, rhs));
        }
    }
    return worst / scale_floor(scale);
}

WingGap wing_gap(const BlockToeplitz& a, const BlockToeplitz& b) {
    check_pair(a, b, "wing_gap: shape mismatch");
    WingSet wa = wings(a);
    WingSet wb = wings(b);
    return WingGap(std::move(wa.minus_col), std::move(wa.plus_col),
                   std::move(wb.plus_row), std::move(wb.minus_row));
}

BlockGrid ProductDisplacement::materialize() const {
    BlockGrid g = gap.materialize();
    for (std::size_t i = 0; i < y.n(); ++i) g.block(i, 0) = y.entry(i);
    for (std::size_t j = 1; j < y.n(); ++j) g.block(0, j) = adjoint(yprime.entry(j));
    return g;
}

ProductDisplacement product_displacement(const BlockToeplitz& a, const BlockToeplitz& b) {
    check_pair(a, b, "product_displacement: shape mismatch");
    const std::size_t n = a.n(), d = a.d();
    const long ln = static_cast<long>(n);

    // First block column and row of AB straight from the symbols:
    // (AB)(i,0) = sum_k A_{k-i} B_{-k},  (AB)(0,j) = sum_k A_k B_{j-k}.
    BlockColumn y(n, d), yprime(n, d);
    for (long i = 0; i < ln; ++i) {
        Block acc(d);
        for (long k = 0; k < ln; ++k) acc = acc + block_mul(a.symbol(k - i), b.symbol(-k));
        y.entry(static_cast<std::size_t>(i)) = acc;
    }
    for (long j = 1; j < ln; ++j) {
        Block acc(d);
        for (long k = 0; k < ln; ++k) acc = acc + block_mul(a.symbol(k), b.symbol(j - k));
        yprime.entry(static_cast<std::size_t>(j)) = adjoint(acc);
    }
    return ProductDisplacement{std::move(y), std::move(yprime), wing_gap(a, b)};
}

CheckResult product_toeplitz_check(const BlockToeplitz& a, const BlockToeplitz& b,
                                   Tolerance tol) {
    check_pair(a, b, "product_is_toeplitz: shape mismatch");
    const double residual = wing_gap(a, b).zero_residual();
    return CheckResult{residual <= tol.eps, residual};
}

bool product_is_toeplitz(const BlockToeplitz& a, const BlockToeplitz& b, Tolerance tol) {
    return product_toeplitz_check(a, b, tol).verdict;
}

CheckResult difference_toeplitz_check(const BlockToeplitz& a, const BlockToeplitz& b,
                                      const BlockToeplitz& c, const BlockToeplitz& d,
                                      Tolerance tol) {
    check_pair(a, b, "difference_is_toeplitz: shape mismatch");
    check_pair(c, d, "difference_is_toeplitz: shape mismatch");
    check_pair(a, c, "difference_is_toeplitz: shape mismatch");
    const double residual = wing_gap(a, b).diff_residual(wing_gap(c, d));
    return CheckResult{residual <= tol.eps, residual};
}

bool difference_is_toeplitz(const BlockToeplitz& a, const BlockToeplitz& b,
                            const BlockToeplitz& c, const BlockToeplitz& d, Tolerance tol) {
    return difference_toeplitz_check(a, b, c, d, tol).verdict;
}

CheckResult products_equal_check(const BlockToeplitz& a, const BlockToeplitz& b,
                                 const BlockToeplitz& c, const BlockToeplitz& d,
                                 Tolerance tol) {
    const CheckResult diff = difference_toeplitz_check(a, b, c, d, tol);

    const ProductDisplacement pab = product_displacement(a, b);
    const ProductDisplacement pcd = product_displacement(c, d);
    double worst = 0.0;
    double scale = 0.0;
    for (std::size_t i = 0; i < pab.y.n(); ++i) {
        scale = std::max({scale, max_abs(pab.y.entry(i)), max_abs(pcd.y.entry(i)),
                          max_abs(pab.yprime.entry(i)), max_abs(pcd.yprime.entry(i))});
        worst = std::max({worst, max_abs_diff(pab.y.entry(i), pcd.y.entry(i)),
                          max_abs_diff(pab.yprime.entry(i), pcd.yprime.entry(i))});
    }
    const double residual = std::max(diff.residual, worst / scale_floor(scale));
    return CheckResult{residual <= tol.eps, residual};
}

bool products_equal(const BlockToeplitz& a, const BlockToeplitz& b, const BlockToeplitz& c,
                    const BlockToeplitz& d, Tolerance tol) {
    return products_equal_check(a, b, c, d, tol).verdict;
}

} // namespace bt
