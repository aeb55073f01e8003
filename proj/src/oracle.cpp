#include "bt/oracle.hpp"

#include <stdexcept>

namespace bt::oracle {

DenseMatrix dense_mul(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("dense_mul: shape mismatch");
    DenseMatrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Complex acc{0.0, 0.0};
            for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
            r(i, j) = acc;
        }
    return r;
}

DenseMatrix dense_sub(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("dense_sub: shape mismatch");
    }
    DenseMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) - b(i, j);
    return r;
}

DenseMatrix dense_adjoint(const DenseMatrix& m) {
    DenseMatrix r(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(j, i) = std::conj(m(i, j));
    return r;
}

DenseMatrix dense_shift_matrix(std::size_t n, std::size_t d) {
    if (n < 1 || d < 1) throw std::invalid_argument("dense_shift_matrix: n, d >= 1");
    DenseMatrix s(n * d, n * d);
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t p = 0; p < d; ++p) s(i * d + p, (i - 1) * d + p) = Complex{1.0, 0.0};
    return s;
}

DenseMatrix dense_displacement(const DenseMatrix& m, std::size_t n, std::size_t d) {
    const DenseMatrix s = dense_shift_matrix(n, d);
    return dense_sub(m, dense_mul(dense_mul(s, m), dense_adjoint(s)));
}

double diagonal_scan_residual(const BlockGrid& g) {
    const std::size_t n = g.n();
    double worst = 0.0;
    for (long k = -(static_cast<long>(n) - 1); k <= static_cast<long>(n) - 1; ++k) {
        // first block of the diagonal j - i = k is the representative
        const std::size_t i0 = k >= 0 ? 0 : static_cast<std::size_t>(-k);
        const std::size_t j0 = k >= 0 ? static_cast<std::size_t>(k) : 0;
        for (std::size_t step = 1; i0 + step < n && j0 + step < n; ++step) {
            worst = std::max(worst,
                             max_abs_diff(g.block(i0 + step, j0 + step), g.block(i0, j0)));
        }
    }
    return worst / scale_floor(max_abs(g));
}

bool diagonal_scan_is_toeplitz(const BlockGrid& g, Tolerance tol) {
    return diagonal_scan_residual(g) <= tol.eps;
}

bool dense_product_check(const BlockToeplitz& a, const BlockToeplitz& b,
                         const BlockToeplitz& c, const BlockToeplitz& d,
                         ProductCheckMode mode, Tolerance tol) {
    if (a.n() != b.n() || a.n() != c.n() || a.n() != d.n() || a.d() != b.d() ||
        a.d() != c.d() || a.d() != d.d()) {
        throw std::invalid_argument("dense_product_check: shape mismatch");
    }
    const DenseMatrix ab = dense_mul(flatten(expand(a)), flatten(expand(b)));
    const DenseMatrix cd = dense_mul(flatten(expand(c)), flatten(expand(d)));
    const DenseMatrix diff = dense_sub(ab, cd);
    if (mode == ProductCheckMode::Equal) {
        const double scale = scale_floor(std::max(max_abs(ab), max_abs(cd)));
        return max_abs(diff) <= tol.eps * scale;
    }
    return diagonal_scan_is_toeplitz(unflatten(diff, a.n(), a.d()), tol);
}

DenseMatrix dense_shuffle_conjugate(const DiagonalBlockToeplitz& t) {
    const std::size_t n = t.n(), d = t.d(), N = n * d;
    // P maps flat index i*d + k to k*n + i
    DenseMatrix p(N, N);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < d; ++k) p(k * n + i, i * d + k) = Complex{1.0, 0.0};
    const DenseMatrix m = flatten(expand(t.to_block_toeplitz()));
    // P^T = P* here since P is a real permutation
    return dense_mul(dense_mul(p, m), dense_adjoint(p));
}

} // namespace bt::oracle
