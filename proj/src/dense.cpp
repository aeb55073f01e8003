#include "bt/dense.hpp"

#include <stdexcept>

namespace bt {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), e_(rows * cols, Complex{0.0, 0.0}) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("DenseMatrix: empty shape");
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("DenseMatrix: empty shape");
    if (e_.size() != rows * cols) {
        throw std::invalid_argument("DenseMatrix: entry count does not match shape");
    }
    for (const Complex& z : e_) {
        if (!is_finite(z)) throw std::invalid_argument("DenseMatrix: non-finite entry");
    }
}

DenseMatrix flatten(const BlockGrid& g) {
    const std::size_t n = g.n(), d = g.d();
    DenseMatrix m(n * d, n * d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Block& b = g.block(i, j);
            for (std::size_t p = 0; p < d; ++p)
                for (std::size_t q = 0; q < d; ++q) m(i * d + p, j * d + q) = b(p, q);
        }
    return m;
}

BlockGrid unflatten(const DenseMatrix& m, std::size_t n, std::size_t d) {
    if (m.rows() != n * d || m.cols() != n * d) {
        throw std::invalid_argument("unflatten: matrix is not nd x nd");
    }
    BlockGrid g(n, d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Block b(d);
            for (std::size_t p = 0; p < d; ++p)
                for (std::size_t q = 0; q < d; ++q) b(p, q) = m(i * d + p, j * d + q);
            g.block(i, j) = b;
        }
    return g;
}

double max_abs(const DenseMatrix& m) {
    double r = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r = std::max(r, std::abs(m(i, j)));
    return r;
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("max_abs_diff: shape mismatch");
    }
    double r = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r = std::max(r, std::abs(a(i, j) - b(i, j)));
    return r;
}

} // namespace bt
