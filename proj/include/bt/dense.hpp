#pragma once

#include <cstddef>
#include <vector>

#include "bt/grid.hpp"

namespace bt {

/// Plain rows x cols complex matrix, row major. The flattened view of a
/// block grid, and the working type of the dense oracles.
class DenseMatrix {
public:
    DenseMatrix(std::size_t rows, std::size_t cols);
    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Complex& operator()(std::size_t r, std::size_t c) const {
        return e_[r * cols_ + c];
    }
    Complex& operator()(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }

    bool operator==(const DenseMatrix& other) const = default;

private:
    std::size_t rows_, cols_;
    std::vector<Complex> e_;
};

/// Block grid -> nd x nd dense matrix; entry (i*d+p, j*d+q) = block(i,j)(p,q).
DenseMatrix flatten(const BlockGrid& g);

/// Inverse of flatten. Requires m to be nd x nd.
BlockGrid unflatten(const DenseMatrix& m, std::size_t n, std::size_t d);

double max_abs(const DenseMatrix& m);
double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

} // namespace bt
