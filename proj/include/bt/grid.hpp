#pragma once

#include <cstddef>
#include <vector>

#include "bt/block.hpp"

namespace bt {

/// General n x n grid of d x d blocks, row major by block index (i, j).
class BlockGrid {
public:
    BlockGrid(std::size_t n, std::size_t d);
    BlockGrid(std::size_t n, std::size_t d, std::vector<Block> blocks);

    static BlockGrid block_identity(std::size_t n, std::size_t d);

    std::size_t n() const { return n_; }
    std::size_t d() const { return d_; }

    const Block& block(std::size_t i, std::size_t j) const { return blocks_[i * n_ + j]; }
    Block& block(std::size_t i, std::size_t j) { return blocks_[i * n_ + j]; }

    bool operator==(const BlockGrid& other) const = default;

private:
    std::size_t n_, d_;
    std::vector<Block> blocks_;
};

/// n x 1 block vector.
class BlockColumn {
public:
    BlockColumn(std::size_t n, std::size_t d);
    BlockColumn(std::size_t n, std::size_t d, std::vector<Block> entries);

    std::size_t n() const { return n_; }
    std::size_t d() const { return d_; }
    const Block& entry(std::size_t i) const { return e_[i]; }
    Block& entry(std::size_t i) { return e_[i]; }

    bool operator==(const BlockColumn& other) const = default;

private:
    std::size_t n_, d_;
    std::vector<Block> e_;
};

/// 1 x n block vector.
class BlockRow {
public:
    BlockRow(std::size_t n, std::size_t d);
    BlockRow(std::size_t n, std::size_t d, std::vector<Block> entries);

    std::size_t n() const { return n_; }
    std::size_t d() const { return d_; }
    const Block& entry(std::size_t j) const { return e_[j]; }
    Block& entry(std::size_t j) { return e_[j]; }

    bool operator==(const BlockRow& other) const = default;

private:
    std::size_t n_, d_;
    std::vector<Block> e_;
};

/// Block matrix product; (i,j) block = sum_k g1(i,k) g2(k,j).
BlockGrid grid_mul(const BlockGrid& g1, const BlockGrid& g2);

/// Block (i,j) of the result is the conjugate transpose of block (j,i).
BlockGrid adjoint(const BlockGrid& g);

BlockGrid operator+(const BlockGrid& a, const BlockGrid& b);
BlockGrid operator-(const BlockGrid& a, const BlockGrid& b);

double max_abs(const BlockGrid& g);
double max_abs_diff(const BlockGrid& a, const BlockGrid& b);

} // namespace bt
