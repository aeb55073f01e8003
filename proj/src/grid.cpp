#include "bt/grid.hpp"

#include <stdexcept>

namespace bt {

namespace {
void check_shape(std::size_t n, std::size_t d) {
    if (n < 1) throw std::invalid_argument("BlockGrid: n must be >= 1");
    if (d < 1) throw std::invalid_argument("BlockGrid: d must be >= 1");
}

void check_same_shape(const BlockGrid& a, const BlockGrid& b, const char* what) {
    if (a.n() != b.n() || a.d() != b.d()) throw std::invalid_argument(what);
}
} // namespace

BlockGrid::BlockGrid(std::size_t n, std::size_t d) : n_(n), d_(d) {
    check_shape(n, d);
    blocks_.assign(n * n, Block(d));
}

BlockGrid::BlockGrid(std::size_t n, std::size_t d, std::vector<Block> blocks)
    : n_(n), d_(d), blocks_(std::move(blocks)) {
    check_shape(n, d);
    if (blocks_.size() != n * n) {
        throw std::invalid_argument("BlockGrid: expected n*n blocks");
    }
    for (const Block& b : blocks_) {
        if (b.dim() != d) throw std::invalid_argument("BlockGrid: block dim mismatch");
    }
}

BlockGrid BlockGrid::block_identity(std::size_t n, std::size_t d) {
    BlockGrid g(n, d);
    for (std::size_t i = 0; i < n; ++i) g.block(i, i) = Block::identity(d);
    return g;
}

BlockColumn::BlockColumn(std::size_t n, std::size_t d) : n_(n), d_(d) {
    check_shape(n, d);
    e_.assign(n, Block(d));
}

BlockColumn::BlockColumn(std::size_t n, std::size_t d, std::vector<Block> entries)
    : n_(n), d_(d), e_(std::move(entries)) {
    check_shape(n, d);
    if (e_.size() != n) throw std::invalid_argument("BlockColumn: expected n entries");
    for (const Block& b : e_) {
        if (b.dim() != d) throw std::invalid_argument("BlockColumn: block dim mismatch");
    }
}

BlockRow::BlockRow(std::size_t n, std::size_t d) : n_(n), d_(d) {
    check_shape(n, d);
    e_.assign(n, Block(d));
}

BlockRow::BlockRow(std::size_t n, std::size_t d, std::vector<Block> entries)
    : n_(n), d_(d), e_(std::move(entries)) {
    check_shape(n, d);
    if (e_.size() != n) throw std::invalid_argument("BlockRow: expected n entries");
    for (const Block& b : e_) {
        if (b.dim() != d) throw std::invalid_argument("BlockRow: block dim mismatch");
    }
}

BlockGrid grid_mul(const BlockGrid& g1, const BlockGrid& g2) {
    check_same_shape(g1, g2, "grid_mul: shape mismatch");
    const std::size_t n = g1.n();
    BlockGrid r(n, g1.d());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Block acc(g1.d());
            for (std::size_t k = 0; k < n; ++k) {
                acc = acc + block_mul(g1.block(i, k), g2.block(k, j));
            }
            r.block(i, j) = acc;
        }
    }
    return r;
}

BlockGrid adjoint(const BlockGrid& g) {
    BlockGrid r(g.n(), g.d());
    for (std::size_t i = 0; i < g.n(); ++i)
        for (std::size_t j = 0; j < g.n(); ++j) r.block(i, j) = adjoint(g.block(j, i));
    return r;
}

BlockGrid operator+(const BlockGrid& a, const BlockGrid& b) {
    check_same_shape(a, b, "BlockGrid +: shape mismatch");
    BlockGrid r(a.n(), a.d());
    for (std::size_t i = 0; i < a.n(); ++i)
        for (std::size_t j = 0; j < a.n(); ++j) r.block(i, j) = a.block(i, j) + b.block(i, j);
    return r;
}

BlockGrid operator-(const BlockGrid& a, const BlockGrid& b) {
    check_same_shape(a, b, "BlockGrid -: shape mismatch");
    BlockGrid r(a.n(), a.d());
    for (std::size_t i = 0; i < a.n(); ++i)
        for (std::size_t j = 0; j < a.n(); ++j) r.block(i, j) = a.block(i, j) - b.block(i, j);
    return r;
}

double max_abs(const BlockGrid& g) {
    double m = 0.0;
    for (std::size_t i = 0; i < g.n(); ++i)
        for (std::size_t j = 0; j < g.n(); ++j) m = std::max(m, max_abs(g.block(i, j)));
    return m;
}

double max_abs_diff(const BlockGrid& a, const BlockGrid& b) {
    check_same_shape(a, b, "max_abs_diff: shape mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.n(); ++i)
        for (std::size_t j = 0; j < a.n(); ++j)
            m = std::max(m, max_abs_diff(a.block(i, j), b.block(i, j)));
    return m;
}

} // namespace bt
