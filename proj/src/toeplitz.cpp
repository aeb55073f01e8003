#include "bt/toeplitz.hpp"

#include <stdexcept>

namespace bt {

BlockToeplitz::BlockToeplitz(std::size_t n, std::size_t d) : n_(n), d_(d) {
    if (n < 1 || d < 1) throw std::invalid_argument("BlockToeplitz: n, d must be >= 1");
    symbols_.assign(2 * n - 1, Block(d));
}

BlockToeplitz::BlockToeplitz(std::size_t n, std::size_t d, std::vector<Block> symbols)
    : n_(n), d_(d), symbols_(std::move(symbols)) {
    if (n < 1 || d < 1) throw std::invalid_argument("BlockToeplitz: n, d must be >= 1");
    if (symbols_.size() != 2 * n - 1) {
        throw std::invalid_argument("BlockToeplitz: expected 2n-1 symbols");
    }
    for (const Block& b : symbols_) {
        if (b.dim() != d) throw std::invalid_argument("BlockToeplitz: symbol dim mismatch");
    }
}

const Block& BlockToeplitz::symbol(long k) const {
    const long limit = static_cast<long>(n_) - 1;
    if (k < -limit || k > limit) throw std::out_of_range("BlockToeplitz: symbol index");
    return symbols_[static_cast<std::size_t>(k + limit)];
}

void BlockToeplitz::set_symbol(long k, Block b) {
    const long limit = static_cast<long>(n_) - 1;
    if (k < -limit || k > limit) throw std::out_of_range("BlockToeplitz: symbol index");
    if (b.dim() != d_) throw std::invalid_argument("BlockToeplitz: symbol dim mismatch");
    symbols_[static_cast<std::size_t>(k + limit)] = std::move(b);
}

BlockGrid expand(const BlockToeplitz& t) {
    const std::size_t n = t.n();
    BlockGrid g(n, t.d());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            g.block(i, j) = t.symbol(static_cast<long>(j) - static_cast<long>(i));
    return g;
}

} // namespace bt
