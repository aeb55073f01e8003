#pragma once

#include <cstddef>
#include <vector>

#include "bt/grid.hpp"

namespace bt {

/// Block Toeplitz matrix stored by its 2n-1 symbols T_{-(n-1)} ... T_{n-1}.
/// The expanded grid carries symbol T_{j-i} at block position (i, j), so
/// superdiagonals hold the positive indices:
///
///   ( T_0    T_1   ...  T_{n-1} )
///   ( T_{-1} T_0   ...          )
///   ( ...                       )
///   ( T_{1-n}      ...  T_0     )
class BlockToeplitz {
public:
    /// All symbols zero.
    BlockToeplitz(std::size_t n, std::size_t d);

    /// Symbols in index order k = -(n-1), ..., 0, ..., n-1.
    BlockToeplitz(std::size_t n, std::size_t d, std::vector<Block> symbols);

    std::size_t n() const { return n_; }
    std::size_t d() const { return d_; }

    /// Symbol T_k, k in [-(n-1), n-1].
    const Block& symbol(long k) const;
    void set_symbol(long k, Block b);

    bool operator==(const BlockToeplitz& other) const = default;

private:
    std::size_t n_, d_;
    std::vector<Block> symbols_; // index k + (n-1)
};

/// Expanded n x n grid with block (i,j) = T_{j-i}.
BlockGrid expand(const BlockToeplitz& t);

} // namespace bt
