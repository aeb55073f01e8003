#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bt/types.hpp"

namespace bt {

/// Dense d x d complex matrix, row major. This is the entry type of every
/// block structure in the library. Values are immutable once handed to a
/// container; all operations below are pure.
class Block {
public:
    /// Zero block of the given dimension.
    explicit Block(std::size_t dim);

    /// Row-major entries; rejects non-finite input.
    Block(std::size_t dim, std::vector<Complex> entries);

    static Block identity(std::size_t dim);

    std::size_t dim() const { return dim_; }

    const Complex& operator()(std::size_t r, std::size_t c) const {
        return e_[r * dim_ + c];
    }
    Complex& operator()(std::size_t r, std::size_t c) { return e_[r * dim_ + c]; }

    const std::vector<Complex>& entries() const { return e_; }

    bool operator==(const Block& other) const = default;

private:
    std::size_t dim_;
    std::vector<Complex> e_;
};

Block operator+(const Block& a, const Block& b);
Block operator-(const Block& a, const Block& b);

/// Standard complex matrix product. Dimension mismatch throws.
Block block_mul(const Block& a, const Block& b);
inline Block operator*(const Block& a, const Block& b) { return block_mul(a, b); }

/// Conjugate transpose.
Block adjoint(const Block& b);

double max_abs(const Block& b);
double max_abs_diff(const Block& a, const Block& b);

/// Number of block products executed on this thread since the last reset.
/// The structured criteria promise Theta(n^2) block products; tests and the
/// bench harness read this tally to hold them to it.
std::uint64_t block_mul_count();
void reset_block_mul_count();

} // namespace bt
