#include "bt/block.hpp"

#include <stdexcept>

namespace bt {

namespace {
thread_local std::uint64_t g_block_mul_count = 0;

void check_dim(std::size_t dim) {
    if (dim < 1) throw std::invalid_argument("Block: dim must be >= 1");
}
} // namespace

std::uint64_t block_mul_count() { return g_block_mul_count; }
void reset_block_mul_count() { g_block_mul_count = 0; }

Block::Block(std::size_t dim) : dim_(dim), e_(dim * dim, Complex{0.0, 0.0}) {
    check_dim(dim);
}

Block::Block(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), e_(std::move(entries)) {
    check_dim(dim);
    if (e_.size() != dim * dim) {
        throw std::invalid_argument("Block: entry count does not match dim*dim");
    }
    for (const Complex& z : e_) {
        if (!is_finite(z)) throw std::invalid_argument("Block: non-finite entry");
    }
}

Block Block::identity(std::size_t dim) {
    Block b(dim);
    for (std::size_t i = 0; i < dim; ++i) b(i, i) = Complex{1.0, 0.0};
    return b;
}

Block operator+(const Block& a, const Block& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("Block +: dimension mismatch");
    Block r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) r(i, j) = a(i, j) + b(i, j);
    return r;
}

Block operator-(const Block& a, const Block& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("Block -: dimension mismatch");
    Block r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) r(i, j) = a(i, j) - b(i, j);
    return r;
}

Block block_mul(const Block& a, const Block& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("block_mul: dimension mismatch");
    ++g_block_mul_count;
    const std::size_t d = a.dim();
    Block r(d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t k = 0; k < d; ++k) {
            const Complex aik = a(i, k);
            for (std::size_t j = 0; j < d; ++j) r(i, j) += aik * b(k, j);
        }
    }
    return r;
}

Block adjoint(const Block& b) {
    Block r(b.dim());
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j) r(i, j) = std::conj(b(j, i));
    return r;
}

double max_abs(const Block& b) {
    double m = 0.0;
    for (const Complex& z : b.entries()) m = std::max(m, std::abs(z));
    return m;
}

double max_abs_diff(const Block& a, const Block& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("max_abs_diff: dimension mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

} // namespace bt
