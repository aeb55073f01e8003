#include "bt/generators.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bt {

double uniform_unit(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform_symmetric(Rng& rng) { return 2.0 * uniform_unit(rng) - 1.0; }

Complex random_complex(Rng& rng) {
    const double re = uniform_symmetric(rng);
    const double im = uniform_symmetric(rng);
    return Complex{re, im};
}

Complex random_unimodular(Rng& rng) {
    const double angle = 2.0 * std::numbers::pi * uniform_unit(rng);
    return Complex{std::cos(angle), std::sin(angle)};
}

Block random_block(Rng& rng, std::size_t d) {
    Block b(d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) b(r, c) = random_complex(rng);
    return b;
}

BlockGrid random_grid(Rng& rng, std::size_t n, std::size_t d) {
    BlockGrid g(n, d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g.block(i, j) = random_block(rng, d);
    return g;
}

BlockToeplitz random_toeplitz(Rng& rng, std::size_t n, std::size_t d) {
    BlockToeplitz t(n, d);
    const long limit = static_cast<long>(n) - 1;
    for (long k = -limit; k <= limit; ++k) t.set_symbol(k, random_block(rng, d));
    return t;
}

BlockToeplitz random_lower_triangular(Rng& rng, std::size_t n, std::size_t d) {
    BlockToeplitz t(n, d);
    for (long k = -(static_cast<long>(n) - 1); k <= 0; ++k) {
        t.set_symbol(k, random_block(rng, d));
    }
    return t;
}

BlockToeplitz random_circulant(Rng& rng, std::size_t n, std::size_t d) {
    BlockToeplitz t(n, d);
    const long ln = static_cast<long>(n);
    for (long k = 0; k < ln; ++k) t.set_symbol(k, random_block(rng, d));
    for (long k = 1; k < ln; ++k) t.set_symbol(k - ln, t.symbol(k));
    return t;
}

std::array<BlockToeplitz, 4> gap_matched_quadruple(Rng& rng, std::size_t n, std::size_t d) {
    BlockToeplitz a = random_toeplitz(rng, n, d);
    BlockToeplitz b = random_toeplitz(rng, n, d);
    BlockToeplitz c = a;
    BlockToeplitz dd = b;
    c.set_symbol(0, random_block(rng, d));
    dd.set_symbol(0, random_block(rng, d));
    return {std::move(a), std::move(b), std::move(c), std::move(dd)};
}

DiagonalBlockToeplitz normal_slices_with(Rng& rng, std::size_t n, std::size_t d,
                                         const std::vector<Complex>& lambdas,
                                         const std::vector<NormalBranch>& branches) {
    if (lambdas.size() != d || branches.size() != d) {
        throw std::invalid_argument("normal_slices_with: expected d lambdas and branches");
    }
    const long ln = static_cast<long>(n);
    DiagonalBlockToeplitz t(n, d);
    std::vector<ScalarToeplitz> slices;
    slices.reserve(d);
    for (std::size_t k = 0; k < d; ++k) {
        ScalarToeplitz s(n);
        s.set_symbol(0, random_complex(rng));
        for (long j = 1; j < ln; ++j) s.set_symbol(j, random_complex(rng));
        for (long j = 1; j < ln; ++j) {
            const Complex ref = branches[k] == NormalBranch::Circulant
                                    ? s.symbol(ln - j)
                                    : std::conj(s.symbol(j));
            s.set_symbol(-j, lambdas[k] * ref);
        }
        slices.push_back(std::move(s));
    }
    return unshuffle(slices);
}

DiagonalBlockToeplitz random_normal_slices(Rng& rng, std::size_t n, std::size_t d) {
    std::vector<Complex> lambdas(d);
    std::vector<NormalBranch> branches(d);
    for (std::size_t k = 0; k < d; ++k) {
        lambdas[k] = random_unimodular(rng);
        branches[k] = (rng() & 1u) ? NormalBranch::Circulant : NormalBranch::Conjugate;
    }
    return normal_slices_with(rng, n, d, lambdas, branches);
}

DiagonalBlockToeplitz random_non_normal(Rng& rng, std::size_t n, std::size_t d) {
    if (n < 2) throw std::invalid_argument("random_non_normal: requires n >= 2");
    DiagonalBlockToeplitz t = random_normal_slices(rng, n, d);
    // Push |a_{-1}| of slice 0 far above every other symbol magnitude; both
    // branch identities force |a_{-1}| to match a unit-scale reference, so
    // the slice cannot be normal.
    std::vector<Complex> bumped = t.symbol(-1);
    bumped[0] += Complex{3.0, 0.0} * random_unimodular(rng);
    t.set_symbol(-1, std::move(bumped));
    return t;
}

std::vector<MatrixFile> generate(std::string_view kind, std::size_t n, std::size_t d,
                                 std::uint64_t seed) {
    Rng rng(seed);
    if (kind == "random-toeplitz") {
        return {MatrixFile(random_toeplitz(rng, n, d))};
    }
    if (kind == "lower-triangular") {
        return {MatrixFile(random_lower_triangular(rng, n, d))};
    }
    if (kind == "circulant") {
        return {MatrixFile(random_circulant(rng, n, d))};
    }
    if (kind == "gap-matched-quadruple") {
        auto [a, b, c, dd] = gap_matched_quadruple(rng, n, d);
        return {MatrixFile(std::move(a)), MatrixFile(std::move(b)), MatrixFile(std::move(c)),
                MatrixFile(std::move(dd))};
    }
    if (kind == "normal-slices") {
        return {MatrixFile(random_normal_slices(rng, n, d))};
    }
    if (kind == "non-normal") {
        return {MatrixFile(random_non_normal(rng, n, d))};
    }
    throw std::invalid_argument("generate: unknown kind \"" + std::string(kind) + "\"");
}

} // namespace bt
