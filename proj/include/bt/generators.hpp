#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "bt/matrix_file.hpp"
#include "bt/normality.hpp"
#include "bt/toeplitz.hpp"

namespace bt {

/// All randomness flows through mt19937_64 raw output; doubles are built
/// from the top 53 bits, so generated instances are identical across
/// platforms for a fixed seed.
using Rng = std::mt19937_64;

double uniform_unit(Rng& rng);      // [0, 1)
double uniform_symmetric(Rng& rng); // [-1, 1)
Complex random_complex(Rng& rng);   // both parts in [-1, 1)
Complex random_unimodular(Rng& rng);

Block random_block(Rng& rng, std::size_t d);
BlockGrid random_grid(Rng& rng, std::size_t n, std::size_t d);
BlockToeplitz random_toeplitz(Rng& rng, std::size_t n, std::size_t d);

/// All positive-index symbols zero.
BlockToeplitz random_lower_triangular(Rng& rng, std::size_t n, std::size_t d);

/// Block circulant: T_{-k} = T_{n-k} for k = 1..n-1.
BlockToeplitz random_circulant(Rng& rng, std::size_t n, std::size_t d);

/// (A, B, C, D) with wings(C) = wings(A), wings(D) = wings(B) and fresh
/// main diagonals, so AB - CD is block Toeplitz by construction.
std::array<BlockToeplitz, 4> gap_matched_quadruple(Rng& rng, std::size_t n, std::size_t d);

enum class NormalBranch { Circulant, Conjugate };

/// Slice k is built normal: random positive wing, negative wing derived as
/// a_{-j} = lambda_k a_{n-j} (circulant branch) or lambda_k conj(a_j)
/// (conjugate branch), random diagonal.
DiagonalBlockToeplitz normal_slices_with(Rng& rng, std::size_t n, std::size_t d,
                                         const std::vector<Complex>& lambdas,
                                         const std::vector<NormalBranch>& branches);

/// Random unimodular lambda and branch per slice.
DiagonalBlockToeplitz random_normal_slices(Rng& rng, std::size_t n, std::size_t d);

/// Normal construction with slice 0 knocked decisively out of both
/// branches; requires n >= 2.
DiagonalBlockToeplitz random_non_normal(Rng& rng, std::size_t n, std::size_t d);

/// File-producing front end for the CLI. Kinds: random-toeplitz,
/// lower-triangular, circulant, gap-matched-quadruple (four files, order
/// A B C D), normal-slices, non-normal. Unknown kind throws
/// std::invalid_argument. Deterministic for fixed arguments.
std::vector<MatrixFile> generate(std::string_view kind, std::size_t n, std::size_t d,
                                 std::uint64_t seed);

} // namespace bt
