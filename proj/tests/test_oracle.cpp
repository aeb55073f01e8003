#include <doctest.h>

#include "bt/displacement.hpp"
#include "bt/generators.hpp"
#include "bt/oracle.hpp"
#include "bt/product_criteria.hpp"

using namespace bt;

TEST_CASE("dense shift matrix layout") {
    const DenseMatrix s1 = oracle::dense_shift_matrix(1, 3);
    CHECK(max_abs(s1) == 0.0);

    const DenseMatrix s2 = oracle::dense_shift_matrix(2, 1);
    CHECK(s2(0, 0) == Complex{0.0, 0.0});
    CHECK(s2(0, 1) == Complex{0.0, 0.0});
    CHECK(s2(1, 0) == Complex{1.0, 0.0});
    CHECK(s2(1, 1) == Complex{0.0, 0.0});

    // n=3, d=2: identity blocks on the first block subdiagonal only
    const DenseMatrix s3 = oracle::dense_shift_matrix(3, 2);
    const BlockGrid g = unflatten(s3, 3, 2);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            if (i == j + 1) {
                CHECK(g.block(i, j) == Block::identity(2));
            } else {
                CHECK(max_abs(g.block(i, j)) == 0.0);
            }
        }

    // nilpotent of order n: S^n = 0
    const DenseMatrix s3sq = oracle::dense_mul(s3, s3);
    CHECK(max_abs(oracle::dense_mul(s3sq, s3)) == 0.0);
}

TEST_CASE("diagonal scan verdicts") {
    Rng rng(199);
    CHECK(oracle::diagonal_scan_is_toeplitz(expand(random_toeplitz(rng, 5, 2))));

    BlockGrid diag01(2, 1);
    diag01.block(1, 1) = Block(1, {Complex{1.0, 0.0}});
    CHECK(!oracle::diagonal_scan_is_toeplitz(diag01));
}

TEST_CASE("dense displacement conjugation equals the index shift") {
    Rng rng(211);
    for (int rep = 0; rep < 20; ++rep) {
        const std::size_t n = 1 + rng() % 6;
        const std::size_t d = 1 + rng() % 4;
        const BlockGrid g = random_grid(rng, n, d);
        const DenseMatrix via_s = oracle::dense_displacement(flatten(g), n, d);
        const DenseMatrix via_index = flatten(displacement(g));
        CHECK(max_abs_diff(via_s, via_index) / scale_floor(max_abs(via_index)) <= 1e-13);
    }
}

TEST_CASE("dense product check hand cases") {
    Rng rng(223);
    const BlockToeplitz a = random_toeplitz(rng, 3, 2);
    const BlockToeplitz b = random_toeplitz(rng, 3, 2);
    CHECK(oracle::dense_product_check(a, b, a, b, oracle::ProductCheckMode::Equal));

    BlockToeplitz lower(2, 1), upper(2, 1), zero(2, 1);
    lower.set_symbol(-1, Block(1, {Complex{1.0, 0.0}}));
    upper.set_symbol(1, Block(1, {Complex{1.0, 0.0}}));
    CHECK(!oracle::dense_product_check(lower, upper, zero, zero,
                                       oracle::ProductCheckMode::Toeplitz));
    CHECK_THROWS_AS(oracle::dense_product_check(lower, upper, BlockToeplitz(3, 1), zero,
                                                oracle::ProductCheckMode::Equal),
                    std::invalid_argument);
}

TEST_CASE("structured and dense product verdicts agree on a mixed sweep") {
    Rng rng(227);
    const Tolerance tol{};
    int toeplitz_true = 0, equal_true = 0;
    for (int rep = 0; rep < 120; ++rep) {
        const std::size_t n = 1 + rng() % 6;
        const std::size_t d = 1 + rng() % 3;
        BlockToeplitz a(n, d), b(n, d), c(n, d), e(n, d);
        switch (rep % 4) {
        case 0: {
            const auto quad = gap_matched_quadruple(rng, n, d);
            a = quad[0]; b = quad[1]; c = quad[2]; e = quad[3];
            break;
        }
        case 1:
            a = random_circulant(rng, n, d);
            b = random_circulant(rng, n, d);
            c = random_circulant(rng, n, d);
            e = random_circulant(rng, n, d);
            break;
        case 2:
            a = random_lower_triangular(rng, n, d);
            b = random_lower_triangular(rng, n, d);
            c = random_lower_triangular(rng, n, d);
            e = random_lower_triangular(rng, n, d);
            break;
        default:
            a = random_toeplitz(rng, n, d);
            b = random_toeplitz(rng, n, d);
            c = random_toeplitz(rng, n, d);
            e = random_toeplitz(rng, n, d);
            break;
        }
        const bool fast_diff = difference_is_toeplitz(a, b, c, e, tol);
        const bool slow_diff = oracle::dense_product_check(
            a, b, c, e, oracle::ProductCheckMode::Toeplitz, tol);
        CHECK(fast_diff == slow_diff);
        toeplitz_true += fast_diff ? 1 : 0;

        const bool fast_eq = products_equal(a, b, c, e, tol);
        const bool slow_eq =
            oracle::dense_product_check(a, b, c, e, oracle::ProductCheckMode::Equal, tol);
        CHECK(fast_eq == slow_eq);
        equal_true += fast_eq ? 1 : 0;
    }
    CHECK(toeplitz_true > 30);
    CHECK(equal_true < 120);
}

TEST_CASE("shuffle conjugate residual off the block diagonal is exactly zero") {
    Rng rng(229);
    DiagonalBlockToeplitz t(3, 2);
    for (long k = -2; k <= 2; ++k) {
        t.set_symbol(k, {random_complex(rng), random_complex(rng)});
    }
    const DenseMatrix conjugated = oracle::dense_shuffle_conjugate(t);
    const std::size_t n = 3;
    for (std::size_t r = 0; r < 6; ++r)
        for (std::size_t c = 0; c < 6; ++c)
            if (r / n != c / n) CHECK(conjugated(r, c) == Complex{0.0, 0.0});

    // d = 1 leaves the matrix unchanged
    DiagonalBlockToeplitz t1(2, 1);
    t1.set_symbol(-1, {random_complex(rng)});
    t1.set_symbol(0, {random_complex(rng)});
    t1.set_symbol(1, {random_complex(rng)});
    const DenseMatrix same = oracle::dense_shuffle_conjugate(t1);
    CHECK(max_abs_diff(same, flatten(expand(t1.to_block_toeplitz()))) == 0.0);
}
