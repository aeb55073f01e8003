#include <doctest.h>

#include "bt/dense.hpp"
#include "bt/generators.hpp"
#include "bt/oracle.hpp"
#include "bt/toeplitz.hpp"

using namespace bt;

namespace {

Block make_block(std::size_t d, std::vector<Complex> entries) {
    return Block(d, std::move(entries));
}

// independent of block_mul: plain index-wise triple loop
Block triple_loop_product(const Block& a, const Block& b) {
    Block r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            Complex acc{0.0, 0.0};
            for (std::size_t k = 0; k < a.dim(); ++k) acc += a(i, k) * b(k, j);
            r(i, j) = acc;
        }
    return r;
}

} // namespace

TEST_CASE("block_mul identity and scalar cases") {
    Rng rng(7);
    const Block x = random_block(rng, 3);
    CHECK(max_abs_diff(block_mul(Block::identity(3), x), x) == 0.0);
    CHECK(max_abs_diff(block_mul(x, Block::identity(3)), x) == 0.0);

    const Block a = make_block(1, {Complex{2.0, 1.0}});
    const Block b = make_block(1, {Complex{3.0, 0.0}});
    const Block p = block_mul(a, b);
    CHECK(p(0, 0) == Complex{6.0, 3.0});
}

TEST_CASE("block_mul agrees with the triple-loop oracle") {
    Rng rng(11);
    for (int rep = 0; rep < 20; ++rep) {
        const Block a = random_block(rng, 3);
        const Block b = random_block(rng, 3);
        CHECK(max_abs_diff(block_mul(a, b), triple_loop_product(a, b)) <= 1e-14);
    }
}

TEST_CASE("block constructors validate input") {
    CHECK_THROWS_AS(Block(0), std::invalid_argument);
    CHECK_THROWS_AS(Block(2, {Complex{1.0, 0.0}}), std::invalid_argument);
    const double inf = std::numeric_limits<double>::infinity();
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(Block(1, {Complex{inf, 0.0}}), std::invalid_argument);
    CHECK_THROWS_AS(Block(1, {Complex{0.0, nan}}), std::invalid_argument);
    CHECK_THROWS_AS(block_mul(Block(2), Block(3)), std::invalid_argument);
    CHECK_THROWS_AS(Tolerance(-1.0), std::invalid_argument);
}

TEST_CASE("grid_mul identity and shift cases") {
    Rng rng(13);
    const BlockGrid g = random_grid(rng, 3, 2);
    CHECK(max_abs_diff(grid_mul(g, BlockGrid::block_identity(3, 2)), g) == 0.0);

    // lower shift times upper shift leaves a single 1 at block (1,1)
    BlockGrid lower(2, 1), upper(2, 1);
    lower.block(1, 0) = Block::identity(1);
    upper.block(0, 1) = Block::identity(1);
    const BlockGrid prod = grid_mul(lower, upper);
    CHECK(prod.block(1, 1)(0, 0) == Complex{1.0, 0.0});
    CHECK(max_abs(prod.block(0, 0)) == 0.0);
    CHECK(max_abs(prod.block(0, 1)) == 0.0);
    CHECK(max_abs(prod.block(1, 0)) == 0.0);
}

TEST_CASE("grid_mul agrees with the flatten-then-multiply oracle") {
    Rng rng(17);
    for (std::size_t n : {2u, 4u, 8u}) {
        for (std::size_t d : {1u, 2u, 8u}) {
            const BlockGrid a = random_grid(rng, n, d);
            const BlockGrid b = random_grid(rng, n, d);
            const DenseMatrix expected = oracle::dense_mul(flatten(a), flatten(b));
            const double err = max_abs_diff(flatten(grid_mul(a, b)), expected);
            CHECK(err / scale_floor(max_abs(expected)) <= 1e-12);
        }
    }
    CHECK_THROWS_AS(grid_mul(BlockGrid(2, 1), BlockGrid(3, 1)), std::invalid_argument);
}

TEST_CASE("adjoint is an involution and matches the dense conjugate transpose") {
    Rng rng(19);
    const BlockGrid g = random_grid(rng, 4, 3);
    CHECK(adjoint(adjoint(g)) == g);
    CHECK(max_abs_diff(flatten(adjoint(g)), oracle::dense_adjoint(flatten(g))) == 0.0);

    // Hermitian fixed point
    BlockGrid h(2, 2);
    h.block(0, 0) = Block::identity(2);
    h.block(1, 1) = Block::identity(2);
    h.block(0, 1) = random_block(rng, 2);
    h.block(1, 0) = adjoint(h.block(0, 1));
    CHECK(max_abs_diff(adjoint(h), h) == 0.0);
}

TEST_CASE("adjoint is an anti-homomorphism") {
    Rng rng(23);
    const BlockGrid a = random_grid(rng, 4, 2);
    const BlockGrid b = random_grid(rng, 4, 2);
    const BlockGrid lhs = adjoint(grid_mul(a, b));
    const BlockGrid rhs = grid_mul(adjoint(b), adjoint(a));
    CHECK(max_abs_diff(lhs, rhs) / scale_floor(max_abs(lhs)) <= 1e-12);
}

TEST_CASE("expand produces the textbook Toeplitz layout") {
    const Complex am2{-2.0, 0.5}, am1{-1.0, 0.0}, a0{0.5, 0.5}, a1{1.0, -1.0}, a2{2.0, 0.25};
    BlockToeplitz t(3, 1);
    t.set_symbol(-2, make_block(1, {am2}));
    t.set_symbol(-1, make_block(1, {am1}));
    t.set_symbol(0, make_block(1, {a0}));
    t.set_symbol(1, make_block(1, {a1}));
    t.set_symbol(2, make_block(1, {a2}));
    const BlockGrid g = expand(t);
    // row 0: a0 a1 a2 / row 1: a-1 a0 a1 / row 2: a-2 a-1 a0
    CHECK(g.block(0, 0)(0, 0) == a0);
    CHECK(g.block(0, 1)(0, 0) == a1);
    CHECK(g.block(0, 2)(0, 0) == a2);
    CHECK(g.block(1, 0)(0, 0) == am1);
    CHECK(g.block(1, 1)(0, 0) == a0);
    CHECK(g.block(1, 2)(0, 0) == a1);
    CHECK(g.block(2, 0)(0, 0) == am2);
    CHECK(g.block(2, 1)(0, 0) == am1);
    CHECK(g.block(2, 2)(0, 0) == a0);

    Rng rng(29);
    const BlockToeplitz single = random_toeplitz(rng, 1, 3);
    CHECK(expand(single).block(0, 0) == single.symbol(0));
}

TEST_CASE("expanded Toeplitz matrices pass the diagonal-scan oracle") {
    Rng rng(31);
    for (int rep = 0; rep < 25; ++rep) {
        const std::size_t n = 1 + rng() % 8;
        const std::size_t d = 1 + rng() % 4;
        CHECK(oracle::diagonal_scan_is_toeplitz(expand(random_toeplitz(rng, n, d))));
    }
}

TEST_CASE("flatten and unflatten are mutually inverse, bit exact") {
    Rng rng(37);
    for (int rep = 0; rep < 10; ++rep) {
        const std::size_t n = 1 + rng() % 6;
        const std::size_t d = 1 + rng() % 4;
        const BlockGrid g = random_grid(rng, n, d);
        CHECK(unflatten(flatten(g), n, d) == g);
        const DenseMatrix m = flatten(g);
        CHECK(flatten(unflatten(m, n, d)) == m);
    }
    CHECK_THROWS_AS(unflatten(DenseMatrix(4, 4), 3, 2), std::invalid_argument);
}

TEST_CASE("BlockToeplitz validates its symbol table") {
    CHECK_THROWS_AS(BlockToeplitz(2, 1, std::vector<Block>{Block(1)}), std::invalid_argument);
    BlockToeplitz t(2, 1);
    CHECK_THROWS_AS(t.symbol(2), std::out_of_range);
    CHECK_THROWS_AS(t.set_symbol(0, Block(2)), std::invalid_argument);
}
