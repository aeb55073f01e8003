#include <doctest.h>

#include "bt/generators.hpp"
#include "bt/oracle.hpp"
#include "bt/product_criteria.hpp"

using namespace bt;

namespace {

Block scalar_block(double re, double im = 0.0) {
    return Block(1, {Complex{re, im}});
}

BlockToeplitz zero_like(const BlockToeplitz& t) { return BlockToeplitz(t.n(), t.d()); }

/// Copy with the main diagonal symbol zeroed.
BlockToeplitz drop_diagonal(const BlockToeplitz& t) {
    BlockToeplitz r = t;
    r.set_symbol(0, Block(t.d()));
    return r;
}

BlockToeplitz shift_pair_a() {
    BlockToeplitz a(2, 1); // lower shift: a_{-1} = 1
    a.set_symbol(-1, scalar_block(1.0));
    return a;
}

BlockToeplitz shift_pair_b() {
    BlockToeplitz b(2, 1); // upper shift: b_1 = 1
    b.set_symbol(1, scalar_block(1.0));
    return b;
}

} // namespace

TEST_CASE("wings reads the four bordered vectors off the symbols") {
    const Complex q{-2.0, 1.0}, p{-1.0, 0.5}, a0{9.0, 9.0}, r{1.0, -0.5}, s{2.0, 0.25};
    BlockToeplitz t(3, 1);
    t.set_symbol(-2, Block(1, {q}));
    t.set_symbol(-1, Block(1, {p}));
    t.set_symbol(0, Block(1, {a0}));
    t.set_symbol(1, Block(1, {r}));
    t.set_symbol(2, Block(1, {s}));

    const WingSet w = wings(t);
    CHECK(max_abs(w.minus_col.entry(0)) == 0.0);
    CHECK(w.minus_col.entry(1)(0, 0) == p);
    CHECK(w.minus_col.entry(2)(0, 0) == q);
    CHECK(w.plus_col.entry(1)(0, 0) == s);
    CHECK(w.plus_col.entry(2)(0, 0) == r);
    CHECK(w.plus_row.entry(1)(0, 0) == r);
    CHECK(w.plus_row.entry(2)(0, 0) == s);
    CHECK(w.minus_row.entry(1)(0, 0) == q);
    CHECK(w.minus_row.entry(2)(0, 0) == p);
}

TEST_CASE("wings of a diagonal block Toeplitz matrix vanish") {
    Rng rng(79);
    BlockToeplitz t(4, 2);
    t.set_symbol(0, random_block(rng, 2));
    const WingSet w = wings(t);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(max_abs(w.minus_col.entry(i)) == 0.0);
        CHECK(max_abs(w.plus_col.entry(i)) == 0.0);
        CHECK(max_abs(w.plus_row.entry(i)) == 0.0);
        CHECK(max_abs(w.minus_row.entry(i)) == 0.0);
    }
}

TEST_CASE("n=2 wing outer product reproduces the displacement interior entry") {
    Rng rng(83);
    const BlockToeplitz a = random_toeplitz(rng, 2, 2);
    const BlockToeplitz b = random_toeplitz(rng, 2, 2);
    // direct computation of displacement(A~ B~) at (1,1)
    const BlockGrid product = grid_mul(expand(drop_diagonal(a)), expand(drop_diagonal(b)));
    const Block expected = displacement(product).block(1, 1);
    const Block direct = block_mul(a.symbol(-1), b.symbol(1)) -
                         block_mul(a.symbol(1), b.symbol(-1));
    const Block from_gap = wing_gap(a, b).entry(1, 1);
    CHECK(max_abs_diff(direct, expected) <= 1e-12);
    CHECK(max_abs_diff(from_gap, expected) <= 1e-12);
}

TEST_CASE("wing gap of lower-triangular factors vanishes") {
    Rng rng(89);
    const BlockToeplitz a = random_lower_triangular(rng, 4, 2);
    const BlockToeplitz b = random_lower_triangular(rng, 4, 2);
    const WingGap gap = wing_gap(a, b);
    CHECK(gap.zero_residual() == 0.0);
    CHECK(max_abs(gap.materialize()) == 0.0);
}

TEST_CASE("n=2 shift pair has a single unit gap entry") {
    const WingGap gap = wing_gap(shift_pair_a(), shift_pair_b());
    const BlockGrid m = gap.materialize();
    CHECK(m.block(1, 1)(0, 0) == Complex{1.0, 0.0});
    CHECK(max_abs(m.block(0, 0)) == 0.0);
    CHECK(max_abs(m.block(0, 1)) == 0.0);
    CHECK(max_abs(m.block(1, 0)) == 0.0);
}

TEST_CASE("wing gap equals the displacement of the zero-diagonal product") {
    Rng rng(97);
    for (int rep = 0; rep < 10; ++rep) {
        const std::size_t n = 2 + rng() % 3; // includes the n=4, d=2 case
        const std::size_t d = 1 + rng() % 2;
        const BlockToeplitz a = random_toeplitz(rng, n, d);
        const BlockToeplitz b = random_toeplitz(rng, n, d);
        const DenseMatrix product = oracle::dense_mul(flatten(expand(drop_diagonal(a))),
                                                      flatten(expand(drop_diagonal(b))));
        const BlockGrid dp = unflatten(oracle::dense_displacement(product, n, d), n, d);
        const BlockGrid gap = wing_gap(a, b).materialize();
        double worst = 0.0;
        double scale = 0.0;
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 1; j < n; ++j) {
                worst = std::max(worst, max_abs_diff(gap.block(i, j), dp.block(i, j)));
                scale = std::max(scale, max_abs(dp.block(i, j)));
            }
        CHECK(worst / scale_floor(scale) <= 1e-12);
    }
}

TEST_CASE("wing gap materialization always has a zero border") {
    Rng rng(101);
    for (int rep = 0; rep < 10; ++rep) {
        const std::size_t n = 1 + rng() % 6;
        const BlockToeplitz a = random_toeplitz(rng, n, 2);
        const BlockToeplitz b = random_toeplitz(rng, n, 2);
        const BlockGrid m = wing_gap(a, b).materialize();
        for (std::size_t k = 0; k < n; ++k) {
            CHECK(max_abs(m.block(0, k)) == 0.0);
            CHECK(max_abs(m.block(k, 0)) == 0.0);
        }
    }
    CHECK_THROWS_AS(wing_gap(BlockToeplitz(2, 1), BlockToeplitz(3, 1)),
                    std::invalid_argument);
}

TEST_CASE("product_displacement of diagonal factors is carried by slot zero") {
    Rng rng(103);
    BlockToeplitz a(3, 2), b(3, 2);
    a.set_symbol(0, random_block(rng, 2));
    b.set_symbol(0, random_block(rng, 2));
    const ProductDisplacement pd = product_displacement(a, b);
    CHECK(pd.gap.zero_residual() == 0.0);
    CHECK(max_abs_diff(pd.y.entry(0), block_mul(a.symbol(0), b.symbol(0))) <= 1e-14);
    for (std::size_t i = 1; i < 3; ++i) {
        CHECK(max_abs(pd.y.entry(i)) == 0.0);
        CHECK(max_abs(pd.yprime.entry(i)) == 0.0);
    }
}

TEST_CASE("n=2 shift pair displacement decomposition by hand") {
    const ProductDisplacement pd = product_displacement(shift_pair_a(), shift_pair_b());
    CHECK(max_abs(pd.y.entry(0)) == 0.0);
    CHECK(max_abs(pd.y.entry(1)) == 0.0);
    CHECK(max_abs(pd.yprime.entry(0)) == 0.0);
    CHECK(max_abs(pd.yprime.entry(1)) == 0.0);
    // the sum reproduces displacement(diag(0,1)) = [[0,0],[0,1]]
    const BlockGrid sum = pd.materialize();
    CHECK(sum.block(1, 1)(0, 0) == Complex{1.0, 0.0});
    CHECK(max_abs(sum.block(0, 0)) == 0.0);
    CHECK(max_abs(sum.block(0, 1)) == 0.0);
    CHECK(max_abs(sum.block(1, 0)) == 0.0);
}

TEST_CASE("product_displacement reproduces the dense displacement") {
    Rng rng(107);
    for (int rep = 0; rep < 10; ++rep) {
        const std::size_t n = 2 + rng() % 4; // includes n=5, d=2
        const std::size_t d = 1 + rng() % 2;
        const BlockToeplitz a = random_toeplitz(rng, n, d);
        const BlockToeplitz b = random_toeplitz(rng, n, d);
        const DenseMatrix product =
            oracle::dense_mul(flatten(expand(a)), flatten(expand(b)));
        const DenseMatrix expected = oracle::dense_displacement(product, n, d);
        const DenseMatrix actual = flatten(product_displacement(a, b).materialize());
        CHECK(max_abs_diff(actual, expected) / scale_floor(max_abs(expected)) <= 1e-11);
    }
}

TEST_CASE("product_is_toeplitz hand cases") {
    Rng rng(109);
    const BlockToeplitz lo1 = random_lower_triangular(rng, 4, 2);
    const BlockToeplitz lo2 = random_lower_triangular(rng, 4, 2);
    CHECK(product_is_toeplitz(lo1, lo2));

    CHECK(!product_is_toeplitz(shift_pair_a(), shift_pair_b()));
    CHECK(!oracle::dense_product_check(shift_pair_a(), shift_pair_b(),
                                       zero_like(shift_pair_a()), zero_like(shift_pair_b()),
                                       oracle::ProductCheckMode::Toeplitz));
}

TEST_CASE("products of block circulants are block Toeplitz") {
    Rng rng(113);
    for (int rep = 0; rep < 8; ++rep) {
        const std::size_t n = 2 + rng() % 5;
        const std::size_t d = 1 + rng() % 3;
        const BlockToeplitz a = random_circulant(rng, n, d);
        const BlockToeplitz b = random_circulant(rng, n, d);
        CHECK(product_is_toeplitz(a, b));
        CHECK(oracle::dense_product_check(a, b, zero_like(a), zero_like(b),
                                          oracle::ProductCheckMode::Toeplitz));
    }
}

TEST_CASE("difference_is_toeplitz hand cases") {
    Rng rng(127);
    const BlockToeplitz a = random_toeplitz(rng, 4, 2);
    const BlockToeplitz b = random_toeplitz(rng, 4, 2);
    CHECK(difference_is_toeplitz(a, b, a, b));

    // wings ignore the main diagonal
    BlockToeplitz d = b;
    d.set_symbol(0, random_block(rng, 2));
    CHECK(difference_is_toeplitz(a, b, a, d));
    CHECK(oracle::dense_product_check(a, b, a, d, oracle::ProductCheckMode::Toeplitz));

    const BlockToeplitz sa = shift_pair_a(), sb = shift_pair_b();
    CHECK(!difference_is_toeplitz(sa, sb, zero_like(sa), zero_like(sb)));
}

TEST_CASE("gap-matched quadruples always pass the difference check") {
    Rng rng(131);
    for (int rep = 0; rep < 10; ++rep) {
        const std::size_t n = 1 + rng() % 8;
        const std::size_t d = 1 + rng() % 4;
        const auto [a, b, c, dd] = gap_matched_quadruple(rng, n, d);
        CHECK(difference_is_toeplitz(a, b, c, dd));
    }
}

TEST_CASE("products_equal hand cases") {
    Rng rng(137);
    const BlockToeplitz a = random_toeplitz(rng, 3, 2);
    const BlockToeplitz b = random_toeplitz(rng, 3, 2);
    CHECK(products_equal(a, b, a, b));

    // AB = diag(0,1) vs CD = diag(1,0): gaps differ by sign at (1,1)
    const BlockToeplitz sa = shift_pair_a(), sb = shift_pair_b();
    const CheckResult swapped = products_equal_check(sa, sb, sb, sa);
    CHECK(!swapped.verdict);
    CHECK(wing_gap(sa, sb).entry(1, 1)(0, 0) == Complex{1.0, 0.0});
    CHECK(wing_gap(sb, sa).entry(1, 1)(0, 0) == Complex{-1.0, 0.0});

    // both products zero
    const BlockToeplitz z = zero_like(a);
    const BlockToeplitz d = random_toeplitz(rng, 3, 2);
    CHECK(products_equal(a, z, z, d));
}

TEST_CASE("products_equal matches dense equality on random quadruples") {
    Rng rng(139);
    const Tolerance tol{};
    int equal_cases = 0;
    for (int rep = 0; rep < 60; ++rep) {
        const std::size_t n = 1 + rng() % 6;
        const std::size_t d = 1 + rng() % 3;
        BlockToeplitz a = random_toeplitz(rng, n, d);
        BlockToeplitz b = random_toeplitz(rng, n, d);
        BlockToeplitz c = rep % 3 == 0 ? a : random_toeplitz(rng, n, d);
        BlockToeplitz dd = rep % 3 == 0 ? b : random_toeplitz(rng, n, d);
        const bool fast = products_equal(a, b, c, dd, tol);
        const bool slow = oracle::dense_product_check(a, b, c, dd,
                                                      oracle::ProductCheckMode::Equal, tol);
        CHECK(fast == slow);
        equal_cases += fast ? 1 : 0;
    }
    CHECK(equal_cases > 10);
}

TEST_CASE("n=1 degenerate criteria") {
    Rng rng(149);
    const BlockToeplitz a = random_toeplitz(rng, 1, 3);
    const BlockToeplitz b = random_toeplitz(rng, 1, 3);
    const BlockToeplitz c = random_toeplitz(rng, 1, 3);
    const BlockToeplitz d = random_toeplitz(rng, 1, 3);
    CHECK(product_is_toeplitz(a, b));
    CHECK(difference_is_toeplitz(a, b, c, d));
    const bool expected =
        max_abs_diff(block_mul(a.symbol(0), b.symbol(0)),
                     block_mul(c.symbol(0), d.symbol(0))) <= Tolerance{}.bound(1.0);
    CHECK(products_equal(a, b, c, d) == expected);
}

TEST_CASE("difference check costs Theta(n^2) block products") {
    Rng rng(151);
    const std::size_t n = 32, d = 2;
    const auto [a, b, c, dd] = gap_matched_quadruple(rng, n, d);
    reset_block_mul_count();
    CHECK(difference_is_toeplitz(a, b, c, dd));
    const std::uint64_t count = block_mul_count();
    // two gaps, two products per interior entry
    CHECK(count == 4 * (n - 1) * (n - 1));
}

TEST_CASE("WingGap rejects nonzero zeroth components") {
    BlockColumn col(3, 1);
    col.entry(0) = Block(1, {Complex{1.0, 0.0}});
    CHECK_THROWS_AS(WingGap(col, BlockColumn(3, 1), BlockRow(3, 1), BlockRow(3, 1)),
                    std::invalid_argument);
}
