#include "bt/displacement.hpp"

namespace bt {

BlockGrid shift_down(const BlockGrid& g) {
    const std::size_t n = g.n();
    BlockGrid r(n, g.d());
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j) r.block(i, j) = g.block(i - 1, j - 1);
    return r;
}

BlockGrid displacement(const BlockGrid& g) {
    const std::size_t n = g.n();
    BlockGrid r = g;
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j)
            r.block(i, j) = g.block(i, j) - g.block(i - 1, j - 1);
    return r;
}

BlockGrid reconstruct(const BlockGrid& dG) {
    const std::size_t n = dG.n();
    BlockGrid r(n, dG.d());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Block acc = dG.block(i, j);
            // shifted copies S^k dG S^k* contribute dG(i-k, j-k)
            for (std::size_t k = 1; k <= std::min(i, j); ++k) {
                acc = acc + dG.block(i - k, j - k);
            }
            r.block(i, j) = acc;
        }
    }
    return r;
}

BlockGrid factors_to_displacement(const DisplacementFactors& f) {
    const std::size_t n = f.x.n(), d = f.x.d();
    BlockGrid r(n, d);
    for (std::size_t i = 0; i < n; ++i) r.block(i, 0) = f.x.entry(i);
    for (std::size_t j = 1; j < n; ++j) r.block(0, j) = adjoint(f.xprime.entry(j));
    return r;
}

double toeplitz_residual(const BlockGrid& g) {
    const std::size_t n = g.n();
    const BlockGrid dg = displacement(g);
    double worst = 0.0;
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j) worst = std::max(worst, max_abs(dg.block(i, j)));
    return worst / scale_floor(max_abs(g));
}

std::optional<DisplacementFactors> toeplitz_factor(const BlockGrid& g, Tolerance tol) {
    const std::size_t n = g.n(), d = g.d();
    const BlockGrid dg = displacement(g);
    const double bound = tol.bound(max_abs(g));
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j)
            if (max_abs(dg.block(i, j)) > bound) return std::nullopt;

    BlockColumn x(n, d), xprime(n, d);
    for (std::size_t i = 0; i < n; ++i) x.entry(i) = dg.block(i, 0);
    for (std::size_t j = 1; j < n; ++j) xprime.entry(j) = adjoint(dg.block(0, j));
    return DisplacementFactors{std::move(x), std::move(xprime)};
}

bool is_block_toeplitz(const BlockGrid& g, Tolerance tol) {
    return toeplitz_factor(g, tol).has_value();
}

BlockToeplitz toeplitz_from_factors(const DisplacementFactors& f) {
    const std::size_t n = f.x.n();
    BlockToeplitz t(n, f.x.d());
    for (std::size_t i = 0; i < n; ++i) t.set_symbol(-static_cast<long>(i), f.x.entry(i));
    for (std::size_t j = 1; j < n; ++j)
        t.set_symbol(static_cast<long>(j), adjoint(f.xprime.entry(j)));
    return t;
}

} // namespace bt
