#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace bt {

using Complex = std::complex<double>;

inline bool is_finite(const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Relative comparison rule shared by every numeric predicate in the
/// library: two quantities agree when the largest entry of their
/// difference is at most eps * max(1, largest entry magnitude among the
/// compared operands). Structural round-trip operations (flatten,
/// shuffle, serialization) are exact and bypass this rule.
struct Tolerance {
    double eps = 1e-9;

    Tolerance() = default;
    explicit Tolerance(double e) : eps(e) {
        if (!(e >= 0.0)) {
            throw std::invalid_argument("Tolerance: eps must be nonnegative");
        }
    }

    /// Absolute bound for a comparison whose operands peak at `magnitude`.
    double bound(double magnitude) const { return eps * std::max(1.0, magnitude); }
};

/// max(1, m) — the floor that makes small-scale comparisons absolute.
inline double scale_floor(double m) { return std::max(1.0, m); }

} // namespace bt
