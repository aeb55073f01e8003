#include "bt/normality.hpp"

#include <stdexcept>

namespace bt {

ScalarToeplitz::ScalarToeplitz(std::size_t n) : n_(n), symbols_(2 * n - 1, Complex{}) {
    if (n < 1) throw std::invalid_argument("ScalarToeplitz: n must be >= 1");
}

ScalarToeplitz::ScalarToeplitz(std::size_t n, std::vector<Complex> symbols)
    : n_(n), symbols_(std::move(symbols)) {
    if (n < 1) throw std::invalid_argument("ScalarToeplitz: n must be >= 1");
    if (symbols_.size() != 2 * n - 1) {
        throw std::invalid_argument("ScalarToeplitz: expected 2n-1 symbols");
    }
    for (const Complex& z : symbols_) {
        if (!is_finite(z)) throw std::invalid_argument("ScalarToeplitz: non-finite symbol");
    }
}

Complex ScalarToeplitz::symbol(long k) const {
    const long limit = static_cast<long>(n_) - 1;
    if (k < -limit || k > limit) throw std::out_of_range("ScalarToeplitz: symbol index");
    return symbols_[static_cast<std::size_t>(k + limit)];
}

void ScalarToeplitz::set_symbol(long k, Complex v) {
    const long limit = static_cast<long>(n_) - 1;
    if (k < -limit || k > limit) throw std::out_of_range("ScalarToeplitz: symbol index");
    if (!is_finite(v)) throw std::invalid_argument("ScalarToeplitz: non-finite symbol");
    symbols_[static_cast<std::size_t>(k + limit)] = v;
}

DenseMatrix ScalarToeplitz::to_dense() const {
    DenseMatrix m(n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            m(i, j) = symbol(static_cast<long>(j) - static_cast<long>(i));
    return m;
}

DiagonalBlockToeplitz::DiagonalBlockToeplitz(std::size_t n, std::size_t d)
    : n_(n), d_(d), symbols_(2 * n - 1, std::vector<Complex>(d, Complex{})) {
    if (n < 1 || d < 1) throw std::invalid_argument("DiagonalBlockToeplitz: n, d >= 1");
}

DiagonalBlockToeplitz::DiagonalBlockToeplitz(std::size_t n, std::size_t d,
                                             std::vector<std::vector<Complex>> symbols)
    : n_(n), d_(d), symbols_(std::move(symbols)) {
    if (n < 1 || d < 1) throw std::invalid_argument("DiagonalBlockToeplitz: n, d >= 1");
    if (symbols_.size() != 2 * n - 1) {
        throw std::invalid_argument("DiagonalBlockToeplitz: expected 2n-1 symbols");
    }
    for (const auto& diag : symbols_) {
        if (diag.size() != d) {
            throw std::invalid_argument("DiagonalBlockToeplitz: symbol length mismatch");
        }
        for (const Complex& z : diag) {
            if (!is_finite(z)) {
                throw std::invalid_argument("DiagonalBlockToeplitz: non-finite entry");
            }
        }
    }
}

const std::vector<Complex>& DiagonalBlockToeplitz::symbol(long k) const {
    const long limit = static_cast<long>(n_) - 1;
    if (k < -limit || k > limit) throw std::out_of_range("DiagonalBlockToeplitz: index");
    return symbols_[static_cast<std::size_t>(k + limit)];
}

void DiagonalBlockToeplitz::set_symbol(long k, std::vector<Complex> diag) {
    const long limit = static_cast<long>(n_) - 1;
    if (k < -limit || k > limit) throw std::out_of_range("DiagonalBlockToeplitz: index");
    if (diag.size() != d_) {
        throw std::invalid_argument("DiagonalBlockToeplitz: symbol length mismatch");
    }
    symbols_[static_cast<std::size_t>(k + limit)] = std::move(diag);
}

BlockToeplitz DiagonalBlockToeplitz::to_block_toeplitz() const {
    BlockToeplitz t(n_, d_);
    const long limit = static_cast<long>(n_) - 1;
    for (long k = -limit; k <= limit; ++k) {
        Block b(d_);
        const auto& diag = symbol(k);
        for (std::size_t p = 0; p < d_; ++p) b(p, p) = diag[p];
        t.set_symbol(k, std::move(b));
    }
    return t;
}

std::string to_string(SliceClass c) {
    switch (c) {
    case SliceClass::CirculantType: return "circulant-type";
    case SliceClass::ConjugateType: return "conjugate-type";
    case SliceClass::Both: return "both";
    case SliceClass::NotNormal: return "not-normal";
    }
    return "not-normal";
}

std::vector<ScalarToeplitz> shuffle(const DiagonalBlockToeplitz& t) {
    const long limit = static_cast<long>(t.n()) - 1;
    std::vector<ScalarToeplitz> slices;
    slices.reserve(t.d());
    for (std::size_t k = 0; k < t.d(); ++k) {
        ScalarToeplitz s(t.n());
        for (long m = -limit; m <= limit; ++m) s.set_symbol(m, t.symbol(m)[k]);
        slices.push_back(std::move(s));
    }
    return slices;
}

DiagonalBlockToeplitz unshuffle(const std::vector<ScalarToeplitz>& slices) {
    if (slices.empty()) throw std::invalid_argument("unshuffle: empty slice list");
    const std::size_t n = slices.front().n();
    for (const auto& s : slices) {
        if (s.n() != n) throw std::invalid_argument("unshuffle: inconsistent slice sizes");
    }
    DiagonalBlockToeplitz t(n, slices.size());
    const long limit = static_cast<long>(n) - 1;
    for (long m = -limit; m <= limit; ++m) {
        std::vector<Complex> diag(slices.size());
        for (std::size_t k = 0; k < slices.size(); ++k) diag[k] = slices[k].symbol(m);
        t.set_symbol(m, std::move(diag));
    }
    return t;
}

namespace {

struct BranchFit {
    Complex lambda{1.0, 0.0};
    double residual = 0.0; // relative; branch holds iff residual <= eps
};

// Fits neg = lambda * ref with |lambda| = 1. Pivot is the first reference
// entry above the noise floor; unimodularity failure is folded into the
// residual so that "holds" is exactly residual <= eps.
BranchFit fit_branch(const std::vector<Complex>& neg, const std::vector<Complex>& ref,
                     double eps, double scale) {
    BranchFit fit;
    const double floor = eps * scale;
    std::size_t pivot = ref.size();
    for (std::size_t j = 0; j < ref.size(); ++j) {
        if (std::abs(ref[j]) > floor) {
            pivot = j;
            break;
        }
    }
    if (pivot == ref.size()) {
        // Reference wing vanishes: the identity degenerates to neg = 0.
        double worst = 0.0;
        for (const Complex& z : neg) worst = std::max(worst, std::abs(z));
        fit.residual = worst / scale;
        return fit;
    }
    fit.lambda = neg[pivot] / ref[pivot];
    double worst = 0.0;
    for (std::size_t j = 0; j < ref.size(); ++j) {
        worst = std::max(worst, std::abs(neg[j] - fit.lambda * ref[j]));
    }
    fit.residual = std::max(worst / scale, std::abs(std::abs(fit.lambda) - 1.0));
    return fit;
}

} // namespace

SliceReport scalar_normal_classify(const ScalarToeplitz& t, Tolerance tol) {
    const long n = static_cast<long>(t.n());
    std::vector<Complex> neg, circ_ref, conj_ref;
    for (long j = 1; j < n; ++j) {
        neg.push_back(t.symbol(-j));
        circ_ref.push_back(t.symbol(n - j));
        conj_ref.push_back(std::conj(t.symbol(j)));
    }

    // The diagonal symbol never matters for normality, so it is excluded
    // from the comparison scale as well.
    double offdiag = 0.0;
    for (long j = 1; j < n; ++j) {
        offdiag = std::max({offdiag, std::abs(t.symbol(j)), std::abs(t.symbol(-j))});
    }
    const double scale = scale_floor(offdiag);

    const BranchFit circ = fit_branch(neg, circ_ref, tol.eps, scale);
    const BranchFit conj = fit_branch(neg, conj_ref, tol.eps, scale);
    const bool circ_ok = circ.residual <= tol.eps;
    const bool conj_ok = conj.residual <= tol.eps;

    SliceReport report;
    report.residual = std::min(circ.residual, conj.residual);
    if (circ_ok && conj_ok) {
        report.classification = SliceClass::Both;
        report.lambda = circ.lambda; // certifies the circulant identity; == 1 for zero wings
    } else if (circ_ok) {
        report.classification = SliceClass::CirculantType;
        report.lambda = circ.lambda;
    } else if (conj_ok) {
        report.classification = SliceClass::ConjugateType;
        report.lambda = conj.lambda;
    } else {
        report.classification = SliceClass::NotNormal;
    }
    return report;
}

NormalityVerdict block_normal_classify(const DiagonalBlockToeplitz& t, Tolerance tol) {
    NormalityVerdict verdict;
    verdict.overall = true;
    const std::vector<ScalarToeplitz> slices = shuffle(t);
    for (std::size_t k = 0; k < slices.size(); ++k) {
        SliceReport report = scalar_normal_classify(slices[k], tol);
        report.slice = k;
        if (report.classification == SliceClass::NotNormal) verdict.overall = false;
        verdict.slices.push_back(std::move(report));
    }
    return verdict;
}

bool normal_oracle(const DenseMatrix& m, Tolerance tol) {
    if (m.rows() != m.cols()) throw std::invalid_argument("normal_oracle: non-square input");
    const std::size_t N = m.rows();
    double worst = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
            Complex mmstar{0.0, 0.0};
            Complex mstarm{0.0, 0.0};
            for (std::size_t k = 0; k < N; ++k) {
                mmstar += m(i, k) * std::conj(m(j, k));
                mstarm += std::conj(m(k, i)) * m(k, j);
            }
            worst = std::max(worst, std::abs(mmstar - mstarm));
        }
    }
    const double s = scale_floor(max_abs(m));
    return worst <= tol.eps * s * s;
}

} // namespace bt
