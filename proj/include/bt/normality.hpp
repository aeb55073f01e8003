#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bt/dense.hpp"
#include "bt/toeplitz.hpp"

namespace bt {

/// Scalar n x n Toeplitz matrix held by its 2n-1 complex symbols
/// a_{-(n-1)} ... a_{n-1}; one diagonal slice of a block Toeplitz matrix
/// over the diagonal-matrix algebra.
class ScalarToeplitz {
public:
    explicit ScalarToeplitz(std::size_t n);
    ScalarToeplitz(std::size_t n, std::vector<Complex> symbols); // k ascending

    std::size_t n() const { return n_; }
    Complex symbol(long k) const;
    void set_symbol(long k, Complex v);

    DenseMatrix to_dense() const; // entry (i,j) = a_{j-i}

    bool operator==(const ScalarToeplitz& other) const = default;

private:
    std::size_t n_;
    std::vector<Complex> symbols_;
};

/// Block Toeplitz matrix whose symbols are d x d diagonal matrices, stored
/// as the length-d diagonal of each symbol.
class DiagonalBlockToeplitz {
public:
    DiagonalBlockToeplitz(std::size_t n, std::size_t d);
    DiagonalBlockToeplitz(std::size_t n, std::size_t d,
                          std::vector<std::vector<Complex>> symbols); // k ascending

    std::size_t n() const { return n_; }
    std::size_t d() const { return d_; }
    const std::vector<Complex>& symbol(long k) const;
    void set_symbol(long k, std::vector<Complex> diag);

    BlockToeplitz to_block_toeplitz() const;

    bool operator==(const DiagonalBlockToeplitz& other) const = default;

private:
    std::size_t n_, d_;
    std::vector<std::vector<Complex>> symbols_;
};

/// Slice classification against the two normal-Toeplitz families:
///   circulant-type: a_{-j} = lambda a_{n-j} for all j >= 1, |lambda| = 1
///   conjugate-type: a_{-j} = lambda conj(a_j) for all j >= 1, |lambda| = 1
/// "both" covers all-zero wings (lambda = 1) and matrices satisfying both
/// identities; the diagonal symbol a_0 never participates.
enum class SliceClass { CirculantType, ConjugateType, Both, NotNormal };

std::string to_string(SliceClass c);

struct SliceReport {
    std::size_t slice = 0;
    SliceClass classification = SliceClass::NotNormal;
    std::optional<Complex> lambda; // absent iff not-normal
    double residual = 0.0;         // best-branch relative residual
};

struct NormalityVerdict {
    std::vector<SliceReport> slices;
    bool overall = false; // true iff no slice is not-normal
};

/// Perfect-shuffle change of basis: slice k collects the k-th diagonal
/// entry of every symbol. Conjugating the flattened matrix by the
/// perfect-shuffle permutation yields the direct sum of the slices.
std::vector<ScalarToeplitz> shuffle(const DiagonalBlockToeplitz& t);

/// Inverse regrouping; shuffle(unshuffle(s)) == s exactly.
DiagonalBlockToeplitz unshuffle(const std::vector<ScalarToeplitz>& slices);

SliceReport scalar_normal_classify(const ScalarToeplitz& t, Tolerance tol = {});

/// Classifies every shuffle slice; overall is true iff each slice passes
/// one of the two branches with its own lambda.
NormalityVerdict block_normal_classify(const DiagonalBlockToeplitz& t, Tolerance tol = {});

/// Ground truth: max-entry magnitude of MM* - M*M <= tol.eps * scale(M)^2
/// with scale(M) = max(1, largest entry magnitude). The commutator is
/// formed by plain triple loops, independent of every structured path.
bool normal_oracle(const DenseMatrix& m, Tolerance tol = {});

} // namespace bt
