#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "bt/grid.hpp"
#include "bt/normality.hpp"
#include "bt/toeplitz.hpp"

namespace bt {

/// Malformed input: syntax errors (with byte position), schema violations
/// (named key or field), non-finite numbers, size limits.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class MatrixKind { Dense, BlockToeplitz, DiagonalBlockToeplitz };

std::string to_string(MatrixKind k);

/// One matrix in the on-disk UTF-8 JSON format:
///   { "kind": "dense" | "block-toeplitz" | "diagonal-block-toeplitz",
///     "n": int, "d": int, "payload": ... }
/// Complex numbers are [re, im] pairs. Dense payload is an n x n x d x d
/// nested array; Toeplitz payloads map symbol index strings "-2".."2" to a
/// d x d array (block-toeplitz) or a length-d array (diagonal-block-toeplitz).
/// Canonical form: payload keys in numeric order, round-trip-exact numbers.
class MatrixFile {
public:
    explicit MatrixFile(BlockGrid g) : value_(std::move(g)) {}
    explicit MatrixFile(bt::BlockToeplitz t) : value_(std::move(t)) {}
    explicit MatrixFile(DiagonalBlockToeplitz t) : value_(std::move(t)) {}

    MatrixKind kind() const;
    std::size_t n() const;
    std::size_t d() const;

    const BlockGrid& dense() const { return std::get<BlockGrid>(value_); }
    const bt::BlockToeplitz& toeplitz() const { return std::get<bt::BlockToeplitz>(value_); }
    const DiagonalBlockToeplitz& diagonal() const {
        return std::get<DiagonalBlockToeplitz>(value_);
    }

    bool operator==(const MatrixFile& other) const = default;

private:
    std::variant<BlockGrid, bt::BlockToeplitz, DiagonalBlockToeplitz> value_;
};

/// Size caps: structured kinds nd <= 8192, dense kind nd <= 512.
inline constexpr std::size_t kStructuredCap = 8192;
inline constexpr std::size_t kDenseCap = 512;

MatrixFile parse_matrix_file(std::string_view text);
MatrixFile load_matrix_file(const std::filesystem::path& path);

/// Canonical serialization; serialize(parse(x)) == x for canonical x.
std::string serialize(const MatrixFile& file);
void save_matrix_file(const std::filesystem::path& path, const MatrixFile& file);

} // namespace bt
