"""Block Toeplitz structure checks.

Displacement-rank detection of block Toeplitz structure, wing-vector
criteria for whether products and differences of block Toeplitz matrices
are block Toeplitz or equal (without forming the products), and normality
classification for block Toeplitz matrices with diagonal symbols.
"""

from blocktoeplitz._core import (
    BlockGrid,
    BlockToeplitz,
    DiagonalBlockToeplitz,
    MatrixFile,
    NormalityVerdict,
    ParseError,
    ScalarToeplitz,
    SliceClass,
    SliceReport,
    block_normal_classify,
    diagonal_scan_is_toeplitz,
    difference_is_toeplitz,
    generate,
    is_block_toeplitz,
    normal_oracle,
    parse_matrix_file,
    product_is_toeplitz,
    products_equal,
    scalar_normal_classify,
    serialize,
    shuffle,
    toeplitz_residual,
    unshuffle,
)

__all__ = [
    "BlockGrid",
    "BlockToeplitz",
    "DiagonalBlockToeplitz",
    "MatrixFile",
    "NormalityVerdict",
    "ParseError",
    "ScalarToeplitz",
    "SliceClass",
    "SliceReport",
    "block_normal_classify",
    "diagonal_scan_is_toeplitz",
    "difference_is_toeplitz",
    "generate",
    "is_block_toeplitz",
    "normal_oracle",
    "parse_matrix_file",
    "product_is_toeplitz",
    "products_equal",
    "scalar_normal_classify",
    "serialize",
    "shuffle",
    "toeplitz_residual",
    "unshuffle",
]

__version__ = "0.1.0"
