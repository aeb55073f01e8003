#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bt/displacement.hpp"
#include "bt/generators.hpp"
#include "bt/matrix_file.hpp"
#include "bt/normality.hpp"
#include "bt/oracle.hpp"
#include "bt/product_criteria.hpp"

namespace py = pybind11;
using namespace bt;

namespace {

using ComplexRows = std::vector<std::vector<Complex>>;

Block block_from_rows(const ComplexRows& rows) {
    const std::size_t d = rows.size();
    std::vector<Complex> entries;
    entries.reserve(d * d);
    for (const auto& row : rows) {
        if (row.size() != d) throw std::invalid_argument("block rows must be square");
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return Block(d, std::move(entries));
}

ComplexRows block_to_rows(const Block& b) {
    ComplexRows rows(b.dim(), std::vector<Complex>(b.dim()));
    for (std::size_t r = 0; r < b.dim(); ++r)
        for (std::size_t c = 0; c < b.dim(); ++c) rows[r][c] = b(r, c);
    return rows;
}

ComplexRows dense_to_rows(const DenseMatrix& m) {
    ComplexRows rows(m.rows(), std::vector<Complex>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m(r, c);
    return rows;
}

DenseMatrix dense_from_rows(const ComplexRows& rows) {
    const std::size_t r = rows.size();
    if (r == 0) throw std::invalid_argument("matrix must be nonempty");
    const std::size_t c = rows.front().size();
    std::vector<Complex> entries;
    entries.reserve(r * c);
    for (const auto& row : rows) {
        if (row.size() != c) throw std::invalid_argument("ragged matrix rows");
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return DenseMatrix(r, c, std::move(entries));
}

BlockToeplitz toeplitz_from_map(std::size_t n, std::size_t d,
                                const std::map<long, ComplexRows>& symbols) {
    BlockToeplitz t(n, d);
    for (const auto& [k, rows] : symbols) t.set_symbol(k, block_from_rows(rows));
    return t;
}

DiagonalBlockToeplitz diagonal_from_map(std::size_t n, std::size_t d,
                                        const std::map<long, std::vector<Complex>>& symbols) {
    DiagonalBlockToeplitz t(n, d);
    for (const auto& [k, diag] : symbols) t.set_symbol(k, diag);
    return t;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Block Toeplitz structure checks: displacement rank, wing-vector product "
              "criteria, and normality of block Toeplitz matrices with diagonal symbols.";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<BlockGrid>(m, "BlockGrid")
        .def(py::init([](const ComplexRows& rows, std::size_t n, std::size_t d) {
                 return unflatten(dense_from_rows(rows), n, d);
             }),
             py::arg("entries"), py::arg("n"), py::arg("d"),
             "Build from a dense nd x nd nested list, block size d.")
        .def_property_readonly("n", &BlockGrid::n)
        .def_property_readonly("d", &BlockGrid::d)
        .def("block",
             [](const BlockGrid& g, std::size_t i, std::size_t j) {
                 return block_to_rows(g.block(i, j));
             })
        .def("to_dense", [](const BlockGrid& g) { return dense_to_rows(flatten(g)); })
        .def("__eq__", [](const BlockGrid& a, const BlockGrid& b) { return a == b; });

    py::class_<BlockToeplitz>(m, "BlockToeplitz")
        .def(py::init(&toeplitz_from_map), py::arg("n"), py::arg("d"),
             py::arg("symbols") = std::map<long, ComplexRows>{},
             "Symbols map index k in [-(n-1), n-1] to a d x d nested list; "
             "missing indices are zero blocks.")
        .def_property_readonly("n", &BlockToeplitz::n)
        .def_property_readonly("d", &BlockToeplitz::d)
        .def("symbol",
             [](const BlockToeplitz& t, long k) { return block_to_rows(t.symbol(k)); })
        .def("expand", [](const BlockToeplitz& t) { return expand(t); })
        .def("__eq__",
             [](const BlockToeplitz& a, const BlockToeplitz& b) { return a == b; });

    py::class_<ScalarToeplitz>(m, "ScalarToeplitz")
        .def(py::init<std::size_t, std::vector<Complex>>(), py::arg("n"), py::arg("symbols"))
        .def_property_readonly("n", &ScalarToeplitz::n)
        .def("symbol", &ScalarToeplitz::symbol)
        .def("to_dense", [](const ScalarToeplitz& t) { return dense_to_rows(t.to_dense()); })
        .def("__eq__",
             [](const ScalarToeplitz& a, const ScalarToeplitz& b) { return a == b; });

    py::class_<DiagonalBlockToeplitz>(m, "DiagonalBlockToeplitz")
        .def(py::init(&diagonal_from_map), py::arg("n"), py::arg("d"),
             py::arg("symbols") = std::map<long, std::vector<Complex>>{},
             "Symbols map index k to the length-d diagonal of that block.")
        .def_property_readonly("n", &DiagonalBlockToeplitz::n)
        .def_property_readonly("d", &DiagonalBlockToeplitz::d)
        .def("symbol", &DiagonalBlockToeplitz::symbol)
        .def("to_block_toeplitz", &DiagonalBlockToeplitz::to_block_toeplitz)
        .def("__eq__", [](const DiagonalBlockToeplitz& a, const DiagonalBlockToeplitz& b) {
            return a == b;
        });

    py::enum_<SliceClass>(m, "SliceClass")
        .value("CIRCULANT_TYPE", SliceClass::CirculantType)
        .value("CONJUGATE_TYPE", SliceClass::ConjugateType)
        .value("BOTH", SliceClass::Both)
        .value("NOT_NORMAL", SliceClass::NotNormal);

    py::class_<SliceReport>(m, "SliceReport")
        .def_readonly("slice", &SliceReport::slice)
        .def_readonly("classification", &SliceReport::classification)
        .def_readonly("lambda_", &SliceReport::lambda)
        .def_readonly("residual", &SliceReport::residual)
        .def("__repr__", [](const SliceReport& s) {
            return "<SliceReport slice=" + std::to_string(s.slice) + " " +
                   to_string(s.classification) + ">";
        });

    py::class_<NormalityVerdict>(m, "NormalityVerdict")
        .def_readonly("slices", &NormalityVerdict::slices)
        .def_readonly("overall", &NormalityVerdict::overall);

    py::class_<MatrixFile>(m, "MatrixFile")
        .def(py::init<BlockGrid>())
        .def(py::init<BlockToeplitz>())
        .def(py::init<DiagonalBlockToeplitz>())
        .def_property_readonly("kind",
                               [](const MatrixFile& f) { return to_string(f.kind()); })
        .def_property_readonly("n", &MatrixFile::n)
        .def_property_readonly("d", &MatrixFile::d)
        .def("dense", &MatrixFile::dense)
        .def("toeplitz", &MatrixFile::toeplitz)
        .def("diagonal", &MatrixFile::diagonal)
        .def("__eq__", [](const MatrixFile& a, const MatrixFile& b) { return a == b; });

    m.def(
        "is_block_toeplitz",
        [](const BlockGrid& g, double tol) { return is_block_toeplitz(g, Tolerance{tol}); },
        py::arg("grid"), py::arg("tol") = 1e-9);
    m.def("toeplitz_residual", &toeplitz_residual, py::arg("grid"));
    m.def(
        "product_is_toeplitz",
        [](const BlockToeplitz& a, const BlockToeplitz& b, double tol) {
            return product_is_toeplitz(a, b, Tolerance{tol});
        },
        py::arg("a"), py::arg("b"), py::arg("tol") = 1e-9);
    m.def(
        "difference_is_toeplitz",
        [](const BlockToeplitz& a, const BlockToeplitz& b, const BlockToeplitz& c,
           const BlockToeplitz& d, double tol) {
            return difference_is_toeplitz(a, b, c, d, Tolerance{tol});
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"), py::arg("tol") = 1e-9);
    m.def(
        "products_equal",
        [](const BlockToeplitz& a, const BlockToeplitz& b, const BlockToeplitz& c,
           const BlockToeplitz& d, double tol) {
            return products_equal(a, b, c, d, Tolerance{tol});
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"), py::arg("tol") = 1e-9);
    m.def(
        "shuffle", [](const DiagonalBlockToeplitz& t) { return shuffle(t); }, py::arg("t"));
    m.def(
        "unshuffle", [](const std::vector<ScalarToeplitz>& s) { return unshuffle(s); },
        py::arg("slices"));
    m.def(
        "scalar_normal_classify",
        [](const ScalarToeplitz& t, double tol) {
            return scalar_normal_classify(t, Tolerance{tol});
        },
        py::arg("t"), py::arg("tol") = 1e-9);
    m.def(
        "block_normal_classify",
        [](const DiagonalBlockToeplitz& t, double tol) {
            return block_normal_classify(t, Tolerance{tol});
        },
        py::arg("t"), py::arg("tol") = 1e-9);
    m.def(
        "normal_oracle",
        [](const ComplexRows& rows, double tol) {
            return normal_oracle(dense_from_rows(rows), Tolerance{tol});
        },
        py::arg("matrix"), py::arg("tol") = 1e-9);
    m.def(
        "diagonal_scan_is_toeplitz",
        [](const BlockGrid& g, double tol) {
            return oracle::diagonal_scan_is_toeplitz(g, Tolerance{tol});
        },
        py::arg("grid"), py::arg("tol") = 1e-9);
    m.def("parse_matrix_file", &parse_matrix_file, py::arg("text"));
    m.def("serialize", &serialize, py::arg("file"));
    m.def("generate", &generate, py::arg("kind"), py::arg("n"), py::arg("d"),
          py::arg("seed") = 0);
}
