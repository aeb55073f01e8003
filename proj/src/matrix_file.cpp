#include "bt/matrix_file.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace bt {

using nlohmann::json;
using nlohmann::ordered_json;

std::string to_string(MatrixKind k) {
    switch (k) {
    case MatrixKind::Dense: return "dense";
    case MatrixKind::BlockToeplitz: return "block-toeplitz";
    case MatrixKind::DiagonalBlockToeplitz: return "diagonal-block-toeplitz";
    }
    return "dense";
}

MatrixKind MatrixFile::kind() const {
    if (std::holds_alternative<BlockGrid>(value_)) return MatrixKind::Dense;
    if (std::holds_alternative<bt::BlockToeplitz>(value_)) return MatrixKind::BlockToeplitz;
    return MatrixKind::DiagonalBlockToeplitz;
}

std::size_t MatrixFile::n() const {
    return std::visit([](const auto& v) { return v.n(); }, value_);
}

std::size_t MatrixFile::d() const {
    return std::visit([](const auto& v) { return v.d(); }, value_);
}

namespace {

[[noreturn]] void fail(const std::string& message) { throw ParseError(message); }

double read_number(const json& j, const std::string& where) {
    if (!j.is_number()) fail(where + ": expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) fail(where + ": non-finite number");
    return v;
}

Complex read_complex(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2) fail(where + ": expected [re, im]");
    return Complex{read_number(j[0], where + "[0]"), read_number(j[1], where + "[1]")};
}

std::size_t read_dim(const json& top, const char* key) {
    if (!top.contains(key)) fail(std::string("missing field \"") + key + "\"");
    const json& j = top.at(key);
    if (!j.is_number_integer() || j.get<long long>() < 1) {
        fail(std::string("field \"") + key + "\" must be a positive integer");
    }
    return j.get<std::size_t>();
}

long parse_symbol_key(const std::string& key) {
    long value = 0;
    const char* first = key.data();
    const char* last = key.data() + key.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        fail("payload: malformed symbol key \"" + key + "\"");
    }
    if (std::to_string(value) != key) {
        fail("payload: non-canonical symbol key \"" + key + "\"");
    }
    return value;
}

void check_symbol_cover(const json& payload, std::size_t n) {
    const long limit = static_cast<long>(n) - 1;
    for (long k = -limit; k <= limit; ++k) {
        if (!payload.contains(std::to_string(k))) {
            fail("payload: missing symbol key \"" + std::to_string(k) + "\"");
        }
    }
    if (payload.size() != 2 * n - 1) {
        for (const auto& [key, value] : payload.items()) {
            const long k = parse_symbol_key(key);
            if (k < -limit || k > limit) {
                fail("payload: unexpected symbol key \"" + key + "\"");
            }
        }
    }
}

Block read_block(const json& j, std::size_t d, const std::string& where) {
    if (!j.is_array() || j.size() != d) fail(where + ": expected a d x d array");
    std::vector<Complex> entries;
    entries.reserve(d * d);
    for (std::size_t r = 0; r < d; ++r) {
        const json& row = j[r];
        if (!row.is_array() || row.size() != d) fail(where + ": expected a d x d array");
        for (std::size_t c = 0; c < d; ++c) {
            entries.push_back(read_complex(row[c], where));
        }
    }
    return Block(d, std::move(entries));
}

MatrixFile parse_payload(const json& top, MatrixKind kind, std::size_t n, std::size_t d) {
    if (!top.contains("payload")) fail("missing field \"payload\"");
    const json& payload = top.at("payload");

    if (kind == MatrixKind::Dense) {
        if (!payload.is_array() || payload.size() != n) {
            fail("payload: expected an n x n array of blocks");
        }
        std::vector<Block> blocks;
        blocks.reserve(n * n);
        for (std::size_t i = 0; i < n; ++i) {
            const json& row = payload[i];
            if (!row.is_array() || row.size() != n) {
                fail("payload: expected an n x n array of blocks");
            }
            for (std::size_t j = 0; j < n; ++j) {
                std::ostringstream where;
                where << "payload[" << i << "][" << j << "]";
                blocks.push_back(read_block(row[j], d, where.str()));
            }
        }
        return MatrixFile(BlockGrid(n, d, std::move(blocks)));
    }

    if (!payload.is_object()) fail("payload: expected a symbol map");
    check_symbol_cover(payload, n);
    const long limit = static_cast<long>(n) - 1;

    if (kind == MatrixKind::BlockToeplitz) {
        bt::BlockToeplitz t(n, d);
        for (long k = -limit; k <= limit; ++k) {
            const std::string key = std::to_string(k);
            t.set_symbol(k, read_block(payload.at(key), d, "payload[\"" + key + "\"]"));
        }
        return MatrixFile(std::move(t));
    }

    DiagonalBlockToeplitz t(n, d);
    for (long k = -limit; k <= limit; ++k) {
        const std::string key = std::to_string(k);
        const json& j = payload.at(key);
        if (!j.is_array() || j.size() != d) {
            fail("payload[\"" + key + "\"]: expected a length-d array");
        }
        std::vector<Complex> diag(d);
        for (std::size_t p = 0; p < d; ++p) {
            diag[p] = read_complex(j[p], "payload[\"" + key + "\"]");
        }
        t.set_symbol(k, std::move(diag));
    }
    return MatrixFile(std::move(t));
}

ordered_json complex_to_json(const Complex& z) {
    return ordered_json::array({z.real(), z.imag()});
}

ordered_json block_to_json(const Block& b) {
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 0; r < b.dim(); ++r) {
        ordered_json row = ordered_json::array();
        for (std::size_t c = 0; c < b.dim(); ++c) row.push_back(complex_to_json(b(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

MatrixFile parse_matrix_file(std::string_view text) {
    json top;
    try {
        top = json::parse(text);
    } catch (const json::exception& e) {
        fail(e.what()); // parse errors carry the byte position
    }
    if (!top.is_object()) fail("top level: expected an object");
    for (const auto& [key, value] : top.items()) {
        if (key != "kind" && key != "n" && key != "d" && key != "payload") {
            fail("unexpected field \"" + key + "\"");
        }
    }
    if (!top.contains("kind") || !top.at("kind").is_string()) {
        fail("missing or non-string field \"kind\"");
    }
    const std::string kind_name = top.at("kind").get<std::string>();
    MatrixKind kind;
    if (kind_name == "dense") {
        kind = MatrixKind::Dense;
    } else if (kind_name == "block-toeplitz") {
        kind = MatrixKind::BlockToeplitz;
    } else if (kind_name == "diagonal-block-toeplitz") {
        kind = MatrixKind::DiagonalBlockToeplitz;
    } else {
        fail("unknown kind \"" + kind_name + "\"");
    }

    const std::size_t n = read_dim(top, "n");
    const std::size_t d = read_dim(top, "d");
    const std::size_t cap = kind == MatrixKind::Dense ? kDenseCap : kStructuredCap;
    if (n > cap || d > cap || n * d > cap) {
        fail("size limit exceeded: nd = " + std::to_string(n) + "*" + std::to_string(d) +
             " > " + std::to_string(cap) + " for kind " + kind_name);
    }
    try {
        return parse_payload(top, kind, n, d);
    } catch (const std::invalid_argument& e) {
        fail(e.what());
    }
}

MatrixFile load_matrix_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("cannot open file " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_matrix_file(buffer.str());
    } catch (const ParseError& e) {
        fail(path.string() + ": " + e.what());
    }
}

std::string serialize(const MatrixFile& file) {
    ordered_json top;
    top["kind"] = to_string(file.kind());
    top["n"] = file.n();
    top["d"] = file.d();

    const long limit = static_cast<long>(file.n()) - 1;
    switch (file.kind()) {
    case MatrixKind::Dense: {
        const BlockGrid& g = file.dense();
        ordered_json rows = ordered_json::array();
        for (std::size_t i = 0; i < g.n(); ++i) {
            ordered_json row = ordered_json::array();
            for (std::size_t j = 0; j < g.n(); ++j) row.push_back(block_to_json(g.block(i, j)));
            rows.push_back(std::move(row));
        }
        top["payload"] = std::move(rows);
        break;
    }
    case MatrixKind::BlockToeplitz: {
        ordered_json payload = ordered_json::object();
        for (long k = -limit; k <= limit; ++k) {
            payload[std::to_string(k)] = block_to_json(file.toeplitz().symbol(k));
        }
        top["payload"] = std::move(payload);
        break;
    }
    case MatrixKind::DiagonalBlockToeplitz: {
        ordered_json payload = ordered_json::object();
        for (long k = -limit; k <= limit; ++k) {
            ordered_json diag = ordered_json::array();
            for (const Complex& z : file.diagonal().symbol(k)) {
                diag.push_back(complex_to_json(z));
            }
            payload[std::to_string(k)] = std::move(diag);
        }
        top["payload"] = std::move(payload);
        break;
    }
    }
    return top.dump(2) + "\n";
}

void save_matrix_file(const std::filesystem::path& path, const MatrixFile& file) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail("cannot write file " + path.string());
    out << serialize(file);
    if (!out) fail("write failed for " + path.string());
}

} // namespace bt
