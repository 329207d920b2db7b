#include "projdecomp/matrix_io.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "projdecomp/errors.hpp"

namespace projdecomp {

std::optional<MatrixFormat> parse_matrix_format(std::string_view name) {
    if (name == "csv") return MatrixFormat::csv;
    if (name == "matrixmarket" || name == "mtx" || name == "mm") return MatrixFormat::matrix_market;
    return std::nullopt;
}

MatrixFormat format_from_extension(const std::filesystem::path& path) {
    std::string ext = path.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
    return ext == ".mtx" || ext == ".mm" ? MatrixFormat::matrix_market : MatrixFormat::csv;
}

std::string format_double(double v) {
    std::array<char, 32> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), ptr);
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::optional<double> parse_number(std::string_view s) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    if (s.empty()) return std::nullopt;
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
    return v;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = line.find(sep, start);
        out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

std::optional<Index> parse_index(std::string_view s) {
    Index v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

Matrix read_csv(std::istream& in) {
    std::vector<double> values;
    Index cols = 0;
    Index rows = 0;
    bool seen_first = false;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;

        const auto cells = split(line, ',');
        std::vector<double> row;
        row.reserve(cells.size());
        std::optional<std::size_t> bad_cell;
        for (std::size_t k = 0; k < cells.size(); ++k) {
            auto v = parse_number(cells[k]);
            if (!v) {
                bad_cell = k;
                break;
            }
            row.push_back(*v);
        }
        if (bad_cell) {
            if (!seen_first) {
                seen_first = true;  // header
                continue;
            }
            throw ParseError("non-numeric cell " + std::to_string(*bad_cell + 1) + ": '" +
                                 std::string(trim(cells[*bad_cell])) + "'",
                             line_no);
        }
        seen_first = true;
        if (rows == 0) {
            cols = row.size();
        } else if (row.size() != cols) {
            throw ParseError("expected " + std::to_string(cols) + " columns, found " + std::to_string(row.size()),
                             line_no);
        }
        values.insert(values.end(), row.begin(), row.end());
        ++rows;
    }
    if (rows == 0) {
        throw ParseError("no numeric rows in CSV input", 0);
    }
    try {
        return Matrix::dense(rows, cols, std::move(values));
    } catch (const Error& e) {
        throw ParseError(e.what(), 0);
    }
}

Matrix read_matrix_market(std::istream& in) {
    std::string raw;
    std::size_t line_no = 0;
    if (!std::getline(in, raw)) {
        throw ParseError("empty Matrix Market input", 1);
    }
    ++line_no;
    auto banner = tokens(raw);
    std::vector<std::string> lower;
    for (auto t : banner) {
        std::string s(t);
        std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
        lower.push_back(std::move(s));
    }
    if (lower.size() != 5 || lower[0] != "%%matrixmarket" || lower[1] != "matrix") {
        throw ParseError("malformed Matrix Market header", line_no);
    }
    const bool coordinate = lower[2] == "coordinate";
    if (!coordinate && lower[2] != "array") {
        throw ParseError("unsupported Matrix Market layout '" + lower[2] + "'", line_no);
    }
    if (lower[3] != "real" && lower[3] != "integer" && lower[3] != "double") {
        throw ParseError("unsupported Matrix Market field '" + lower[3] + "'", line_no);
    }
    if (lower[4] != "general") {
        throw ParseError("unsupported Matrix Market symmetry '" + lower[4] + "'", line_no);
    }

    auto next_data_line = [&](std::vector<std::string_view>& out) {
        while (std::getline(in, raw)) {
            ++line_no;
            const std::string_view line = trim(raw);
            if (line.empty() || line.front() == '%') continue;
            out = tokens(raw);
            return true;
        }
        return false;
    };

    std::vector<std::string_view> tok;
    if (!next_data_line(tok)) {
        throw ParseError("missing size line", line_no);
    }
    if (tok.size() != (coordinate ? 3u : 2u)) {
        throw ParseError("malformed size line", line_no);
    }
    const auto rows = parse_index(tok[0]);
    const auto cols = parse_index(tok[1]);
    const auto count = coordinate ? parse_index(tok[2]) : std::optional<Index>(0);
    if (!rows || !cols || !count || *rows == 0 || *cols == 0) {
        throw ParseError("malformed size line", line_no);
    }

    if (coordinate) {
        std::vector<Triplet> entries;
        entries.reserve(*count);
        for (Index k = 0; k < *count; ++k) {
            if (!next_data_line(tok)) {
                throw ParseError("expected " + std::to_string(*count) + " entries, found " + std::to_string(k),
                                 line_no);
            }
            if (tok.size() != 3) throw ParseError("expected 'row col value'", line_no);
            const auto i = parse_index(tok[0]);
            const auto j = parse_index(tok[1]);
            const auto v = parse_number(tok[2]);
            if (!i || !j || !v) throw ParseError("malformed entry", line_no);
            if (*i < 1 || *i > *rows || *j < 1 || *j > *cols) throw ParseError("index out of range", line_no);
            entries.push_back({*i - 1, *j - 1, *v});
        }
        if (next_data_line(tok)) throw ParseError("more entries than declared", line_no);
        try {
            return Matrix::sparse(*rows, *cols, std::move(entries));
        } catch (const Error& e) {
            throw ParseError(e.what(), 0);
        }
    }

    std::vector<double> values(*rows * *cols);
    for (Index k = 0; k < values.size(); ++k) {
        if (!next_data_line(tok)) {
            throw ParseError("expected " + std::to_string(values.size()) + " values, found " + std::to_string(k),
                             line_no);
        }
        if (tok.size() != 1) throw ParseError("expected one value per line", line_no);
        const auto v = parse_number(tok[0]);
        if (!v) throw ParseError("malformed value", line_no);
        // column-major
        values[(k % *rows) * *cols + k / *rows] = *v;
    }
    if (next_data_line(tok)) throw ParseError("more values than declared", line_no);
    try {
        return Matrix::dense(*rows, *cols, std::move(values));
    } catch (const Error& e) {
        throw ParseError(e.what(), 0);
    }
}

} // namespace

Matrix read_matrix(std::istream& in, MatrixFormat format) {
    return format == MatrixFormat::csv ? read_csv(in) : read_matrix_market(in);
}

Matrix read_matrix(const std::filesystem::path& path, MatrixFormat format) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open '" + path.string() + "'", 0);
    }
    return read_matrix(in, format);
}

Matrix read_matrix(const std::filesystem::path& path) { return read_matrix(path, format_from_extension(path)); }

void write_matrix(std::ostream& out, const Matrix& m, MatrixFormat format, std::string_view comment,
                  std::string_view header) {
    if (format == MatrixFormat::csv) {
        if (!comment.empty()) {
            for (auto line : split(comment, '\n')) out << "# " << line << '\n';
        }
        if (!header.empty()) out << header << '\n';
        const std::vector<double> v = m.dense_values();
        for (Index i = 0; i < m.rows(); ++i) {
            for (Index j = 0; j < m.cols(); ++j) {
                if (j > 0) out << ',';
                out << format_double(v[i * m.cols() + j]);
            }
            out << '\n';
        }
        return;
    }

    out << "%%MatrixMarket matrix " << (m.is_sparse() ? "coordinate" : "array") << " real general\n";
    if (!comment.empty()) {
        for (auto line : split(comment, '\n')) out << "% " << line << '\n';
    }
    if (m.is_sparse()) {
        out << m.rows() << ' ' << m.cols() << ' ' << m.stored_count() << '\n';
        m.for_each_stored([&](Index i, Index j, double v) {
            out << i + 1 << ' ' << j + 1 << ' ' << format_double(v) << '\n';
        });
    } else {
        out << m.rows() << ' ' << m.cols() << '\n';
        const std::vector<double> v = m.dense_values();
        for (Index j = 0; j < m.cols(); ++j)
            for (Index i = 0; i < m.rows(); ++i) out << format_double(v[i * m.cols() + j]) << '\n';
    }
}

void write_matrix(const std::filesystem::path& path, const Matrix& m, MatrixFormat format, std::string_view comment,
                  std::string_view header) {
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot write '" + path.string() + "'");
    }
    write_matrix(out, m, format, comment, header);
    if (!out) {
        throw Error("write to '" + path.string() + "' failed");
    }
}

} // namespace projdecomp
