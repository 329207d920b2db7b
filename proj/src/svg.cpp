#include "projdecomp/svg.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <string>

#include "projdecomp/errors.hpp"
#include "projdecomp/matrix_io.hpp"

namespace projdecomp {

namespace {

constexpr double canvas = 480.0;
constexpr double margin = 24.0;

std::string escape(std::string_view text) {
    std::string out;
    for (char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        default: out += c;
        }
    }
    return out;
}

} // namespace

void write_svg_scatter(std::ostream& out, const Matrix& points, std::string_view title) {
    if (points.cols() != 2) {
        throw DimensionError("scatter plot needs exactly two columns");
    }
    const std::vector<double> v = points.dense_values();
    double x_lo = v[0], x_hi = v[0], y_lo = v[1], y_hi = v[1];
    for (std::size_t k = 0; k < v.size(); k += 2) {
        x_lo = std::min(x_lo, v[k]);
        x_hi = std::max(x_hi, v[k]);
        y_lo = std::min(y_lo, v[k + 1]);
        y_hi = std::max(y_hi, v[k + 1]);
    }
    // Equal scaling on both axes so angles read true.
    const double span = std::max({x_hi - x_lo, y_hi - y_lo, 1e-300});
    const double scale = (canvas - 2.0 * margin) / span;
    auto px = [&](double x) { return margin + (x - x_lo) * scale; };
    auto py = [&](double y) { return canvas - margin - (y - y_lo) * scale; };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << canvas << "\" height=\"" << canvas
        << "\" viewBox=\"0 0 " << canvas << ' ' << canvas << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!title.empty()) {
        out << "<title>" << escape(title) << "</title>\n";
    }
    if (x_lo <= 0.0 && 0.0 <= x_hi) {
        out << "<line x1=\"" << px(0.0) << "\" y1=\"0\" x2=\"" << px(0.0) << "\" y2=\"" << canvas
            << "\" stroke=\"#bbb\"/>\n";
    }
    if (y_lo <= 0.0 && 0.0 <= y_hi) {
        out << "<line x1=\"0\" y1=\"" << py(0.0) << "\" x2=\"" << canvas << "\" y2=\"" << py(0.0)
            << "\" stroke=\"#bbb\"/>\n";
    }
    out << "<g fill=\"#1f77b4\">\n";
    for (std::size_t k = 0; k < v.size(); k += 2) {
        out << "<circle cx=\"" << format_double(px(v[k])) << "\" cy=\"" << format_double(py(v[k + 1]))
            << "\" r=\"1.5\"/>\n";
    }
    out << "</g>\n</svg>\n";
}

void write_svg_scatter(const std::filesystem::path& path, const Matrix& points, std::string_view title) {
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot write '" + path.string() + "'");
    }
    write_svg_scatter(out, points, title);
}

} // namespace projdecomp
