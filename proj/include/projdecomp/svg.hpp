#ifndef PROJDECOMP_SVG_HPP
#define PROJDECOMP_SVG_HPP

#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "projdecomp/matrix.hpp"

namespace projdecomp {

/// Plain scatter plot of a 2-column point set: one circle per row, axes
/// through the origin when it is in view. Throws DimensionError unless n = 2.
void write_svg_scatter(std::ostream& out, const Matrix& points, std::string_view title = {});
void write_svg_scatter(const std::filesystem::path& path, const Matrix& points, std::string_view title = {});

} // namespace projdecomp

#endif
