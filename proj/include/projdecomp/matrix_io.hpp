#ifndef PROJDECOMP_MATRIX_IO_HPP
#define PROJDECOMP_MATRIX_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "projdecomp/matrix.hpp"

namespace projdecomp {

enum class MatrixFormat { csv, matrix_market };

std::optional<MatrixFormat> parse_matrix_format(std::string_view name);
/// ".mtx" and ".mm" are Matrix Market, everything else CSV.
MatrixFormat format_from_extension(const std::filesystem::path& path);

/// Shortest decimal string that parses back to exactly `v`.
std::string format_double(double v);

/// CSV: comma-separated decimal numbers with a uniform column count. Lines
/// starting with '#' and blank lines are skipped. If the first data line
/// does not parse as numbers it is taken as a header. Always dense.
///
/// Matrix Market: `%%MatrixMarket matrix coordinate real general` (sparse
/// result) or `... array real general` (dense result, column-major values).
/// `integer` is accepted in place of `real`.
///
/// Errors are ParseError carrying the 1-based line number.
Matrix read_matrix(std::istream& in, MatrixFormat format);
Matrix read_matrix(const std::filesystem::path& path, MatrixFormat format);
Matrix read_matrix(const std::filesystem::path& path);

/// CSV is written dense without a header; `comment` lines, if given, are
/// prefixed with "# ". Matrix Market uses coordinate for sparse matrices and
/// array for dense ones.
void write_matrix(std::ostream& out, const Matrix& m, MatrixFormat format, std::string_view comment = {},
                  std::string_view header = {});
void write_matrix(const std::filesystem::path& path, const Matrix& m, MatrixFormat format,
                  std::string_view comment = {}, std::string_view header = {});

} // namespace projdecomp

#endif
