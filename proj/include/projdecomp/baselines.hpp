#ifndef PROJDECOMP_BASELINES_HPP
#define PROJDECOMP_BASELINES_HPP

#include <vector>

#include "projdecomp/matrix.hpp"

namespace projdecomp {

/// Column means and population standard deviations used by a z-transform.
struct ZParams {
    std::vector<double> mu;
    std::vector<double> sd;
};

struct ZResult {
    Matrix matrix;
    ZParams params;
};

/// Standardizes every column: z_ij = (a_ij − μ_j) / σ_j.
///
/// σ_j is the population standard deviation (divisor m), so each output
/// column has mean 0 and population SD 1. Requires m ≥ 2; a constant
/// column throws DegenerateLineError carrying its index.
ZResult z_transform(const Matrix& a);

/// z_transform of the elementwise natural log. Any entry ≤ 0 throws
/// DomainError naming the first offender in row-major order.
ZResult log_z_transform(const Matrix& a);

enum class ZOrder { cols_then_rows, rows_then_cols };

/// Two z-transforms in sequence: down the columns then across the rows, or
/// the other way round.
Matrix double_z(const Matrix& a, ZOrder order);

struct PolarResult {
    /// N×2 with columns (angle, radius); angle in (−π, π], radius = row RMS.
    Matrix coords;
    /// Rows equal to (0, 0), emitted as angle 0, radius 0.
    std::vector<Index> undefined_rows;
};

/// Polar form of 2-column point data. Throws DimensionError unless n = 2.
PolarResult to_polar(const Matrix& points);

} // namespace projdecomp

#endif
