#include "projdecomp/baselines.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "projdecomp/errors.hpp"
#include "projdecomp/matrix_io.hpp"

namespace projdecomp {

ZResult z_transform(const Matrix& a) {
    const Index m = a.rows();
    const Index n = a.cols();
    if (m < 2) {
        throw DimensionError("z-transform needs at least two rows");
    }
    const std::vector<double> v = a.dense_values();
    const double count = static_cast<double>(m);

    ZParams params{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
    for (Index i = 0; i < m; ++i)
        for (Index j = 0; j < n; ++j) params.mu[j] += v[i * n + j];
    for (double& mu : params.mu) mu /= count;

    for (Index i = 0; i < m; ++i)
        for (Index j = 0; j < n; ++j) {
            const double d = v[i * n + j] - params.mu[j];
            params.sd[j] += d * d;
        }
    for (Index j = 0; j < n; ++j) {
        params.sd[j] = std::sqrt(params.sd[j] / count);
        if (!(params.sd[j] > 0.0)) {
            throw DegenerateLineError("column " + std::to_string(j + 1) + " is constant; cannot z-transform", j);
        }
    }

    std::vector<double> z(v.size());
    for (Index i = 0; i < m; ++i)
        for (Index j = 0; j < n; ++j) z[i * n + j] = (v[i * n + j] - params.mu[j]) / params.sd[j];
    return {Matrix::dense(m, n, std::move(z)), std::move(params)};
}

ZResult log_z_transform(const Matrix& a) {
    std::vector<double> v = a.dense_values();
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (!(v[k] > 0.0)) {
            throw DomainError("entry at row " + std::to_string(k / a.cols() + 1) + ", column " +
                              std::to_string(k % a.cols() + 1) + " (" + format_double(v[k]) +
                              ") is not strictly positive; mixed-sign or zero data cannot be log-transformed");
        }
        v[k] = std::log(v[k]);
    }
    return z_transform(Matrix::dense(a.rows(), a.cols(), std::move(v)));
}

namespace {

Matrix z_rows(const Matrix& a) {
    try {
        return transpose(z_transform(transpose(a)).matrix);
    } catch (const DegenerateLineError& e) {
        throw DegenerateLineError("row " + std::to_string(e.index() + 1) + " is constant; cannot z-transform",
                                  e.index());
    }
}

} // namespace

Matrix double_z(const Matrix& a, ZOrder order) {
    if (a.rows() < 2 || a.cols() < 2) {
        throw DimensionError("double z-transform needs at least two rows and two columns");
    }
    if (order == ZOrder::cols_then_rows) {
        return z_rows(z_transform(a).matrix);
    }
    return z_transform(z_rows(a)).matrix;
}

PolarResult to_polar(const Matrix& points) {
    if (points.cols() != 2) {
        throw DimensionError("polar conversion needs exactly two columns, got " + std::to_string(points.cols()));
    }
    const std::vector<double> v = points.dense_values();
    std::vector<double> out(v.size());
    PolarResult result{Matrix::ones(1, 1), {}};
    for (Index i = 0; i < points.rows(); ++i) {
        const double x = v[2 * i];
        const double y = v[2 * i + 1];
        if (x == 0.0 && y == 0.0) {
            result.undefined_rows.push_back(i);
            out[2 * i] = 0.0;
            out[2 * i + 1] = 0.0;
            continue;
        }
        double angle = std::atan2(y, x);
        if (angle == -std::numbers::pi) {
            angle = std::numbers::pi;
        }
        out[2 * i] = angle;
        out[2 * i + 1] = std::sqrt((x * x + y * y) / 2.0);
    }
    result.coords = Matrix::dense(points.rows(), 2, std::move(out));
    return result;
}

} // namespace projdecomp
