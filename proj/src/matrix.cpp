#include "projdecomp/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "projdecomp/errors.hpp"

namespace projdecomp {

namespace {

void check_shape(Index rows, Index cols) {
    if (rows == 0 || cols == 0) {
        throw DimensionError("matrix must have at least one row and one column");
    }
}

void check_finite(double v, Index i, Index j) {
    if (!std::isfinite(v)) {
        throw DomainError("non-finite value at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
    }
}

bool row_major_less(const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
}

} // namespace

bool ScalingVector::strictly_positive() const noexcept {
    return std::all_of(values_.begin(), values_.end(), [](double v) { return v > 0.0; });
}

Matrix Matrix::dense(Index rows, Index cols, std::vector<double> values) {
    check_shape(rows, cols);
    if (values.size() != rows * cols) {
        throw DimensionError("dense matrix expects " + std::to_string(rows * cols) + " values, got " +
                             std::to_string(values.size()));
    }
    for (std::size_t k = 0; k < values.size(); ++k) {
        check_finite(values[k], k / cols, k % cols);
    }
    Matrix m;
    m.rows_ = rows;
    m.cols_ = cols;
    m.storage_ = Storage::dense;
    m.values_ = std::move(values);
    return m;
}

Matrix Matrix::dense(std::initializer_list<std::initializer_list<double>> rows) {
    const Index m = rows.size();
    const Index n = m == 0 ? 0 : rows.begin()->size();
    std::vector<double> values;
    values.reserve(m * n);
    for (const auto& row : rows) {
        if (row.size() != n) {
            throw DimensionError("ragged initializer list");
        }
        values.insert(values.end(), row.begin(), row.end());
    }
    return dense(m, n, std::move(values));
}

Matrix Matrix::sparse(Index rows, Index cols, std::vector<Triplet> entries) {
    check_shape(rows, cols);
    std::erase_if(entries, [](const Triplet& t) { return t.value == 0.0; });
    for (const Triplet& t : entries) {
        if (t.row >= rows || t.col >= cols) {
            throw DimensionError("entry (" + std::to_string(t.row) + ", " + std::to_string(t.col) +
                                 ") outside " + std::to_string(rows) + "x" + std::to_string(cols));
        }
        check_finite(t.value, t.row, t.col);
    }
    std::sort(entries.begin(), entries.end(), row_major_less);
    for (std::size_t k = 1; k < entries.size(); ++k) {
        if (entries[k].row == entries[k - 1].row && entries[k].col == entries[k - 1].col) {
            throw DimensionError("duplicate entry (" + std::to_string(entries[k].row) + ", " +
                                 std::to_string(entries[k].col) + ")");
        }
    }
    Matrix m;
    m.rows_ = rows;
    m.cols_ = cols;
    m.storage_ = Storage::sparse;
    m.entries_ = std::move(entries);
    return m;
}

Matrix Matrix::filled(Index rows, Index cols, double value) {
    check_shape(rows, cols);
    return dense(rows, cols, std::vector<double>(rows * cols, value));
}

Matrix Matrix::identity(Index n) {
    std::vector<Triplet> entries;
    entries.reserve(n);
    for (Index i = 0; i < n; ++i) {
        entries.push_back({i, i, 1.0});
    }
    return sparse(n, n, std::move(entries));
}

double Matrix::operator()(Index i, Index j) const {
    if (i >= rows_ || j >= cols_) {
        throw DimensionError("index (" + std::to_string(i) + ", " + std::to_string(j) + ") out of range");
    }
    if (!is_sparse()) {
        return values_[i * cols_ + j];
    }
    const Triplet key{i, j, 0.0};
    auto it = std::lower_bound(entries_.begin(), entries_.end(), key, row_major_less);
    return (it != entries_.end() && it->row == i && it->col == j) ? it->value : 0.0;
}

Matrix Matrix::to_dense() const {
    if (!is_sparse()) {
        return *this;
    }
    return dense(rows_, cols_, dense_values());
}

Matrix Matrix::to_sparse() const {
    if (is_sparse()) {
        return *this;
    }
    return sparse(rows_, cols_, nonzeros());
}

std::vector<Triplet> Matrix::nonzeros() const {
    std::vector<Triplet> out;
    for_each_stored([&](Index i, Index j, double v) {
        if (v != 0.0) {
            out.push_back({i, j, v});
        }
    });
    return out;
}

std::vector<double> Matrix::dense_values() const {
    if (!is_sparse()) {
        return values_;
    }
    std::vector<double> out(rows_ * cols_, 0.0);
    for (const Triplet& t : entries_) {
        out[t.row * cols_ + t.col] = t.value;
    }
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        return false;
    }
    if (a.is_sparse() && b.is_sparse()) {
        return a.entries_ == b.entries_;
    }
    return a.dense_values() == b.dense_values();
}

double rms(const Matrix& m) {
    double total = 0.0;
    m.for_each_stored([&](Index, Index, double v) { total += v * v; });
    return std::sqrt(total / (static_cast<double>(m.rows()) * static_cast<double>(m.cols())));
}

ScalingVector rms_rows(const Matrix& m) {
    std::vector<double> sums(m.rows(), 0.0);
    m.for_each_stored([&](Index i, Index, double v) { sums[i] += v * v; });
    const double n = static_cast<double>(m.cols());
    for (double& s : sums) {
        s = std::sqrt(s / n);
    }
    return ScalingVector(std::move(sums));
}

ScalingVector rms_cols(const Matrix& m) {
    std::vector<double> sums(m.cols(), 0.0);
    m.for_each_stored([&](Index, Index j, double v) { sums[j] += v * v; });
    const double rows = static_cast<double>(m.rows());
    for (double& s : sums) {
        s = std::sqrt(s / rows);
    }
    return ScalingVector(std::move(sums));
}

namespace {

void check_factors(const ScalingVector& s, Index expected, const char* what) {
    if (s.size() != expected) {
        throw DimensionError(std::string(what) + " scaling expects " + std::to_string(expected) +
                             " factors, got " + std::to_string(s.size()));
    }
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (s[k] == 0.0 || !std::isfinite(s[k])) {
            throw DomainError(std::string(what) + " scaling factor " + std::to_string(k) +
                              " must be finite and nonzero");
        }
    }
}

} // namespace

Matrix scale_rows(const Matrix& m, const ScalingVector& s) {
    check_factors(s, m.rows(), "row");
    return m.map_stored([&](Index i, Index, double v) { return s[i] * v; });
}

Matrix scale_cols(const Matrix& m, const ScalingVector& s) {
    check_factors(s, m.cols(), "column");
    return m.map_stored([&](Index, Index j, double v) { return v * s[j]; });
}

Matrix hadamard_power(const Matrix& m, double p) {
    if (!(p > 0.0) || !std::isfinite(p)) {
        throw DomainError("Hadamard power requires a finite positive exponent");
    }
    const bool integral = std::floor(p) == p;
    if (p == 2.0) {
        return m.map_stored([](Index, Index, double v) { return v * v; });
    }
    return m.map_stored([&](Index i, Index j, double v) {
        if (v < 0.0 && !integral) {
            throw DomainError("negative entry at (" + std::to_string(i) + ", " + std::to_string(j) +
                              ") with fractional exponent");
        }
        return std::pow(v, p);
    });
}

Matrix transpose(const Matrix& m) {
    if (m.is_sparse()) {
        std::vector<Triplet> entries;
        entries.reserve(m.stored_count());
        m.for_each_stored([&](Index i, Index j, double v) { entries.push_back({j, i, v}); });
        return Matrix::sparse(m.cols(), m.rows(), std::move(entries));
    }
    std::vector<double> values(m.rows() * m.cols());
    m.for_each_stored([&](Index i, Index j, double v) { values[j * m.rows() + i] = v; });
    return Matrix::dense(m.cols(), m.rows(), std::move(values));
}

double max_abs_difference(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("shape mismatch: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                             " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
    const std::vector<double> x = a.dense_values();
    const std::vector<double> y = b.dense_values();
    double worst = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        worst = std::max(worst, std::abs(x[k] - y[k]));
    }
    return worst;
}

ScalingVector reciprocal(const ScalingVector& v) {
    std::vector<double> out(v.begin(), v.end());
    for (double& x : out) {
        x = 1.0 / x;
    }
    return ScalingVector(std::move(out));
}

double rms(std::span<const double> v) {
    if (v.empty()) {
        return 0.0;
    }
    double total = 0.0;
    for (double x : v) {
        total += x * x;
    }
    return std::sqrt(total / static_cast<double>(v.size()));
}

} // namespace projdecomp
