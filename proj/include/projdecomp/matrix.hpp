#ifndef PROJDECOMP_MATRIX_HPP
#define PROJDECOMP_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace projdecomp {

using Index = std::size_t;

struct Triplet {
    Index row;
    Index col;
    double value;

    friend bool operator==(const Triplet&, const Triplet&) = default;
};

/// Strictly positive row or column scale factors (α, β, p, q).
///
/// Positivity is not enforced on construction because intermediate results
/// (reciprocals, ratios) are built through this type as well; functions that
/// need positivity check `strictly_positive()`.
class ScalingVector {
public:
    ScalingVector() = default;
    explicit ScalingVector(std::vector<double> values) : values_(std::move(values)) {}
    ScalingVector(std::initializer_list<double> values) : values_(values) {}

    static ScalingVector constant(std::size_t size, double value) {
        return ScalingVector(std::vector<double>(size, value));
    }

    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    double& operator[](std::size_t i) { return values_[i]; }
    auto begin() const noexcept { return values_.begin(); }
    auto end() const noexcept { return values_.end(); }
    std::span<const double> values() const noexcept { return values_; }

    bool strictly_positive() const noexcept;

    friend bool operator==(const ScalingVector&, const ScalingVector&) = default;

private:
    std::vector<double> values_;
};

/// Real m×n matrix with dense row-major or sparse coordinate storage.
///
/// Instances are immutable. Every traversal visits stored entries in
/// row-major order, and all reductions in this library accumulate
/// left-to-right in that order. Adding an exact zero never changes a
/// floating-point sum, so dense and sparse storage of the same values give
/// bit-identical reductions.
class Matrix {
public:
    enum class Storage { dense, sparse };

    /// Row-major values; size must be rows·cols.
    static Matrix dense(Index rows, Index cols, std::vector<double> values);
    static Matrix dense(std::initializer_list<std::initializer_list<double>> rows);
    /// Explicit zeros are dropped; duplicate or out-of-range coordinates throw.
    static Matrix sparse(Index rows, Index cols, std::vector<Triplet> entries);
    static Matrix filled(Index rows, Index cols, double value);
    static Matrix ones(Index rows, Index cols) { return filled(rows, cols, 1.0); }
    static Matrix identity(Index n);

    Index rows() const noexcept { return rows_; }
    Index cols() const noexcept { return cols_; }
    Storage storage() const noexcept { return storage_; }
    bool is_sparse() const noexcept { return storage_ == Storage::sparse; }

    double operator()(Index i, Index j) const;

    /// Entries held in storage: rows·cols for dense, nonzeros for sparse.
    std::size_t stored_count() const noexcept {
        return is_sparse() ? entries_.size() : values_.size();
    }

    /// Calls f(i, j, value) for every stored entry in row-major order.
    template <class F>
    void for_each_stored(F&& f) const {
        if (is_sparse()) {
            for (const Triplet& t : entries_) {
                f(t.row, t.col, t.value);
            }
        } else {
            std::size_t k = 0;
            for (Index i = 0; i < rows_; ++i) {
                for (Index j = 0; j < cols_; ++j, ++k) {
                    f(i, j, values_[k]);
                }
            }
        }
    }

    /// Same storage kind, values replaced by f(i, j, value). Sparse results
    /// drop entries that map to zero.
    template <class F>
    Matrix map_stored(F&& f) const {
        Matrix out;
        out.rows_ = rows_;
        out.cols_ = cols_;
        out.storage_ = storage_;
        if (is_sparse()) {
            out.entries_.reserve(entries_.size());
            for (const Triplet& t : entries_) {
                const double v = f(t.row, t.col, t.value);
                if (v != 0.0) {
                    out.entries_.push_back({t.row, t.col, v});
                }
            }
        } else {
            out.values_.resize(values_.size());
            std::size_t k = 0;
            for (Index i = 0; i < rows_; ++i) {
                for (Index j = 0; j < cols_; ++j, ++k) {
                    out.values_[k] = f(i, j, values_[k]);
                }
            }
        }
        return out;
    }

    Matrix to_dense() const;
    Matrix to_sparse() const;

    /// Nonzero entries in row-major order, regardless of storage.
    std::vector<Triplet> nonzeros() const;

    /// Row-major values of the full matrix (zeros included).
    std::vector<double> dense_values() const;

    /// Exact value equality; storage kind is ignored.
    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    Matrix() = default;

    Index rows_ = 0;
    Index cols_ = 0;
    Storage storage_ = Storage::dense;
    std::vector<double> values_;
    std::vector<Triplet> entries_;
};

/// Root-mean-square of all m·n entries, σ = |A|.
double rms(const Matrix& m);

/// |M_i*| for every row.
ScalingVector rms_rows(const Matrix& m);

/// |M_*j| for every column.
ScalingVector rms_cols(const Matrix& m);

/// D_s·M. Throws DimensionError if s.size() != rows, DomainError on a zero factor.
Matrix scale_rows(const Matrix& m, const ScalingVector& s);

/// M·D_s. Throws DimensionError if s.size() != cols, DomainError on a zero factor.
Matrix scale_cols(const Matrix& m, const ScalingVector& s);

/// Elementwise power A^{∘p}, p > 0. Integer p keeps the sign of odd powers;
/// a negative entry with fractional p is a DomainError.
Matrix hadamard_power(const Matrix& m, double p);

Matrix transpose(const Matrix& m);

/// max_ij |a_ij − b_ij|. Throws DimensionError on a shape mismatch.
double max_abs_difference(const Matrix& a, const Matrix& b);

/// Elementwise reciprocal of a scaling vector.
ScalingVector reciprocal(const ScalingVector& v);

/// Root-mean-square of a vector.
double rms(std::span<const double> v);

} // namespace projdecomp

#endif
