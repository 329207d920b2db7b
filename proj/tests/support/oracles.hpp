// Test-only reference computations. Nothing here calls into the solver or
// support analysis; each function recomputes its answer from definitions.
#ifndef PROJDECOMP_TESTS_ORACLES_HPP
#define PROJDECOMP_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "projdecomp/matrix.hpp"
#include "projdecomp/random.hpp"

namespace oracle {

using projdecomp::Index;
using projdecomp::Matrix;

/// For each nonzero of a square pattern, whether it lies on some permuted
/// diagonal made entirely of nonzeros, by enumerating all n! permutations.
struct BruteSupport {
    bool has_support = false;
    /// Row-major first nonzero on no nonzero permuted diagonal.
    std::optional<std::pair<Index, Index>> first_uncovered;
};

inline BruteSupport brute_force_support(const Matrix& pattern) {
    const Index n = pattern.rows();
    const std::vector<double> v = pattern.dense_values();
    std::vector<bool> covered(n * n, false);
    std::vector<Index> perm(n);
    std::iota(perm.begin(), perm.end(), Index{0});
    BruteSupport out;
    do {
        bool nonzero = true;
        for (Index i = 0; i < n && nonzero; ++i) nonzero = v[i * n + perm[i]] != 0.0;
        if (nonzero) {
            out.has_support = true;
            for (Index i = 0; i < n; ++i) covered[i * n + perm[i]] = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (out.has_support) {
        for (Index k = 0; k < n * n; ++k) {
            if (v[k] != 0.0 && !covered[k]) {
                out.first_uncovered = std::make_pair(k / n, k % n);
                break;
            }
        }
    }
    return out;
}

/// Dense m×n with entries uniform in [lo, hi); negative with probability
/// `negative_share`.
inline Matrix random_matrix(Index m, Index n, std::uint64_t seed, double lo = 0.1, double hi = 10.0,
                            double negative_share = 0.0) {
    projdecomp::Rng rng(seed);
    std::vector<double> v(m * n);
    for (double& x : v) {
        x = rng.uniform(lo, hi);
        if (negative_share > 0.0 && rng.uniform() < negative_share) x = -x;
    }
    return Matrix::dense(m, n, std::move(v));
}

inline projdecomp::ScalingVector random_positive(Index size, std::uint64_t seed, double lo = 0.2, double hi = 5.0) {
    projdecomp::Rng rng(seed);
    std::vector<double> v(size);
    for (double& x : v) x = rng.uniform(lo, hi);
    return projdecomp::ScalingVector(std::move(v));
}

/// D_q·A·D_p by explicit triple loop over the dense values.
inline Matrix scale_both(const Matrix& a, const projdecomp::ScalingVector& q, const projdecomp::ScalingVector& p) {
    std::vector<double> v = a.dense_values();
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j) v[i * a.cols() + j] = q[i] * v[i * a.cols() + j] * p[j];
    return Matrix::dense(a.rows(), a.cols(), std::move(v));
}

/// RMS of each row / column straight from the definition.
inline std::vector<double> row_rms(const Matrix& a) {
    std::vector<double> out(a.rows());
    for (Index i = 0; i < a.rows(); ++i) {
        double s = 0.0;
        for (Index j = 0; j < a.cols(); ++j) s += a(i, j) * a(i, j);
        out[i] = std::sqrt(s / static_cast<double>(a.cols()));
    }
    return out;
}

inline std::vector<double> col_rms(const Matrix& a) {
    std::vector<double> out(a.cols());
    for (Index j = 0; j < a.cols(); ++j) {
        double s = 0.0;
        for (Index i = 0; i < a.rows(); ++i) s += a(i, j) * a(i, j);
        out[j] = std::sqrt(s / static_cast<double>(a.rows()));
    }
    return out;
}

/// Closed-form decomposition of a positive rank-1 matrix u·vᵀ: W = 1,
/// σ = |u|·|v| (RMS norms), α = u/|u|, β = v/|v|.
struct RankOne {
    double sigma;
    std::vector<double> alpha;
    std::vector<double> beta;
};

inline RankOne rank_one(const std::vector<double>& u, const std::vector<double>& v) {
    auto vec_rms = [](const std::vector<double>& x) {
        double s = 0.0;
        for (double e : x) s += e * e;
        return std::sqrt(s / static_cast<double>(x.size()));
    };
    const double ru = vec_rms(u);
    const double rv = vec_rms(v);
    RankOne out{ru * rv, u, v};
    for (double& e : out.alpha) e /= ru;
    for (double& e : out.beta) e /= rv;
    return out;
}

} // namespace oracle

#endif
