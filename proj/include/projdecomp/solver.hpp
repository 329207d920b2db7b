#ifndef PROJDECOMP_SOLVER_HPP
#define PROJDECOMP_SOLVER_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "projdecomp/matrix.hpp"

namespace projdecomp {

/// How the free constant g in (g·α, β/g) is chosen.
enum class GaugePolicy {
    balanced,                 ///< RMS(g·α) = RMS(β/g)
    unit_concat_if_feasible,  ///< RMS of the concatenation [g·α, β/g] is 1, when solvable
    none,
};

enum class SolverStatus { converged, max_iterations, stalled, infeasible_zero_line };

std::string_view to_string(GaugePolicy policy);
std::string_view to_string(SolverStatus status);
/// Accepts the names produced by to_string plus the CLI spelling "unit-concat".
std::optional<GaugePolicy> parse_gauge_policy(std::string_view name);
std::optional<SolverStatus> parse_solver_status(std::string_view name);

struct SolverConfig {
    /// Largest accepted |RMS − 1| over all rows and columns of W.
    double tol = 1e-10;
    int max_iter = 10000;
    /// Stop as stalled when the residual improves by less than
    /// stall_factor·tol across stall_window iterations.
    int stall_window = 100;
    double stall_factor = 1e-3;
    GaugePolicy gauge = GaugePolicy::balanced;
    /// Keep the residual after every pass in ConvergenceReport::history.
    bool record_history = false;
};

struct ConvergenceReport {
    int iterations = 0;
    double residual = 0.0;
    SolverStatus status = SolverStatus::max_iterations;
    /// Residual before iterating followed by one value per pass; filled only
    /// when SolverConfig::record_history is set.
    std::vector<double> history;
    /// Set when unit_concat_if_feasible had no real solution and the
    /// balanced gauge was used instead.
    bool gauge_fell_back = false;
};

/// A = σ·D_α·W·D_β.
struct Decomposition {
    double sigma = 0.0;
    ScalingVector alpha;
    ScalingVector beta;
    Matrix w;
    ConvergenceReport report;
};

/// Structural problems that make a matrix undecomposable.
struct Defects {
    std::vector<Index> zero_rows;
    std::vector<Index> zero_cols;
    bool all_zero = false;

    bool empty() const noexcept { return zero_rows.empty() && zero_cols.empty() && !all_zero; }
    std::string describe() const;
};

Defects precheck(const Matrix& a);

/// Max over rows and columns of |RMS − 1|.
double residual(const Matrix& w);

/// Computes the projective decomposition by alternately normalizing the RMS
/// of every row and then every column of W, folding each normalizer into α
/// or β.
///
/// W starts at A/σ with α = β = 1. After each row or column pass W is
/// re-derived from the factors as a_ij / (σ·α_i·β_j) rather than updated in
/// place, so reconstruction error stays at a few ulps of a_ij no matter how
/// many passes run.
///
/// Throws DomainError for an all-zero matrix, InfeasibleError for an
/// all-zero row or column and for invalid configs. Failure to converge is
/// reported through report.status, not thrown.
Decomposition decompose(const Matrix& a, const SolverConfig& cfg = {});

struct GaugeResult {
    ScalingVector alpha;
    ScalingVector beta;
    double g = 1.0;
    /// unit_concat_if_feasible had no real solution; balanced was applied.
    bool fell_back = false;
};

/// Returns (g·α, β/g) for the g chosen by `policy`. Throws DomainError on
/// non-positive input.
GaugeResult gauge_fix(const ScalingVector& alpha, const ScalingVector& beta, GaugePolicy policy);

/// σ·α_i·w_ij·β_j, same storage as W.
Matrix reconstruct(const Decomposition& d);

/// Independent reference path: classic sum-targeting Sinkhorn on A∘A,
/// driving row sums to n and column sums to m, then square roots of the
/// factors. Same preconditions, errors and gauge handling as decompose.
Decomposition sinkhorn_oracle(const Matrix& a, const SolverConfig& cfg = {});

} // namespace projdecomp

#endif
