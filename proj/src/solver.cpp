#include "projdecomp/solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "projdecomp/errors.hpp"

namespace projdecomp {

std::string_view to_string(GaugePolicy policy) {
    switch (policy) {
    case GaugePolicy::balanced: return "balanced";
    case GaugePolicy::unit_concat_if_feasible: return "unit_concat_if_feasible";
    case GaugePolicy::none: return "none";
    }
    return "unknown";
}

std::string_view to_string(SolverStatus status) {
    switch (status) {
    case SolverStatus::converged: return "converged";
    case SolverStatus::max_iterations: return "max_iterations";
    case SolverStatus::stalled: return "stalled";
    case SolverStatus::infeasible_zero_line: return "infeasible_zero_line";
    }
    return "unknown";
}

std::optional<GaugePolicy> parse_gauge_policy(std::string_view name) {
    if (name == "balanced") return GaugePolicy::balanced;
    if (name == "unit_concat_if_feasible" || name == "unit-concat") return GaugePolicy::unit_concat_if_feasible;
    if (name == "none") return GaugePolicy::none;
    return std::nullopt;
}

std::optional<SolverStatus> parse_solver_status(std::string_view name) {
    for (SolverStatus s : {SolverStatus::converged, SolverStatus::max_iterations, SolverStatus::stalled,
                           SolverStatus::infeasible_zero_line}) {
        if (to_string(s) == name) {
            return s;
        }
    }
    return std::nullopt;
}

std::string Defects::describe() const {
    std::ostringstream out;
    if (all_zero) {
        out << "matrix is entirely zero";
        return out.str();
    }
    auto list = [&](const char* what, const std::vector<Index>& idx) {
        if (idx.empty()) {
            return;
        }
        if (out.tellp() > 0) {
            out << "; ";
        }
        out << "all-zero " << what << (idx.size() > 1 ? "s" : "");
        for (std::size_t k = 0; k < idx.size(); ++k) {
            out << (k == 0 ? " " : ", ") << idx[k] + 1;
        }
    };
    list("row", zero_rows);
    list("column", zero_cols);
    return out.str();
}

Defects precheck(const Matrix& a) {
    std::vector<bool> row_hit(a.rows(), false);
    std::vector<bool> col_hit(a.cols(), false);
    a.for_each_stored([&](Index i, Index j, double v) {
        if (v != 0.0) {
            row_hit[i] = true;
            col_hit[j] = true;
        }
    });
    Defects d;
    for (Index i = 0; i < a.rows(); ++i) {
        if (!row_hit[i]) d.zero_rows.push_back(i);
    }
    for (Index j = 0; j < a.cols(); ++j) {
        if (!col_hit[j]) d.zero_cols.push_back(j);
    }
    d.all_zero = d.zero_rows.size() == a.rows();
    return d;
}

double residual(const Matrix& w) {
    double worst = 0.0;
    for (double r : rms_rows(w)) worst = std::max(worst, std::abs(r - 1.0));
    for (double c : rms_cols(w)) worst = std::max(worst, std::abs(c - 1.0));
    return worst;
}

namespace {

void validate(const SolverConfig& cfg) {
    if (!(cfg.tol > 0.0)) throw DomainError("solver tolerance must be positive");
    if (cfg.max_iter < 1) throw DomainError("solver max_iter must be at least 1");
    if (cfg.stall_window < 1) throw DomainError("solver stall_window must be at least 1");
    if (cfg.stall_factor < 0.0) throw DomainError("solver stall_factor must be non-negative");
}

void require_decomposable(const Matrix& a) {
    const Defects d = precheck(a);
    if (d.all_zero) {
        throw DomainError("cannot decompose: " + d.describe());
    }
    if (!d.empty()) {
        throw InfeasibleError("cannot decompose: " + d.describe());
    }
}

Matrix scaled_form(const Matrix& a, double sigma, const ScalingVector& alpha, const ScalingVector& beta) {
    return a.map_stored([&](Index i, Index j, double v) { return v / sigma / alpha[i] / beta[j]; });
}

/// Tracks the residual sequence and decides when the iteration has stalled.
class StallDetector {
public:
    StallDetector(const SolverConfig& cfg) : window_(cfg.stall_window), threshold_(cfg.stall_factor * cfg.tol) {}

    bool push(double r) {
        ring_.push_back(r);
        if (static_cast<int>(ring_.size()) <= window_) {
            return false;
        }
        const double earlier = ring_[ring_.size() - 1 - static_cast<std::size_t>(window_)];
        if (ring_.size() > 4 * static_cast<std::size_t>(window_)) {
            ring_.erase(ring_.begin(), ring_.end() - window_ - 1);
        }
        return earlier - r < threshold_;
    }

private:
    int window_;
    double threshold_;
    std::vector<double> ring_;
};

void finish(Decomposition& d, const SolverConfig& cfg) {
    GaugeResult g = gauge_fix(d.alpha, d.beta, cfg.gauge);
    d.alpha = std::move(g.alpha);
    d.beta = std::move(g.beta);
    d.report.gauge_fell_back = g.fell_back;
}

} // namespace

Decomposition decompose(const Matrix& a, const SolverConfig& cfg) {
    validate(cfg);
    require_decomposable(a);

    Decomposition d{rms(a), ScalingVector::constant(a.rows(), 1.0), ScalingVector::constant(a.cols(), 1.0), a, {}};
    d.w = scaled_form(a, d.sigma, d.alpha, d.beta);

    double res = residual(d.w);
    if (cfg.record_history) d.report.history.push_back(res);
    StallDetector stall(cfg);
    stall.push(res);

    d.report.status = SolverStatus::max_iterations;
    int iter = 0;
    while (res > cfg.tol) {
        if (iter == cfg.max_iter) {
            break;
        }
        ++iter;

        const ScalingVector r = rms_rows(d.w);
        for (Index i = 0; i < a.rows(); ++i) d.alpha[i] *= r[i];
        d.w = scaled_form(a, d.sigma, d.alpha, d.beta);

        const ScalingVector c = rms_cols(d.w);
        for (Index j = 0; j < a.cols(); ++j) d.beta[j] *= c[j];
        d.w = scaled_form(a, d.sigma, d.alpha, d.beta);

        res = residual(d.w);
        if (cfg.record_history) d.report.history.push_back(res);
        if (res > cfg.tol && stall.push(res)) {
            d.report.status = SolverStatus::stalled;
            break;
        }
    }
    if (res <= cfg.tol) {
        d.report.status = SolverStatus::converged;
    }
    d.report.iterations = iter;
    d.report.residual = res;
    finish(d, cfg);
    return d;
}

GaugeResult gauge_fix(const ScalingVector& alpha, const ScalingVector& beta, GaugePolicy policy) {
    if (alpha.size() == 0 || beta.size() == 0 || !alpha.strictly_positive() || !beta.strictly_positive()) {
        throw DomainError("gauge fixing requires non-empty, strictly positive scale factors");
    }
    const double balanced_g = std::sqrt(rms(beta.values()) / rms(alpha.values()));

    double g = 1.0;
    bool fell_back = false;
    switch (policy) {
    case GaugePolicy::none:
        return {alpha, beta, 1.0, false};
    case GaugePolicy::balanced:
        g = balanced_g;
        break;
    case GaugePolicy::unit_concat_if_feasible: {
        // x = g² solves Σα²·x² − (m+n)·x + Σβ² = 0.
        double sa = 0.0;
        double sb = 0.0;
        for (double v : alpha) sa += v * v;
        for (double v : beta) sb += v * v;
        const double total = static_cast<double>(alpha.size() + beta.size());
        const double disc = total * total - 4.0 * sa * sb;
        if (disc < 0.0) {
            g = balanced_g;
            fell_back = true;
            break;
        }
        const double root = std::sqrt(disc);
        const double x_hi = (total + root) / (2.0 * sa);
        const double x_lo = (2.0 * sb) / (total + root);  // product of the roots is sb/sa
        const double x_bal = balanced_g * balanced_g;
        g = std::sqrt(std::abs(x_hi - x_bal) <= std::abs(x_lo - x_bal) ? x_hi : x_lo);
        break;
    }
    }

    std::vector<double> a(alpha.begin(), alpha.end());
    std::vector<double> b(beta.begin(), beta.end());
    for (double& v : a) v *= g;
    for (double& v : b) v /= g;
    return {ScalingVector(std::move(a)), ScalingVector(std::move(b)), g, fell_back};
}

Matrix reconstruct(const Decomposition& d) {
    if (d.alpha.size() != d.w.rows() || d.beta.size() != d.w.cols()) {
        throw DimensionError("decomposition factors do not match W");
    }
    return d.w.map_stored([&](Index i, Index j, double v) { return d.sigma * d.alpha[i] * v * d.beta[j]; });
}

Decomposition sinkhorn_oracle(const Matrix& a, const SolverConfig& cfg) {
    validate(cfg);
    require_decomposable(a);

    const Matrix b = hadamard_power(a, 2.0);
    const Index m = a.rows();
    const Index n = a.cols();
    const double row_target = static_cast<double>(n);
    const double col_target = static_cast<double>(m);

    // x_i·b_ij·y_j has row sums n and column sums m at the fixed point.
    std::vector<double> x(m, 1.0);
    std::vector<double> y(n, 1.0);
    std::vector<double> row_sum(m);
    std::vector<double> col_sum(n);

    auto deviation = [&]() {
        std::fill(row_sum.begin(), row_sum.end(), 0.0);
        std::fill(col_sum.begin(), col_sum.end(), 0.0);
        b.for_each_stored([&](Index i, Index j, double v) {
            const double scaled = x[i] * v * y[j];
            row_sum[i] += scaled;
            col_sum[j] += scaled;
        });
        double worst = 0.0;
        for (double s : row_sum) worst = std::max(worst, std::abs(std::sqrt(s / row_target) - 1.0));
        for (double s : col_sum) worst = std::max(worst, std::abs(std::sqrt(s / col_target) - 1.0));
        return worst;
    };

    Decomposition d{rms(a), {}, {}, a, {}};
    double dev = deviation();
    if (cfg.record_history) d.report.history.push_back(dev);
    StallDetector stall(cfg);
    stall.push(dev);
    d.report.status = SolverStatus::max_iterations;

    int iter = 0;
    while (dev > cfg.tol && iter < cfg.max_iter) {
        ++iter;
        std::fill(row_sum.begin(), row_sum.end(), 0.0);
        b.for_each_stored([&](Index i, Index j, double v) { row_sum[i] += v * y[j]; });
        for (Index i = 0; i < m; ++i) x[i] = row_target / row_sum[i];

        std::fill(col_sum.begin(), col_sum.end(), 0.0);
        b.for_each_stored([&](Index i, Index j, double v) { col_sum[j] += x[i] * v; });
        for (Index j = 0; j < n; ++j) y[j] = col_target / col_sum[j];

        dev = deviation();
        if (cfg.record_history) d.report.history.push_back(dev);
        if (dev > cfg.tol && stall.push(dev)) {
            d.report.status = SolverStatus::stalled;
            break;
        }
    }
    if (dev <= cfg.tol) {
        d.report.status = SolverStatus::converged;
    }

    // w_ij = a_ij·√(x_i·y_j), so σ·α_i·β_j = 1/√(x_i·y_j).
    std::vector<double> alpha(m);
    std::vector<double> beta(n);
    for (Index i = 0; i < m; ++i) alpha[i] = 1.0 / std::sqrt(x[i]);
    for (Index j = 0; j < n; ++j) beta[j] = 1.0 / (d.sigma * std::sqrt(y[j]));
    d.w = a.map_stored([&](Index i, Index j, double v) { return v * std::sqrt(x[i]) * std::sqrt(y[j]); });
    d.alpha = ScalingVector(std::move(alpha));
    d.beta = ScalingVector(std::move(beta));
    d.report.iterations = iter;
    d.report.residual = dev;
    finish(d, cfg);
    return d;
}

} // namespace projdecomp
