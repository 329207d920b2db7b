#include "projdecomp/equivalence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "projdecomp/errors.hpp"
#include "projdecomp/random.hpp"

namespace projdecomp {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("shape mismatch: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                             " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
}

int sign(double v) { return (v > 0.0) - (v < 0.0); }

} // namespace

bool is_scale_invariant(const Matrix& w, double tol) { return residual(w) <= tol; }

double equivalence_defect(const Matrix& a, const Matrix& b, const ScalingVector& p, const ScalingVector& q) {
    require_same_shape(a, b);
    if (p.size() != a.cols() || q.size() != a.rows()) {
        throw DimensionError("witness vectors do not match the matrix shape");
    }
    const Matrix a_p = scale_cols(a, p);
    const Matrix q_b = scale_rows(b, q);
    const double scale = rms(a_p);
    const double diff = max_abs_difference(q_b, a_p);
    return scale > 0.0 ? diff / scale : diff;
}

std::optional<EquivalenceWitness> equivalent_up_to_scale(const Matrix& a, const Matrix& b, double tol,
                                                         const SolverConfig& cfg) {
    require_same_shape(a, b);
    const Decomposition da = decompose(a, cfg);
    const Decomposition db = decompose(b, cfg);

    bool signs_match = true;
    const std::vector<double> wa = da.w.dense_values();
    const std::vector<double> wb = db.w.dense_values();
    for (std::size_t k = 0; k < wa.size() && signs_match; ++k) {
        signs_match = sign(wa[k]) == sign(wb[k]);
    }
    if (!signs_match || max_abs_difference(da.w, db.w) > tol) {
        return std::nullopt;
    }

    std::vector<double> p(a.cols());
    std::vector<double> q(a.rows());
    const double ratio = da.sigma / db.sigma;
    for (Index j = 0; j < a.cols(); ++j) p[j] = db.beta[j] / da.beta[j];
    for (Index i = 0; i < a.rows(); ++i) q[i] = ratio * (da.alpha[i] / db.alpha[i]);

    EquivalenceWitness witness{ScalingVector(std::move(p)), ScalingVector(std::move(q)), 0.0, da.report.status,
                               db.report.status};
    witness.max_defect = equivalence_defect(a, b, witness.p, witness.q);
    if (witness.max_defect > tol) {
        return std::nullopt;
    }
    return witness;
}

AxiomReport verify_equivalence_axioms(const Matrix& a, const Matrix& b, const Matrix& c, double tol,
                                      const SolverConfig& cfg) {
    require_same_shape(a, b);
    require_same_shape(a, c);
    AxiomReport report;

    {
        const ScalingVector p = ScalingVector::constant(a.cols(), 1.0);
        const ScalingVector q = ScalingVector::constant(a.rows(), 1.0);
        report.reflexive.witness = equivalent_up_to_scale(a, a, tol, cfg);
        report.reflexive.passed = report.reflexive.witness.has_value() && equivalence_defect(a, a, p, q) <= tol;
    }

    const auto ab = equivalent_up_to_scale(a, b, tol, cfg);
    const auto ba = equivalent_up_to_scale(b, a, tol, cfg);
    report.symmetric.applicable = ab.has_value();
    if (ab) {
        // D_q·B = A·D_p  ⇒  D_{1/q}·A = B·D_{1/p}
        const ScalingVector p_inv = reciprocal(ab->p);
        const ScalingVector q_inv = reciprocal(ab->q);
        report.symmetric.passed = ba.has_value() && equivalence_defect(b, a, p_inv, q_inv) <= tol;
        report.symmetric.witness = ba;
    } else {
        report.symmetric.passed = !ba.has_value();
    }

    const auto bc = equivalent_up_to_scale(b, c, tol, cfg);
    report.transitive.applicable = ab.has_value() && bc.has_value();
    if (report.transitive.applicable) {
        std::vector<double> p(a.cols());
        std::vector<double> q(a.rows());
        for (Index j = 0; j < a.cols(); ++j) p[j] = ab->p[j] * bc->p[j];
        for (Index i = 0; i < a.rows(); ++i) q[i] = ab->q[i] * bc->q[i];
        const auto ac = equivalent_up_to_scale(a, c, tol, cfg);
        report.transitive.passed =
            ac.has_value() && equivalence_defect(a, c, ScalingVector(std::move(p)), ScalingVector(std::move(q))) <= tol;
        report.transitive.witness = ac;
    } else {
        report.transitive.passed = true;
    }
    return report;
}

double expected_scale(const Matrix& m, Index i, Index j) {
    if (i >= m.rows() || j >= m.cols()) {
        throw std::out_of_range("expected_scale: index (" + std::to_string(i) + ", " + std::to_string(j) +
                                ") outside " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
    return std::sqrt(rms_rows(m)[i] * rms_cols(m)[j]);
}

double relative_ratio_defect(const Matrix& a, const Matrix& w, const RatioMode& mode) {
    require_same_shape(a, w);
    const Index m = a.rows();
    const Index n = a.cols();
    if (m < 2 || n < 2) {
        throw DomainError("relative ratios need at least two rows and two columns");
    }
    const std::vector<double> av = a.dense_values();
    const std::vector<double> wv = w.dense_values();

    auto defect = [&](Index i, Index j, Index s, Index t) {
        const double lhs = wv[i * n + s] * wv[j * n + t] * av[i * n + t] * av[j * n + s];
        const double rhs = av[i * n + s] * av[j * n + t] * wv[i * n + t] * wv[j * n + s];
        const double scale = std::max(std::abs(lhs), std::abs(rhs));
        return scale == 0.0 ? 0.0 : std::abs(lhs - rhs) / scale;
    };

    double worst = 0.0;
    if (std::holds_alternative<Exhaustive>(mode)) {
        // Swapping i↔j or s↔t only exchanges lhs and rhs.
        for (Index i = 0; i < m; ++i)
            for (Index j = i + 1; j < m; ++j)
                for (Index s = 0; s < n; ++s)
                    for (Index t = s + 1; t < n; ++t) worst = std::max(worst, defect(i, j, s, t));
        return worst;
    }

    const Sampled& sampled = std::get<Sampled>(mode);
    Rng rng(sampled.seed);
    auto distinct_pair = [&rng](Index size) {
        const Index first = rng.below(size);
        Index second = rng.below(size - 1);
        if (second >= first) ++second;
        return std::make_pair(first, second);
    };
    for (std::uint64_t k = 0; k < sampled.count; ++k) {
        const auto [i, j] = distinct_pair(m);
        const auto [s, t] = distinct_pair(n);
        worst = std::max(worst, defect(i, j, s, t));
    }
    return worst;
}

} // namespace projdecomp
