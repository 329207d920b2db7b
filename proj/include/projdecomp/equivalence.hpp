#ifndef PROJDECOMP_EQUIVALENCE_HPP
#define PROJDECOMP_EQUIVALENCE_HPP

#include <cstdint>
#include <optional>
#include <variant>

#include "projdecomp/matrix.hpp"
#include "projdecomp/solver.hpp"

namespace projdecomp {

/// Vectors with D_q·B = A·D_p.
struct EquivalenceWitness {
    ScalingVector p;  ///< length n
    ScalingVector q;  ///< length m
    /// max_ij |q_i·b_ij − a_ij·p_j| / RMS(A·D_p).
    double max_defect = 0.0;
    /// Solver outcome for A and B; anything but converged means the
    /// canonical forms compared were best-effort.
    SolverStatus status_a = SolverStatus::converged;
    SolverStatus status_b = SolverStatus::converged;
};

/// True iff every row and column RMS of W is within tol of 1.
bool is_scale_invariant(const Matrix& w, double tol);

/// max_ij |q_i·b_ij − a_ij·p_j| / RMS(A·D_p): how far (p, q) is from
/// witnessing D_q·B = A·D_p, on a scale-free footing.
double equivalence_defect(const Matrix& a, const Matrix& b, const ScalingVector& p, const ScalingVector& q);

/// Decides equivalence up to scale by comparing canonical forms.
///
/// Both matrices are decomposed with `cfg`. They are equivalent when the
/// two W agree within `tol` elementwise with identical sign patterns; the
/// witness p = β_B/β_A, q = (σ_A/σ_B)·α_A/α_B is then checked against
/// D_q·B = A·D_p and rejected if its defect exceeds `tol`.
///
/// Throws DimensionError on a shape mismatch and DomainError when either
/// matrix fails precheck.
std::optional<EquivalenceWitness> equivalent_up_to_scale(const Matrix& a, const Matrix& b, double tol,
                                                         const SolverConfig& cfg = {});

struct AxiomCheck {
    bool applicable = true;  ///< false when the hypothesis of the axiom does not hold
    bool passed = false;     ///< vacuously true when not applicable
    std::optional<EquivalenceWitness> witness;
};

struct AxiomReport {
    AxiomCheck reflexive;   ///< A ~ A via p = 1, q = 1
    AxiomCheck symmetric;   ///< A ~ B ⇒ B ~ A via (1/p, 1/q)
    AxiomCheck transitive;  ///< A ~ B, B ~ C ⇒ A ~ C via (p'·p'', q'·q'')

    bool all_passed() const { return reflexive.passed && symmetric.passed && transitive.passed; }
};

/// Instance-level check of reflexivity, symmetry and transitivity of
/// equivalence up to scale, using the composed vectors from the proof that
/// it is an equivalence relation.
AxiomReport verify_equivalence_axioms(const Matrix& a, const Matrix& b, const Matrix& c, double tol,
                                      const SolverConfig& cfg = {});

/// √(|M_i*|·|M_*j|). Throws std::out_of_range on a bad index.
double expected_scale(const Matrix& m, Index i, Index j);

struct Exhaustive {};
struct Sampled {
    std::uint64_t count = 100000;
    std::uint64_t seed = 1;
};
using RatioMode = std::variant<Exhaustive, Sampled>;

/// Largest relative violation of w_is·w_jt·a_it·a_js = a_is·a_jt·w_it·w_js
/// over row pairs i≠j and column pairs s≠t. Each quadruple contributes
/// |lhs − rhs| / max(|lhs|, |rhs|), with 0/0 counted as 0.
///
/// Throws DimensionError on a shape mismatch and DomainError if m or n < 2.
double relative_ratio_defect(const Matrix& a, const Matrix& w, const RatioMode& mode = Exhaustive{});

} // namespace projdecomp

#endif
