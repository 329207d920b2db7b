#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "projdecomp/equivalence.hpp"
#include "projdecomp/errors.hpp"
#include "support/oracles.hpp"

using namespace projdecomp;

TEST_CASE("is_scale_invariant") {
    CHECK(is_scale_invariant(Matrix::ones(3, 5), 1e-12));
    const double r2 = std::sqrt(2.0);
    CHECK(is_scale_invariant(Matrix::dense({{r2, 0}, {0, -r2}}), 1e-12));
    CHECK_FALSE(is_scale_invariant(Matrix::dense({{1, 2}, {3, 4}}), 1e-6));
}

TEST_CASE("equivalence of a hand-built pair") {
    const Matrix a = Matrix::dense({{1, 2}, {3, 4}});
    const Matrix b = Matrix::dense({{2, 2}, {3, 2}});  // D_{1/q}·A·D_p, p = (2,1), q = (1,2)
    SolverConfig tight;
    tight.tol = 1e-13;
    const auto w = equivalent_up_to_scale(a, b, 1e-8, tight);
    REQUIRE(w.has_value());
    CHECK(w->max_defect <= 1e-10);
    CHECK(equivalence_defect(a, b, w->p, w->q) <= 1e-10);
    // (p, q) is (2, 1), (1, 2) up to one global constant
    const double k = w->p[0] / 2.0;
    CHECK(w->p[1] == doctest::Approx(k).epsilon(1e-10));
    CHECK(w->q[0] == doctest::Approx(k).epsilon(1e-10));
    CHECK(w->q[1] == doctest::Approx(2 * k).epsilon(1e-10));
    CHECK(w->status_a == SolverStatus::converged);

    CHECK(equivalence_defect(a, b, {2, 1}, {1, 2}) == 0.0);
}

TEST_CASE("a matrix is equivalent to itself via unit vectors") {
    const Matrix a = Matrix::dense({{1, 2}, {3, 4}});
    const auto w = equivalent_up_to_scale(a, a, 1e-10);
    REQUIRE(w.has_value());
    for (double v : w->p) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
    for (double v : w->q) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(equivalence_defect(a, a, ScalingVector::constant(2, 1.0), ScalingVector::constant(2, 1.0)) == 0.0);
}

TEST_CASE("non-equivalent pair") {
    // quadruple check: 1·5·… ratio 1·5/(2·3) ≠ 1·4/(2·3)
    CHECK_FALSE(equivalent_up_to_scale(Matrix::dense({{1, 2}, {3, 4}}), Matrix::dense({{1, 2}, {3, 5}}), 1e-8));
    // same magnitudes, different signs
    CHECK_FALSE(equivalent_up_to_scale(Matrix::dense({{1, 2}, {3, 4}}), Matrix::dense({{1, -2}, {3, 4}}), 1e-8));
}

TEST_CASE("equivalence errors") {
    CHECK_THROWS_AS(equivalent_up_to_scale(Matrix::ones(2, 2), Matrix::ones(2, 3), 1e-8), DimensionError);
    CHECK_THROWS_AS(equivalent_up_to_scale(Matrix::ones(2, 2), Matrix::dense({{1, 0}, {1, 0}}), 1e-8), DomainError);
}

TEST_CASE("scaled copies are always recognized") {
    for (std::uint64_t s = 1; s <= 10; ++s) {
        const Matrix a = oracle::random_matrix(3 + s % 4, 2 + s % 5, 300 + s);
        const ScalingVector q = oracle::random_positive(a.rows(), 400 + s);
        const ScalingVector p = oracle::random_positive(a.cols(), 500 + s);
        const auto w = equivalent_up_to_scale(a, oracle::scale_both(a, q, p), 1e-8);
        REQUIRE(w.has_value());
        CHECK(w->max_defect <= 1e-8);
        CHECK(w->p.strictly_positive());
        CHECK(w->q.strictly_positive());
    }
}

TEST_CASE("equivalence axioms on constructed triples") {
    for (std::uint64_t s = 1; s <= 10; ++s) {
        const Matrix a = oracle::random_matrix(4, 5, 700 + s);
        const Matrix b = oracle::scale_both(a, oracle::random_positive(4, 800 + s), oracle::random_positive(5, 900 + s));
        const Matrix c = oracle::scale_both(b, oracle::random_positive(4, 1000 + s), oracle::random_positive(5, 1100 + s));
        const AxiomReport r = verify_equivalence_axioms(a, b, c, 1e-8);
        CAPTURE(s);
        CHECK(r.reflexive.passed);
        CHECK(r.symmetric.applicable);
        CHECK(r.symmetric.passed);
        CHECK(r.transitive.applicable);
        CHECK(r.transitive.passed);
        CHECK(r.all_passed());
    }
}

TEST_CASE("transitivity is vacuous when the third matrix is unrelated") {
    const Matrix a = oracle::random_matrix(4, 5, 71);
    const Matrix b = oracle::scale_both(a, oracle::random_positive(4, 72), oracle::random_positive(5, 73));
    const Matrix c = oracle::random_matrix(4, 5, 74);
    const AxiomReport r = verify_equivalence_axioms(a, b, c, 1e-8);
    CHECK(r.reflexive.passed);
    CHECK(r.symmetric.passed);
    CHECK_FALSE(r.transitive.applicable);
    CHECK(r.transitive.passed);
}

TEST_CASE("expected scale") {
    const Matrix m = Matrix::dense({{1, 2}, {3, 4}});
    CHECK(expected_scale(m, 0, 0) == doctest::Approx(1.8803015465).epsilon(1e-9));
    CHECK(expected_scale(m, 0, 0) == doctest::Approx(std::sqrt(std::sqrt(2.5) * std::sqrt(5.0))).epsilon(1e-15));
    CHECK(expected_scale(Matrix::ones(3, 4), 2, 3) == 1.0);
    CHECK_THROWS_AS(expected_scale(m, 2, 0), std::out_of_range);
    CHECK_THROWS_AS(expected_scale(m, 0, 2), std::out_of_range);

    for (std::uint64_t s = 1; s <= 5; ++s) {
        const Matrix a = oracle::random_matrix(3 + s, 4, s, -2, 2);
        const Matrix t = transpose(a);
        for (Index i = 0; i < a.rows(); ++i)
            for (Index j = 0; j < a.cols(); ++j) CHECK(expected_scale(a, i, j) == expected_scale(t, j, i));

        const Decomposition d = decompose(oracle::random_matrix(3 + s, 4, s));
        for (Index i = 0; i < d.w.rows(); ++i)
            for (Index j = 0; j < d.w.cols(); ++j) CHECK(std::abs(expected_scale(d.w, i, j) - 1.0) <= 1e-9);
    }
}

TEST_CASE("relative ratio defect") {
    const Matrix a = Matrix::dense({{1, 2}, {3, 4}});
    CHECK(relative_ratio_defect(a, a) == 0.0);
    // 30 vs 24
    CHECK(relative_ratio_defect(a, Matrix::dense({{1, 2}, {3, 5}})) == doctest::Approx(0.2).epsilon(1e-14));

    const Matrix r = oracle::random_matrix(6, 6, 66);
    CHECK(relative_ratio_defect(r, decompose(r).w) <= 1e-9);
    CHECK(relative_ratio_defect(r, decompose(r).w, Sampled{5000, 3}) <= 1e-9);
    CHECK(relative_ratio_defect(r, r, Sampled{100, 9}) == 0.0);

    // zeros on both sides count as agreement
    const Matrix z = Matrix::dense({{0, 1}, {1, 1}});
    CHECK(relative_ratio_defect(z, z) == 0.0);

    CHECK_THROWS_AS(relative_ratio_defect(Matrix::ones(1, 3), Matrix::ones(1, 3)), DomainError);
    CHECK_THROWS_AS(relative_ratio_defect(Matrix::ones(2, 3), Matrix::ones(3, 2)), DimensionError);
}

TEST_CASE("canonical forms preserve relative ratios") {
    for (std::uint64_t s = 1; s <= 8; ++s) {
        const Matrix a = oracle::random_matrix(2 + s * 2, 20 - s, 1200 + s, 0.1, 10.0, s % 2 ? 0.3 : 0.0);
        SolverConfig cfg;
        const Decomposition d = decompose(a, cfg);
        REQUIRE(d.report.status == SolverStatus::converged);
        CHECK(relative_ratio_defect(a, d.w) <= 100 * cfg.tol);
        CHECK(is_scale_invariant(d.w, 10 * cfg.tol));
    }
}
