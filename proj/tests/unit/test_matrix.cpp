#include <doctest.h>

#include <cmath>
#include <limits>

#include "projdecomp/errors.hpp"
#include "projdecomp/matrix.hpp"
#include "support/oracles.hpp"

using namespace projdecomp;

namespace {

/// Random sparse pattern with roughly `density` of entries nonzero, plus
/// its dense twin.
std::pair<Matrix, Matrix> sparse_and_dense(Index m, Index n, double density, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Triplet> t;
    for (Index i = 0; i < m; ++i)
        for (Index j = 0; j < n; ++j)
            if (rng.uniform() < density) t.push_back({i, j, rng.uniform(-5.0, 5.0)});
    if (t.empty()) t.push_back({0, 0, 1.0});
    Matrix s = Matrix::sparse(m, n, t);
    return {s, s.to_dense()};
}

} // namespace

TEST_CASE("rms of small matrices") {
    CHECK(rms(Matrix::dense({{3, 4}, {0, 0}})) == doctest::Approx(2.5).epsilon(1e-15));
    CHECK(rms(Matrix::ones(3, 7)) == 1.0);
    CHECK(rms(Matrix::ones(1, 1)) == 1.0);
    CHECK(rms(Matrix::dense({{1, 3}, {2, 6}})) == doctest::Approx(5.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(rms(Matrix::sparse(2, 2, {})) == 0.0);
}

TEST_CASE("row and column rms") {
    const ScalingVector r = rms_rows(Matrix::dense({{1, 2}, {3, 4}}));
    CHECK(r[0] == doctest::Approx(std::sqrt(2.5)).epsilon(1e-15));
    CHECK(r[1] == doctest::Approx(std::sqrt(12.5)).epsilon(1e-15));

    const ScalingVector c = rms_cols(Matrix::identity(2));
    CHECK(c[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(c[1] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));

    for (double v : rms_rows(Matrix::ones(4, 9))) CHECK(v == 1.0);

    // zero rows are not an error here
    CHECK(rms_rows(Matrix::dense({{0, 0}, {1, 1}}))[0] == 0.0);
}

TEST_CASE("diagonal scaling") {
    const Matrix m = Matrix::dense({{1, 2}, {3, 4}});
    CHECK(scale_rows(m, {2, 1}) == Matrix::dense({{2, 4}, {3, 4}}));
    CHECK(scale_cols(m, {1, 0.5}) == Matrix::dense({{1, 1}, {3, 2}}));
    // D_{1/q}·M·D_p with p = (2, 1), q = (1, 2)
    CHECK(scale_rows(scale_cols(m, {2, 1}), reciprocal({1, 2})) == Matrix::dense({{2, 2}, {3, 2}}));

    CHECK_THROWS_AS(scale_rows(m, {1, 2, 3}), DimensionError);
    CHECK_THROWS_AS(scale_cols(m, {1}), DimensionError);
    CHECK_THROWS_AS(scale_rows(m, {1, 0}), DomainError);
    // negative factors are allowed for the general utility
    CHECK(scale_rows(m, {-1, 1}) == Matrix::dense({{-1, -2}, {3, 4}}));
}

TEST_CASE("scalings commute to within one rounding") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const Matrix a = oracle::random_matrix(3 + seed % 5, 2 + seed % 7, seed, -3, 3);
        const ScalingVector q = oracle::random_positive(a.rows(), seed + 100);
        const ScalingVector p = oracle::random_positive(a.cols(), seed + 200);
        const Matrix x = scale_rows(scale_cols(a, p), q);
        const Matrix y = scale_cols(scale_rows(a, q), p);
        for (Index i = 0; i < a.rows(); ++i)
            for (Index j = 0; j < a.cols(); ++j)
                CHECK(std::abs(x(i, j) - y(i, j)) <= 2 * std::numeric_limits<double>::epsilon() * std::abs(x(i, j)));
    }
    // exact when one side is a power of two
    const Matrix a = oracle::random_matrix(4, 3, 8, -3, 3);
    CHECK(scale_rows(scale_cols(a, {2, 0.5, 4}), {1.3, 0.7, 2.9, 5.1}) ==
          scale_cols(scale_rows(a, {1.3, 0.7, 2.9, 5.1}), {2, 0.5, 4}));
}

TEST_CASE("hadamard power") {
    CHECK(hadamard_power(Matrix::dense({{1, -2}, {3, 4}}), 2) == Matrix::dense({{1, 4}, {9, 16}}));
    CHECK(hadamard_power(Matrix::ones(3, 2), 3.7) == Matrix::ones(3, 2));
    CHECK(hadamard_power(Matrix::dense({{4, 9}}), 0.5) == Matrix::dense({{2, 3}}));
    CHECK(hadamard_power(Matrix::dense({{-2, 1}}), 3) == Matrix::dense({{-8, 1}}));
    CHECK_THROWS_AS(hadamard_power(Matrix::dense({{-4, 9}}), 0.5), DomainError);
    CHECK_THROWS_AS(hadamard_power(Matrix::dense({{4, 9}}), 0.0), DomainError);
}

TEST_CASE("transpose") {
    CHECK(transpose(Matrix::dense({{1, 2}, {3, 4}})) == Matrix::dense({{1, 3}, {2, 4}}));
    const Matrix row = Matrix::dense({{1, 2, 3}});
    CHECK(transpose(transpose(row)) == row);
    CHECK(transpose(row).rows() == 3);
    const Matrix m = Matrix::dense({{1, 3}, {2, 6}});
    CHECK(rms(transpose(m)) == doctest::Approx(5.0 / std::sqrt(2.0)).epsilon(1e-15));

    const auto [s, d] = sparse_and_dense(5, 3, 0.5, 9);
    CHECK(transpose(s).is_sparse());
    CHECK(transpose(s) == transpose(d));
}

TEST_CASE("rms identities over random matrices") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        const Index m = 1 + seed % 6;
        const Index n = 1 + (seed * 7) % 9;
        const Matrix a = oracle::random_matrix(m, n, seed, -4, 4);
        const double total = rms(a) * rms(a) * double(m) * double(n);

        double by_rows = 0.0;
        for (double r : rms_rows(a)) by_rows += r * r * double(n);
        double by_cols = 0.0;
        for (double c : rms_cols(a)) by_cols += c * c * double(m);
        CHECK(by_rows == doctest::Approx(total).epsilon(1e-13));
        CHECK(by_cols == doctest::Approx(total).epsilon(1e-13));

        CHECK(rms_rows(transpose(a)) == rms_cols(a));
        CHECK(rms_cols(transpose(a)) == rms_rows(a));

        const Matrix sq = hadamard_power(a, 2);
        double mean = 0.0;
        sq.for_each_stored([&](Index, Index, double v) {
            CHECK(v >= 0.0);
            mean += v;
        });
        mean /= double(m * n);
        CHECK(rms(a) * rms(a) == doctest::Approx(mean).epsilon(1e-13));

        const auto rr = oracle::row_rms(a);
        const ScalingVector r = rms_rows(a);
        for (Index i = 0; i < m; ++i) CHECK(r[i] == doctest::Approx(rr[i]).epsilon(1e-14));
    }
}

TEST_CASE("dense and sparse storage reduce bit-identically") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const auto [s, d] = sparse_and_dense(2 + seed % 9, 2 + seed % 5, 0.4, seed);
        CHECK(s == d);
        CHECK(rms(s) == rms(d));
        CHECK(rms_rows(s) == rms_rows(d));
        CHECK(rms_cols(s) == rms_cols(d));
        const ScalingVector q = oracle::random_positive(s.rows(), seed);
        CHECK(scale_rows(s, q) == scale_rows(d, q));
        CHECK(hadamard_power(s, 2) == hadamard_power(d, 2));
    }
}

TEST_CASE("construction invariants") {
    CHECK_THROWS_AS(Matrix::dense(0, 3, {}), DimensionError);
    CHECK_THROWS_AS(Matrix::dense(2, 2, {1, 2, 3}), DimensionError);
    CHECK_THROWS_AS(Matrix::dense({{1, 2}, {3}}), DimensionError);
    CHECK_THROWS_AS(Matrix::dense({{1, NAN}}), DomainError);
    CHECK_THROWS_AS(Matrix::sparse(2, 2, {{0, 0, 1}, {0, 0, 2}}), DimensionError);
    CHECK_THROWS_AS(Matrix::sparse(2, 2, {{2, 0, 1}}), DimensionError);

    const Matrix s = Matrix::sparse(2, 3, {{1, 2, 5.0}, {0, 1, 0.0}, {0, 0, -1.0}});
    CHECK(s.stored_count() == 2);  // explicit zero dropped
    CHECK(s(1, 2) == 5.0);
    CHECK(s(0, 1) == 0.0);
    CHECK(s.nonzeros().front() == Triplet{0, 0, -1.0});  // sorted row-major
    CHECK_THROWS_AS(s(2, 0), DimensionError);
}
