#include <doctest.h>

#include "projdecomp/errors.hpp"
#include "projdecomp/support.hpp"
#include "support/oracles.hpp"

using namespace projdecomp;

TEST_CASE("support classification examples") {
    CHECK(check_support(Matrix::identity(2)).classification == SupportClass::total_support);
    CHECK_FALSE(check_support(Matrix::identity(2)).witness.has_value());

    const SupportDiagnosis d = check_support(Matrix::dense({{1, 1}, {1, 0}}));
    CHECK(d.classification == SupportClass::support_only);
    REQUIRE(d.witness.has_value());
    CHECK(*d.witness == std::make_pair(Index{0}, Index{0}));

    CHECK(check_support(Matrix::dense({{0, 0}, {0, 0}})).classification == SupportClass::no_support);
    CHECK(check_support(oracle::random_matrix(6, 6, 5)).classification == SupportClass::total_support);
    CHECK(check_support(Matrix::dense({{1, 2, 3}, {0, 0, 0}, {4, 5, 6}})).classification == SupportClass::no_support);
}

TEST_CASE("support requires a square pattern") {
    CHECK_THROWS_AS(check_support(Matrix::ones(2, 3)), ShapeError);
}

TEST_CASE("upper triangular patterns have support but not total support") {
    const Matrix u = Matrix::dense({{1, 1, 1}, {0, 1, 1}, {0, 0, 1}});
    const SupportDiagnosis d = check_support(u);
    CHECK(d.classification == SupportClass::support_only);
    CHECK(*d.witness == std::make_pair(Index{0}, Index{1}));
}

TEST_CASE("matching-based classification agrees with permutation enumeration") {
    Rng rng(99);
    int seen[3] = {0, 0, 0};
    for (int trial = 0; trial < 600; ++trial) {
        const Index n = 1 + rng.below(6);
        const double density = 0.15 + 0.7 * rng.uniform();
        std::vector<Triplet> t;
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j)
                if (rng.uniform() < density) t.push_back({i, j, 1.0 + rng.uniform()});
        const Matrix p = Matrix::sparse(n, n, t);

        const oracle::BruteSupport ref = oracle::brute_force_support(p);
        const SupportDiagnosis got = check_support(p);
        CAPTURE(trial);
        if (!ref.has_support) {
            CHECK(got.classification == SupportClass::no_support);
            ++seen[2];
        } else if (ref.first_uncovered) {
            CHECK(got.classification == SupportClass::support_only);
            REQUIRE(got.witness.has_value());
            CHECK(*got.witness == *ref.first_uncovered);
            ++seen[1];
        } else {
            CHECK(got.classification == SupportClass::total_support);
            CHECK_FALSE(got.witness.has_value());
            ++seen[0];
        }
    }
    // the generator must exercise every class
    CHECK(seen[0] > 20);
    CHECK(seen[1] > 20);
    CHECK(seen[2] > 20);
}
