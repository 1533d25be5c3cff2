#include "graphsee/eigen_system.hpp"

#include "graphsee/operators.hpp"
#include "helpers.hpp"

#include <doctest.h>

using namespace graphsee;

TEST_SUITE("eigen_system") {

TEST_CASE("zkc spectral facts") {
    const auto zkc = testutil::load_zkc();
    const EigenSystem es = eigensystem(normalized_laplacian(zkc.graph));

    CHECK(es.fiedler_index == 1);
    CHECK(es.eigenvalues[es.fiedler_index] == doctest::Approx(0.132272).epsilon(1e-4));

    // Boundary values at nodes 9 and 10 (1-based) in the orientation that puts
    // node 34's faction on the positive side.
    Vector z0 = es.eigenvectors.col(es.fiedler_index);
    const Vector officer = Vector::Ones(34) - zkc.labels;
    if (pearson(z0, officer) < 0.0) z0 = -z0;
    CHECK(z0[8] == doctest::Approx(0.0528).epsilon(0.02));
    CHECK(z0[9] == doctest::Approx(0.0556).epsilon(0.02));

    // the 0.054 threshold splits the factions perfectly
    for (int i = 0; i < 34; ++i) CHECK((z0[i] > 0.054 ? 1.0 : 0.0) == officer[i]);
}

TEST_CASE("zero eigenvector is sqrt(degrees)") {
    const auto zkc = testutil::load_zkc();
    const EigenSystem es = eigensystem(normalized_laplacian(zkc.graph));
    Vector sq = zkc.graph.degree_vector().cwiseSqrt();
    sq /= sq.norm();
    CHECK((es.eigenvectors.col(0) - sq).cwiseAbs().maxCoeff() <= 1e-8);
}

TEST_CASE("sign convention: largest entry positive") {
    const auto zkc = testutil::load_zkc();
    const EigenSystem es = eigensystem(normalized_laplacian(zkc.graph));
    for (int k = 0; k < 34; ++k) {
        int imax;
        es.eigenvectors.col(k).cwiseAbs().maxCoeff(&imax);
        CHECK(es.eigenvectors(imax, k) > 0.0);
    }
}

TEST_CASE("non-symmetric input rejected") {
    Matrix m(2, 2);
    m << 0.0, 1.0, 0.0, 0.0;
    CHECK_THROWS_AS(eigensystem(m), DataError);
}

TEST_CASE("best-correlated eigenvector ranks") {
    const auto zkc = testutil::load_zkc();
    const EigenSystem es = eigensystem(normalized_laplacian(zkc.graph));
    const Vector z0 = es.eigenvectors.col(es.fiedler_index);

    SUBCASE("fiedler vector has rank N-1") {
        const RankCorrelation rc = best_correlated_eigenvector(z0, es);
        CHECK(rc.rank == 33);
        CHECK(rc.correlation == doctest::Approx(1.0));
    }
    SUBCASE("largest-eigenvalue eigenvector has rank 1") {
        const RankCorrelation rc = best_correlated_eigenvector(es.eigenvectors.col(33), es);
        CHECK(rc.rank == 1);
    }
    SUBCASE("rank is stable under tiny perturbation") {
        SplitMix64 rng(7);
        Vector noisy = z0;
        for (int i = 0; i < noisy.size(); ++i) noisy[i] += 1e-6 * (rng.uniform() - 0.5);
        CHECK(best_correlated_eigenvector(noisy, es).rank == 33);
    }
    SUBCASE("constant vector rejected") {
        CHECK_THROWS_AS(best_correlated_eigenvector(Vector::Ones(34), es), DataError);
    }
}

TEST_CASE("pearson guards") {
    Vector a(3), b(3);
    a << 1, 2, 3;
    b << 1, 1, 1;
    CHECK_THROWS_AS(pearson(a, b), DataError);
    b << 2, 4, 6;
    CHECK(pearson(a, b) == doctest::Approx(1.0));
}

}  // TEST_SUITE
