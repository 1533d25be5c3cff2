#include "graphsee/operators.hpp"
#include <cmath>

#include "graphsee/eigen_system.hpp"
#include "helpers.hpp"

#include <doctest.h>

using namespace graphsee;

TEST_SUITE("operators") {

TEST_CASE("normalized adjacency on the triangle") {
    const Matrix m = normalized_adjacency(testutil::triangle());
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(m(i, j) == doctest::Approx(i == j ? 0.0 : 0.5).epsilon(1e-14));
}

TEST_CASE("normalized adjacency on a single edge") {
    const Matrix m = normalized_adjacency(testutil::path2());
    CHECK(m(0, 1) == doctest::Approx(1.0));
    CHECK(m(0, 0) == 0.0);
}

TEST_CASE("isolated node rejected with its name") {
    const Graph g = Graph::from_edges(3, {{0, 1}});
    CHECK_THROWS_WITH_AS(normalized_adjacency(g),
                         doctest::Contains("node 3"), DataError);
}

TEST_CASE("zkc normalized adjacency structure") {
    const auto zkc = testutil::load_zkc();
    const Matrix m = normalized_adjacency(zkc.graph);
    CHECK((m - m.transpose()).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(m.diagonal().cwiseAbs().maxCoeff() == 0.0);
    CHECK(m.minCoeff() >= 0.0);
    CHECK(m.maxCoeff() <= 1.0);
}

TEST_CASE("looped normalized adjacency") {
    SUBCASE("single node") {
        const Graph g = Graph::from_edges(1, {});
        const Matrix mt = looped_normalized_adjacency(g);
        CHECK(mt(0, 0) == doctest::Approx(1.0));
    }
    SUBCASE("triangle is constant 1/3") {
        const Matrix mt = looped_normalized_adjacency(testutil::triangle());
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) CHECK(mt(i, j) == doctest::Approx(1.0 / 3.0));
    }
    SUBCASE("zkc diagonal is 1/(1+d)") {
        const auto zkc = testutil::load_zkc();
        const Matrix mt = looped_normalized_adjacency(zkc.graph);
        for (int i = 0; i < 34; ++i)
            CHECK(mt(i, i) == doctest::Approx(1.0 / (1.0 + zkc.graph.degree(i))));
    }
}

TEST_CASE("laplacian eigenvalues of small graphs") {
    SUBCASE("triangle: {0, 1.5, 1.5}") {
        const EigenSystem es = eigensystem(normalized_laplacian(testutil::triangle()));
        CHECK(std::abs(es.eigenvalues[0]) <= 1e-12);
        CHECK(es.eigenvalues[1] == doctest::Approx(1.5));
        CHECK(es.eigenvalues[2] == doctest::Approx(1.5));
    }
    SUBCASE("single edge: {0, 2}") {
        const EigenSystem es = eigensystem(normalized_laplacian(testutil::path2()));
        CHECK(std::abs(es.eigenvalues[0]) <= 1e-12);
        CHECK(es.eigenvalues[1] == doctest::Approx(2.0));
    }
}

TEST_CASE("p_lambda variants") {
    const auto zkc = testutil::load_zkc();
    const Graph& g = zkc.graph;

    SUBCASE("plain at lambda = 1 equals -M") {
        const PLambdaOperator op = p_lambda(g, 1.0, PVariant::PlainM);
        CHECK((op.matrix + normalized_adjacency(g)).cwiseAbs().maxCoeff() <= 1e-14);
    }
    SUBCASE("looped at lambda = 0 equals I - looped M") {
        const PLambdaOperator op = p_lambda(g, 0.0, PVariant::LoopedM);
        Matrix expect = -looped_normalized_adjacency(g);
        expect.diagonal().array() += 1.0;
        CHECK((op.matrix - expect).cwiseAbs().maxCoeff() <= 1e-14);
    }
    SUBCASE("plain at an exact eigenvalue annihilates the eigenvector") {
        const EigenSystem es = eigensystem(normalized_laplacian(g));
        const int k = es.fiedler_index;
        const PLambdaOperator op = p_lambda(g, es.eigenvalues[k], PVariant::PlainM);
        CHECK((op.matrix * es.eigenvectors.col(k)).cwiseAbs().maxCoeff() <= 1e-8);
    }
    SUBCASE("looped neighbourhoods contain the neighbourhood and the node") {
        const PLambdaOperator op = p_lambda(g, 0.3, PVariant::LoopedM);
        for (int i = 0; i < g.node_count(); ++i) {
            const auto& tn = op.looped_neighbourhoods[i];
            CHECK(std::binary_search(tn.begin(), tn.end(), i));
            for (int j : g.neighbors(i)) CHECK(std::binary_search(tn.begin(), tn.end(), j));
            CHECK(static_cast<int>(tn.size()) == g.degree(i) + 1);
        }
    }
}

}  // TEST_SUITE
