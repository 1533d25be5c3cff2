#include "graphsee/operators.hpp"

#include <cmath>
#include <string>

namespace graphsee {

Matrix adjacency_matrix(const Graph& g) {
    const int n = g.node_count();
    Matrix a = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j : g.neighbors(i)) a(i, j) = 1.0;
    return a;
}

Matrix normalized_adjacency(const Graph& g) {
    const int n = g.node_count();
    for (int i = 0; i < n; ++i)
        if (g.degree(i) == 0)
            throw DataError("node " + std::to_string(i + 1) +
                            " is isolated; normalized adjacency undefined");
    Matrix m = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        const double di = g.degree(i);
        for (int j : g.neighbors(i)) m(i, j) = 1.0 / std::sqrt(di * g.degree(j));
    }
    return m;
}

Matrix looped_normalized_adjacency(const Graph& g) {
    const int n = g.node_count();
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) {
        const double si = std::sqrt(1.0 + g.degree(i));
        m(i, i) = 1.0 / (1.0 + g.degree(i));
        for (int j = 0; j < n; ++j)
            if (j != i) m(i, j) = g.has_edge(i, j) ? 1.0 / (si * std::sqrt(1.0 + g.degree(j))) : 0.0;
    }
    return m;
}

Matrix normalized_laplacian(const Graph& g) {
    Matrix l = -normalized_adjacency(g);
    l.diagonal().array() += 1.0;
    return l;
}

PLambdaOperator p_lambda(const Graph& g, double lambda, PVariant variant) {
    const int n = g.node_count();
    PLambdaOperator op;
    op.variant = variant;
    op.lambda = lambda;
    if (variant == PVariant::PlainM) {
        op.matrix = -normalized_adjacency(g);
        op.matrix.diagonal().array() += 1.0 - lambda;
    } else {
        op.matrix = -looped_normalized_adjacency(g);
        for (int i = 0; i < n; ++i) {
            const double di = g.degree(i);
            op.matrix(i, i) += 1.0 - lambda * di / (1.0 + di);
        }
    }
    op.looped_neighbourhoods.resize(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (op.matrix(i, j) != 0.0) op.looped_neighbourhoods[i].push_back(j);
    return op;
}

}  // namespace graphsee
