#pragma once

#include "graphsee/graph.hpp"
#include "graphsee/types.hpp"

#include <vector>

namespace graphsee {

/// Dense 0/1 adjacency matrix A.
Matrix adjacency_matrix(const Graph& g);

/// Normalized adjacency M, m_ij = a_ij / sqrt(d_i d_j).
/// Errors if any node is isolated (names the node, 1-based).
Matrix normalized_adjacency(const Graph& g);

/// Looped normalized adjacency, (a_ij + [i=j]) / sqrt((1+d_i)(1+d_j)).
Matrix looped_normalized_adjacency(const Graph& g);

/// Normalized Laplacian I - M.
Matrix normalized_laplacian(const Graph& g);

enum class PVariant { PlainM, LoopedM };

/// Symmetric operator whose null vector mimics a Laplacian eigenvector:
/// PlainM: (1-lambda) I - M; LoopedM: Diag(1 - lambda d_i/(1+d_i)) - looped M.
struct PLambdaOperator {
    PVariant variant;
    double lambda;
    Matrix matrix;
    /// Looped neighbourhoods: per-row non-zero column sets (includes the node
    /// itself whenever the diagonal entry is non-zero).
    std::vector<std::vector<int>> looped_neighbourhoods;
};

PLambdaOperator p_lambda(const Graph& g, double lambda, PVariant variant);

}  // namespace graphsee
