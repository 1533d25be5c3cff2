#pragma once

#include "graphsee/types.hpp"

namespace graphsee {

/// Full sorted eigendecomposition of a symmetric matrix. Eigenvalues ascend;
/// column k of eigenvectors pairs with eigenvalue k. Each eigenvector is
/// signed so its entry of largest absolute value is positive.
struct EigenSystem {
    Vector eigenvalues;
    Matrix eigenvectors;
    /// Index of the smallest eigenvalue above the zero tolerance (1e-9).
    int fiedler_index;
};

EigenSystem eigensystem(const Matrix& symmetric);

/// Pearson correlation; errors if either input is constant.
double pearson(const Vector& a, const Vector& b);

struct RankCorrelation {
    int rank;            // 1..N in decreasing eigenvalue order
    double correlation;  // |corr| with the winning eigenvector
};

/// Eigenvector most correlated (in absolute value) with x. Ranks run 1..N in
/// decreasing order of eigenvalue, so the smallest non-zero eigenvalue's
/// eigenvector of a connected Laplacian has rank N-1.
RankCorrelation best_correlated_eigenvector(const Vector& x, const EigenSystem& es);

}  // namespace graphsee
