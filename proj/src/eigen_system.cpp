#include "graphsee/eigen_system.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace graphsee {

namespace {
constexpr double kZeroEigenvalueTol = 1e-9;
constexpr double kSymmetryTol = 1e-10;
}  // namespace

EigenSystem eigensystem(const Matrix& symmetric) {
    if (symmetric.rows() != symmetric.cols())
        throw DataError("eigensystem requires a square matrix");
    const double asym = (symmetric - symmetric.transpose()).cwiseAbs().maxCoeff();
    if (asym > kSymmetryTol)
        throw DataError("eigensystem requires a symmetric matrix (max asymmetry " +
                        std::to_string(asym) + ")");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(symmetric);
    if (solver.info() != Eigen::Success) throw NumericError("eigendecomposition failed");

    EigenSystem es;
    es.eigenvalues = solver.eigenvalues();  // ascending
    es.eigenvectors = solver.eigenvectors();
    const int n = static_cast<int>(es.eigenvalues.size());
    for (int k = 0; k < n; ++k) {
        int imax;
        es.eigenvectors.col(k).cwiseAbs().maxCoeff(&imax);
        if (es.eigenvectors(imax, k) < 0.0) es.eigenvectors.col(k) *= -1.0;
    }
    es.fiedler_index = n - 1;
    for (int k = 0; k < n; ++k)
        if (es.eigenvalues[k] > kZeroEigenvalueTol) {
            es.fiedler_index = k;
            break;
        }
    return es;
}

double pearson(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DataError("correlation of different-length vectors");
    const double n = static_cast<double>(a.size());
    const Vector ac = a.array() - a.mean();
    const Vector bc = b.array() - b.mean();
    const double sa = ac.norm(), sb = bc.norm();
    if (sa == 0.0 || sb == 0.0) throw DataError("correlation undefined for a constant vector");
    (void)n;
    return ac.dot(bc) / (sa * sb);
}

RankCorrelation best_correlated_eigenvector(const Vector& x, const EigenSystem& es) {
    const int n = static_cast<int>(es.eigenvalues.size());
    if (x.size() != n) throw DataError("vector length does not match the eigensystem");
    const Vector xc = x.array() - x.mean();
    const double sx = xc.norm();
    if (sx == 0.0) throw DataError("correlation undefined for a constant vector");

    int best = -1;
    double best_abs = -1.0;
    for (int k = 0; k < n; ++k) {
        const Vector vc = es.eigenvectors.col(k).array() - es.eigenvectors.col(k).mean();
        const double sv = vc.norm();
        if (sv == 0.0) continue;  // constant eigenvector carries no correlation
        const double c = std::abs(xc.dot(vc) / (sx * sv));
        if (c > best_abs) {
            best_abs = c;
            best = k;
        }
    }
    if (best < 0) throw NumericError("no eigenvector admits a correlation");
    return RankCorrelation{n - best, best_abs};
}

}  // namespace graphsee
