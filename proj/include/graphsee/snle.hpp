#pragma once

#include "graphsee/eigen_system.hpp"
#include "graphsee/graph.hpp"
#include "graphsee/operators.hpp"
#include "graphsee/sampling.hpp"
#include "graphsee/types.hpp"

#include <cstdint>
#include <vector>

namespace graphsee {

/// Supervised normalized-Laplacian embedding configuration. gamma = 0 selects
/// the eigen route (smallest-eigenvalue eigenvector of P'P).
struct SnleConfig {
    double lambda = 0.1;
    double gamma = 0.0;
    PVariant variant = PVariant::PlainM;
};

/// Full-graph embedding. gamma > 0: solves (I + P'P/gamma) x = y.
/// gamma = 0: unit-norm minimizer of x'P'Px, signed so corr(x, y) >= 0.
Vector snle_full(const Graph& g, const Vector& y, const SnleConfig& cfg);

/// Loss as a sum over nodes, sum_i (sum_{j in looped nbhd} p_ij x_j)^2
/// + gamma sum_i (y_i - x_i)^2; identical to the quadratic form.
double snle_loss(const Graph& g, const Vector& y, const SnleConfig& cfg, const Vector& x);

/// Sample embedding values over U_s.
struct SampleEmbedding {
    std::vector<int> nodes;  // sorted U_s
    Vector values;
};

/// Solves the sample estimating equation
///   (W_Us^{-1} P_sUs' W_s P_sUs / gamma + I) x = y_Us
/// over the observed sample graph (1-wave; gamma > 0). The system is not
/// symmetric in general: dense partial-pivoting solve with one refinement step.
SampleEmbedding snle_sample(const Graph& g, const SampleGraph& sg, const Vector& y,
                            const InclusionWeights& iw, const SnleConfig& cfg);
SampleEmbedding snle_sample(const PLambdaOperator& op, const SampleGraph& sg, const Vector& y,
                            const InclusionWeights& iw, double gamma);

/// Per-node conditional means of the sample embedding over replicated 1-wave
/// SBS with an SRS seed. Nodes never included report NaN mean and count 0.
struct ExpectedEmbedding {
    Vector mean;
    Eigen::VectorXi inclusion_count;
    long replications = 0;
};

ExpectedEmbedding snle_expected(const Graph& g, const Vector& y, const SnleConfig& cfg,
                                int seed_size, long replications, std::uint64_t rng_seed,
                                int threads = 1);

struct RankSweepRow {
    double lambda;
    int rank;
    double correlation;
};

/// For each lambda: full-graph embedding, then the best-correlated
/// Laplacian eigenvector's rank (gamma > 0).
std::vector<RankSweepRow> rank_sweep(const Graph& g, const Vector& y,
                                     const std::vector<double>& lambdas, double gamma,
                                     PVariant variant);

}  // namespace graphsee
