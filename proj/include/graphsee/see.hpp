#pragma once

#include "graphsee/graph.hpp"
#include "graphsee/sampling.hpp"
#include "graphsee/types.hpp"

#include <utility>
#include <vector>

namespace graphsee {

enum class SampleProvenance { SBSSeed, TRWStates, Census };

/// Weighted node multiset feeding a sample estimating equation. TRW
/// provenance permits repeated nodes (one entry per extracted state).
struct WeightedNodeSample {
    std::vector<std::pair<int, double>> entries;  // (node, weight > 0)
    SampleProvenance provenance = SampleProvenance::Census;
};

/// One entry per extracted state with weight 1/(n (d_i + r)).
WeightedNodeSample trw_weights(const WalkTrace& trace, const Graph& g);

/// One entry per seed node with weight 1/pi_k. Requires exact weights for
/// 1-wave samples or Monte-Carlo weights otherwise; rejects unusable
/// (never-included) Monte-Carlo nodes.
WeightedNodeSample sbs_weights(const SampleGraph& sg, const InclusionWeights& iw);

/// Census sample over the full node set, weights 1.
WeightedNodeSample census_weights(const Graph& g);

/// Independent replicate estimates combined as their mean, with the
/// between-replicate covariance estimate V = sum (e_l - mean)(e_l - mean)' / (L(L-1)).
struct ReplicateSet {
    std::vector<Vector> estimates;
    Vector combined;
    Matrix variance;  // empty when L == 1

    /// Errors when only one replicate is present.
    const Matrix& covariance() const;
};

ReplicateSet combine_replicates(const std::vector<Vector>& estimates);

/// Sandwich variance of a seed-weighted SEE solution at the graph-fit:
///   H^{-1} { sum_ij (w_i w_j Pr(i,j in s) - 1) u_i u_j' } H^{-1}
/// scores holds u_i(theta0)' per row (N x p); hessian is sum_i du_i/dtheta
/// over the full graph. Requires joint seed probabilities.
Matrix sbs_variance_approx(const Matrix& scores, const Matrix& hessian,
                           const InclusionWeights& iw);

}  // namespace graphsee
