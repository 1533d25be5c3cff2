#include "graphsee/see.hpp"

#include <algorithm>
#include <string>

namespace graphsee {

WeightedNodeSample trw_weights(const WalkTrace& trace, const Graph& g) {
    const double n = static_cast<double>(trace.states.size());
    WeightedNodeSample ws;
    ws.provenance = SampleProvenance::TRWStates;
    ws.entries.reserve(trace.states.size());
    for (int state : trace.states) {
        if (state < 0 || state >= g.node_count())
            throw DataError("walk trace state out of range for this graph");
        ws.entries.emplace_back(state, 1.0 / (n * (g.degree(state) + trace.config.r)));
    }
    return ws;
}

WeightedNodeSample sbs_weights(const SampleGraph& sg, const InclusionWeights& iw) {
    if (iw.method == WeightMethod::ExactSRS1Wave && sg.t_waves != 1)
        throw DataError("exact 1-wave weights cannot serve a multi-wave sample; use Monte Carlo");
    WeightedNodeSample ws;
    ws.provenance = SampleProvenance::SBSSeed;
    ws.entries.reserve(sg.seed.size());
    for (int k : sg.seed) {
        if (iw.seed_prob[k] <= 0.0)
            throw NumericError("node " + std::to_string(k + 1) +
                               " has an unusable (zero-frequency) inclusion weight");
        ws.entries.emplace_back(k, 1.0 / iw.seed_prob[k]);
    }
    return ws;
}

WeightedNodeSample census_weights(const Graph& g) {
    WeightedNodeSample ws;
    ws.provenance = SampleProvenance::Census;
    ws.entries.reserve(g.node_count());
    for (int i = 0; i < g.node_count(); ++i) ws.entries.emplace_back(i, 1.0);
    return ws;
}

const Matrix& ReplicateSet::covariance() const {
    if (variance.size() == 0)
        throw NumericError("variance undefined for a single replicate");
    return variance;
}

ReplicateSet combine_replicates(const std::vector<Vector>& estimates) {
    if (estimates.empty()) throw DataError("no replicate estimates to combine");
    const auto p = estimates.front().size();
    for (const auto& e : estimates)
        if (e.size() != p) throw DataError("replicate estimates differ in dimension");

    ReplicateSet rs;
    rs.estimates = estimates;
    rs.combined = Vector::Zero(p);
    for (const auto& e : estimates) rs.combined += e;
    const double L = static_cast<double>(estimates.size());
    rs.combined /= L;
    if (estimates.size() >= 2) {
        rs.variance = Matrix::Zero(p, p);
        for (const auto& e : estimates) {
            const Vector d = e - rs.combined;
            rs.variance += d * d.transpose();
        }
        rs.variance /= L * (L - 1.0);
    }
    return rs;
}

Matrix sbs_variance_approx(const Matrix& scores, const Matrix& hessian,
                           const InclusionWeights& iw) {
    const auto n = scores.rows();
    const auto p = scores.cols();
    if (hessian.rows() != p || hessian.cols() != p)
        throw DataError("hessian dimension does not match the score dimension");
    if (iw.joint_seed_prob.size() == 0)
        throw DataError("variance sandwich needs joint seed inclusion probabilities");
    if (iw.joint_seed_prob.rows() != n)
        throw DataError("inclusion weights do not match the score count");

    Matrix mid = Matrix::Zero(p, p);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double wi = 1.0 / iw.seed_prob[i];
        for (Eigen::Index j = 0; j < n; ++j) {
            const double wj = 1.0 / iw.seed_prob[j];
            const double factor = wi * wj * iw.joint_seed_prob(i, j) - 1.0;
            mid.noalias() += factor * scores.row(i).transpose() * scores.row(j);
        }
    }
    const Matrix hinv = hessian.inverse();
    return hinv * mid * hinv.transpose();
}

}  // namespace graphsee
