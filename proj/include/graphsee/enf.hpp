#pragma once

#include "graphsee/graph.hpp"
#include "graphsee/see.hpp"
#include "graphsee/types.hpp"

#include <cstdint>
#include <vector>

namespace graphsee {

/// Binary classification link. Logistic: p = 1/(1+e^-eta). Tanh:
/// p = (1+tanh eta)/2, which equals the logistic link at 2*eta.
enum class Link { Logistic, Tanh };

double link_probability(Link link, double eta);

/// Fitted eigen-neighbour-function model: embedding scale xi, classifier
/// parameters psi = (intercept, slope), link, and whether the embedding was
/// rescaled to unit norm before the classifier fit.
struct EnfModel {
    double xi = 0.0;
    Eigen::Vector2d psi = Eigen::Vector2d::Zero();
    Link link = Link::Logistic;
    bool normalized = false;
};

/// Neighbour smoothing ydot = M y, computed per node from neighbour lists.
/// Errors on isolated nodes.
Vector m_smooth(const Graph& g, const Vector& y);

/// Least-squares embedding scale xi0 = (ydot'y) / (ydot'ydot).
double fit_xi(const Graph& g, const Vector& y);

/// Embedding x = xi * ydot; optionally rescaled to unit Euclidean norm and
/// signed so corr(x, y) >= 0.
Vector embed(const Graph& g, const Vector& y, double xi, bool normalize);

/// Newton-Raphson solve of sum_i w_i (y_i - p_i)(1, x_i)' = 0. Detects
/// perfectly separated data up front (no finite solution exists) and errors.
/// x, y, w are aligned entry-wise.
Eigen::Vector2d fit_psi_weighted(const Vector& x, const Vector& y, const Vector& w, Link link);

/// Unweighted full-sample classifier fit.
Eigen::Vector2d fit_psi(const Vector& x, const Vector& y, Link link);

/// Indicator p_i > 0.5 per node.
Vector classify(const Vector& x, const Eigen::Vector2d& psi, Link link);

/// Weighted-ratio solution of the xi SEE over any weighted node sample:
/// xi = sum w ydot y / sum w ydot^2, with ydot evaluated per entry from the
/// entry node's neighbourhood. Reads y only at entry nodes and their
/// neighbours.
double solve_xi_see(const Graph& g, const Vector& y, const WeightedNodeSample& ws);

/// Seed-weighted xi estimate from a snowball sample (validates that every
/// entry is a seed node, whose neighbourhood is observed).
double sample_fit_xi(const Graph& g, const SampleGraph& sg, const Vector& y,
                     const WeightedNodeSample& ws);

/// Plug-in classifier fit over seed nodes: xhat holds the plug-in embedding
/// aligned with ws.entries.
Eigen::Vector2d sample_fit_psi(const SampleGraph& sg, const Vector& y,
                               const WeightedNodeSample& ws, const Vector& xhat,
                               Link link);

/// Per-node scores and full-graph Hessians for the variance sandwich.
Matrix enf_xi_scores(const Graph& g, const Vector& y, double xi0);   // N x 1
Matrix enf_xi_hessian(const Graph& g, const Vector& y);              // 1 x 1
Matrix enf_psi_scores(const Vector& x, const Vector& y, const Eigen::Vector2d& psi,
                      Link link);                                    // N x 2
Matrix enf_psi_hessian(const Vector& x, const Vector& y, const Eigen::Vector2d& psi,
                       Link link);                                   // 2 x 2

/// Replicated 1-wave SBS study of the xi SEE under an SRS seed: per-replicate
/// estimates, their mean/SE, and the per-node mean plug-in embedding
/// mean(xi_hat) * ydot. Replicates with a degenerate denominator error out
/// and are excluded but counted.
struct EnfSbsStudy {
    std::vector<double> xi_hats;
    long excluded = 0;
    double xi_mean = 0.0;
    double xi_se = 0.0;
    Vector xhat_mean;       // per node
    long replications = 0;  // requested
};

EnfSbsStudy enf_sbs_study(const Graph& g, const Vector& y, int seed_size,
                          long replications, std::uint64_t rng_seed, int threads = 1);

}  // namespace graphsee
