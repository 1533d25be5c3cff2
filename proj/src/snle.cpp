#include "graphsee/snle.hpp"

#include "graphsee/parallel.hpp"
#include "graphsee/rng.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>

namespace graphsee {

namespace {

/// Dense solve with one step of iterative refinement; checks the residual.
template <typename Solver>
Vector refined_solve(const Solver& solver, const Matrix& a, const Vector& b, double tol) {
    Vector x = solver.solve(b);
    const Vector r = b - a * x;
    x += solver.solve(r);
    const double resid = (b - a * x).norm();
    if (!(resid <= tol * std::max(1.0, b.norm())))
        throw NumericError("linear solve failed to reach the required residual");
    return x;
}

}  // namespace

Vector snle_full(const Graph& g, const Vector& y, const SnleConfig& cfg) {
    if (y.size() != g.node_count()) throw DataError("label vector length does not match the graph");
    if (cfg.gamma < 0.0) throw DataError("gamma must be nonnegative");
    const PLambdaOperator op = p_lambda(g, cfg.lambda, cfg.variant);

    if (cfg.gamma == 0.0) {
        const EigenSystem es = eigensystem(op.matrix.transpose() * op.matrix);
        Vector x = es.eigenvectors.col(0);  // unit norm by construction
        const Vector yc = y.array() - y.mean();
        if (yc.norm() > 0.0) {
            const Vector xc = x.array() - x.mean();
            if (xc.norm() > 0.0 && xc.dot(yc) < 0.0) x = -x;
        }
        return x;
    }

    Matrix system = op.matrix.transpose() * op.matrix / cfg.gamma;
    system.diagonal().array() += 1.0;
    Eigen::LDLT<Matrix> ldlt(system);
    if (ldlt.info() != Eigen::Success) throw NumericError("factorization of the SNLE system failed");
    return refined_solve(ldlt, system, y, 1e-10);
}

double snle_loss(const Graph& g, const Vector& y, const SnleConfig& cfg, const Vector& x) {
    if (x.size() != g.node_count() || y.size() != g.node_count())
        throw DataError("vector length does not match the graph");
    const PLambdaOperator op = p_lambda(g, cfg.lambda, cfg.variant);
    double loss = 0.0;
    for (int i = 0; i < g.node_count(); ++i) {
        double xdot = 0.0;
        for (int j : op.looped_neighbourhoods[i]) xdot += op.matrix(i, j) * x[j];
        loss += xdot * xdot;
        const double resid = y[i] - x[i];
        loss += cfg.gamma * resid * resid;
    }
    return loss;
}

SampleEmbedding snle_sample(const PLambdaOperator& op, const SampleGraph& sg, const Vector& y,
                            const InclusionWeights& iw, double gamma) {
    if (gamma <= 0.0) throw DataError("sample embedding requires gamma > 0");
    if (sg.t_waves != 1) throw DataError("sample embedding covers 1-wave samples only");
    const auto ns = static_cast<Eigen::Index>(sg.seed.size());
    const auto nu = static_cast<Eigen::Index>(sg.sampled_nodes.size());

    Matrix p_su(ns, nu);
    for (Eigen::Index a = 0; a < ns; ++a)
        for (Eigen::Index b = 0; b < nu; ++b)
            p_su(a, b) = op.matrix(sg.seed[a], sg.sampled_nodes[b]);

    Vector ws(ns), wu_inv(nu);
    for (Eigen::Index a = 0; a < ns; ++a) {
        const int k = sg.seed[a];
        if (iw.seed_prob[k] <= 0.0) throw NumericError("unusable seed inclusion weight");
        ws[a] = 1.0 / iw.seed_prob[k];
    }
    for (Eigen::Index b = 0; b < nu; ++b) {
        const int j = sg.sampled_nodes[b];
        if (iw.node_prob[j] <= 0.0) throw NumericError("unusable node inclusion weight");
        wu_inv[b] = iw.node_prob[j];  // inverse of the diag(1/pidot) weight
    }

    // (W_Us^{-1} P' W_s P / gamma + I) x = y_Us; not symmetric in general.
    Matrix system = wu_inv.asDiagonal() * (p_su.transpose() * ws.asDiagonal() * p_su) / gamma;
    system.diagonal().array() += 1.0;
    Vector y_us(nu);
    for (Eigen::Index b = 0; b < nu; ++b) y_us[b] = y[sg.sampled_nodes[b]];

    Eigen::PartialPivLU<Matrix> lu(system);
    SampleEmbedding se;
    se.nodes = sg.sampled_nodes;
    se.values = refined_solve(lu, system, y_us, 1e-10);
    return se;
}

SampleEmbedding snle_sample(const Graph& g, const SampleGraph& sg, const Vector& y,
                            const InclusionWeights& iw, const SnleConfig& cfg) {
    return snle_sample(p_lambda(g, cfg.lambda, cfg.variant), sg, y, iw, cfg.gamma);
}

ExpectedEmbedding snle_expected(const Graph& g, const Vector& y, const SnleConfig& cfg,
                                int seed_size, long replications, std::uint64_t rng_seed,
                                int threads) {
    const int n = g.node_count();
    if (replications < 1) throw DataError("need at least one replication");
    const PLambdaOperator op = p_lambda(g, cfg.lambda, cfg.variant);
    const InclusionWeights iw = srs_inclusion_weights(g, seed_size, 1);

    struct Chunk {
        Vector sums;
        Eigen::VectorXi counts;
    };
    const int max_chunks = threads < 1 ? 1 : threads;
    std::vector<Chunk> chunks(max_chunks);
    for (auto& c : chunks) {
        c.sums = Vector::Zero(n);
        c.counts = Eigen::VectorXi::Zero(n);
    }

    parallel_chunks(replications, threads, [&](long begin, long end, int chunk) {
        auto& c = chunks[chunk];
        for (long rep = begin; rep < end; ++rep) {
            SplitMix64 rng(rng_seed + static_cast<std::uint64_t>(rep));
            const auto s0 = srs_sample(n, seed_size, rng);
            const auto sg = run_sbs(g, s0, 1);
            const auto se = snle_sample(op, sg, y, iw, cfg.gamma);
            for (std::size_t b = 0; b < se.nodes.size(); ++b) {
                c.sums[se.nodes[b]] += se.values[static_cast<Eigen::Index>(b)];
                ++c.counts[se.nodes[b]];
            }
        }
    });

    ExpectedEmbedding ee;
    ee.replications = replications;
    ee.mean = Vector::Zero(n);
    ee.inclusion_count = Eigen::VectorXi::Zero(n);
    Vector sums = Vector::Zero(n);
    for (const auto& c : chunks) {
        sums += c.sums;
        ee.inclusion_count += c.counts;
    }
    for (int i = 0; i < n; ++i)
        ee.mean[i] = ee.inclusion_count[i] > 0
                         ? sums[i] / ee.inclusion_count[i]
                         : std::numeric_limits<double>::quiet_NaN();
    return ee;
}

std::vector<RankSweepRow> rank_sweep(const Graph& g, const Vector& y,
                                     const std::vector<double>& lambdas, double gamma,
                                     PVariant variant) {
    if (gamma <= 0.0) throw DataError("rank sweep requires gamma > 0");
    const EigenSystem es = eigensystem(normalized_laplacian(g));
    std::vector<RankSweepRow> rows;
    rows.reserve(lambdas.size());
    for (double lambda : lambdas) {
        const Vector x0 = snle_full(g, y, SnleConfig{lambda, gamma, variant});
        const RankCorrelation rc = best_correlated_eigenvector(x0, es);
        rows.push_back(RankSweepRow{lambda, rc.rank, rc.correlation});
    }
    return rows;
}

}  // namespace graphsee
