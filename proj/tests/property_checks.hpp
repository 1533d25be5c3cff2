#pragma once

#include "graphsee/eigen_system.hpp"
#include "graphsee/enf.hpp"
#include "graphsee/operators.hpp"
#include "graphsee/sampling.hpp"
#include "graphsee/see.hpp"
#include "graphsee/snle.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

// Invariant checks shared by the unit suite and the acceptance suite.
// Each check throws std::runtime_error with a description on violation.

namespace props {

using namespace graphsee;

inline void require(bool ok, const std::string& what) {
    if (!ok) throw std::runtime_error(what);
}

inline void check_operator_symmetry(const Graph& g) {
    const auto sym_err = [](const Matrix& m) {
        return (m - m.transpose()).cwiseAbs().maxCoeff();
    };
    require(sym_err(normalized_adjacency(g)) <= 1e-12, "M not symmetric");
    require(sym_err(looped_normalized_adjacency(g)) <= 1e-12, "looped M not symmetric");
    require(sym_err(normalized_laplacian(g)) <= 1e-12, "Laplacian not symmetric");
    require(sym_err(p_lambda(g, 0.7, PVariant::PlainM).matrix) <= 1e-12, "P(M) not symmetric");
    require(sym_err(p_lambda(g, 0.7, PVariant::LoopedM).matrix) <= 1e-12,
            "P(looped M) not symmetric");

    int degree_sum = 0;
    for (int i = 0; i < g.node_count(); ++i) degree_sum += g.degree(i);
    require(degree_sum % 2 == 0, "degree sum must be even");
    require(degree_sum == 2 * g.edge_count(), "degree sum != twice the edge count");
    for (int i = 0; i < g.node_count(); ++i)
        for (int j : g.neighbors(i)) require(g.has_edge(j, i), "adjacency not symmetric");
}

inline void check_eigen_identities(const Graph& g) {
    const Matrix l = normalized_laplacian(g);
    const Matrix m = normalized_adjacency(g);
    const EigenSystem es = eigensystem(l);
    const int n = g.node_count();

    require(es.eigenvalues.minCoeff() >= -1e-9 && es.eigenvalues.maxCoeff() <= 2.0 + 1e-9,
            "Laplacian eigenvalues outside [0,2]");
    const Matrix recon = es.eigenvectors * es.eigenvalues.asDiagonal() * es.eigenvectors.transpose();
    require((l - recon).cwiseAbs().maxCoeff() <= 1e-8, "eigendecomposition does not reconstruct");

    // lambda = 0 eigenvector is proportional to sqrt(degrees) on a connected graph
    if (g.connected()) {
        Vector sq = g.degree_vector().cwiseSqrt();
        sq /= sq.norm();
        require((es.eigenvectors.col(0) - sq).cwiseAbs().maxCoeff() <= 1e-7,
                "zero eigenvector not proportional to sqrt(degrees)");
        int below = 0;
        for (int k = 0; k < n; ++k) below += es.eigenvalues[k] < 1e-9;
        require(below == 1, "connected graph must have exactly one zero eigenvalue");
    }

    for (int k = 0; k < n; ++k) {
        const double lam = es.eigenvalues[k];
        const Vector z = es.eigenvectors.col(k);
        if (std::abs(1.0 - lam) > 1e-6)
            require((z - m * z / (1.0 - lam)).cwiseAbs().maxCoeff() <= 1e-8,
                    "eigenvector identity z = (1-lambda)^-1 M z violated");
        const PLambdaOperator op = p_lambda(g, lam, PVariant::PlainM);
        require((op.matrix * z).cwiseAbs().maxCoeff() <= 1e-8, "P_lambda z != 0 at an eigenpair");
    }
}

inline void check_trw_rows(const Graph& g) {
    for (double r : {0.0, 0.7, 2.0}) {
        WalkConfig cfg;
        cfg.r = r;
        for (int i = 0; i < g.node_count(); ++i) {
            if (r == 0.0 && g.degree(i) == 0) continue;
            const Vector row = trw_transition_row(g, cfg, i);
            require(row.minCoeff() >= 0.0, "negative transition probability");
            require(std::abs(row.sum() - 1.0) <= 1e-12, "transition row does not sum to 1");
        }
    }
}

inline void check_sbs_extension(const Graph& g, std::uint64_t seed) {
    SplitMix64 rng(seed);
    const int n = g.node_count();
    const int n0 = 1 + static_cast<int>(rng.below(std::max(1, n / 3)));
    const auto s0 = srs_sample(n, n0, rng);
    const SampleGraph a = run_sbs(g, s0, 2);
    const SampleGraph b = run_sbs(g, s0, 3);
    require(b.waves.size() >= a.waves.size(), "wave list shrank under a larger T");
    for (std::size_t t = 0; t < a.waves.size(); ++t)
        require(a.waves[t] == b.waves[t], "extending T altered an earlier wave");
    std::vector<char> seen(n, 0);
    for (const auto& wave : b.waves)
        for (int v : wave) {
            require(!seen[v], "waves are not disjoint");
            seen[v] = 1;
        }
}

inline std::vector<int> census_nodes(const Graph& g) {
    std::vector<int> all(g.node_count());
    for (int i = 0; i < g.node_count(); ++i) all[i] = i;
    return all;
}

inline void check_census_reductions(const Graph& g, const Vector& y) {
    const WeightedNodeSample census = census_weights(g);
    const double xi0 = fit_xi(g, y);
    require(std::abs(solve_xi_see(g, y, census) - xi0) <= 1e-10,
            "census xi SEE does not reduce to the graph fit");

    SampleGraph all = run_sbs(g, census_nodes(g), 1);
    InclusionWeights iw = srs_inclusion_weights(g, g.node_count(), 1);
    const SnleConfig cfg{0.35, 0.8, PVariant::LoopedM};
    const Vector x_full = snle_full(g, y, cfg);
    const SampleEmbedding se = snle_sample(g, all, y, iw, cfg);
    require(static_cast<int>(se.nodes.size()) == g.node_count(), "census sample misses nodes");
    for (std::size_t b = 0; b < se.nodes.size(); ++b)
        require(std::abs(se.values[static_cast<Eigen::Index>(b)] - x_full[se.nodes[b]]) <= 1e-10,
                "census SNLE sample does not reduce to the full fit");

    try {
        const Vector x = embed(g, y, xi0, false);
        const Eigen::Vector2d psi_full = fit_psi(x, y, Link::Logistic);
        Vector xs(g.node_count());
        for (int i = 0; i < g.node_count(); ++i) xs[i] = x[i];
        const Eigen::Vector2d psi_census =
            sample_fit_psi(all, y, census, xs, Link::Logistic);
        require((psi_full - psi_census).cwiseAbs().maxCoeff() <= 1e-8,
                "census psi SEE does not reduce to the graph fit");
    } catch (const NumericError&) {
        // separated labels admit no classifier fit; reduction is then vacuous
    }
}

inline void check_gradients(const Graph& g, const Vector& y, std::uint64_t seed) {
    SplitMix64 rng(seed);
    const int n = g.node_count();

    // SNLE: matrix-form gradient vs central differences of the node-sum loss
    const SnleConfig cfg{0.45, 0.6, PVariant::PlainM};
    const PLambdaOperator op = p_lambda(g, cfg.lambda, cfg.variant);
    Vector x(n);
    for (int i = 0; i < n; ++i) x[i] = rng.uniform() * 2.0 - 1.0;
    const Vector grad = 2.0 * (op.matrix.transpose() * (op.matrix * x)) - 2.0 * cfg.gamma * (y - x);
    const double h = 1e-5;
    for (int i = 0; i < n; ++i) {
        Vector xp = x, xm = x;
        xp[i] += h;
        xm[i] -= h;
        const double fd = (snle_loss(g, y, cfg, xp) - snle_loss(g, y, cfg, xm)) / (2.0 * h);
        const double scale = std::max({std::abs(grad[i]), std::abs(fd), 1e-8});
        require(std::abs(grad[i] - fd) / scale <= 1e-6, "SNLE gradient mismatch vs finite differences");
    }

    // node-sum loss equals the quadratic form
    const double node_sum = snle_loss(g, y, cfg, x);
    const double quad = (op.matrix * x).squaredNorm() + cfg.gamma * (y - x).squaredNorm();
    require(std::abs(node_sum - quad) <= 1e-10 * std::max(1.0, std::abs(quad)),
            "node-sum loss differs from the quadratic form");

    // classifier score vs finite differences of the log-likelihood
    const Vector xe = embed(g, y, fit_xi(g, y), false);
    const Eigen::Vector2d psi(0.2, -0.4);
    for (Link link : {Link::Logistic, Link::Tanh}) {
        const Matrix scores = enf_psi_scores(xe, y, psi, link);
        const Vector u = scores.colwise().sum();
        const double hp = 1e-6;
        const auto loglik = [&](const Eigen::Vector2d& ps) {
            double ll = 0.0;
            for (int i = 0; i < n; ++i) {
                const double p = link_probability(link, ps[0] + ps[1] * xe[i]);
                ll += y[i] * std::log(p) + (1.0 - y[i]) * std::log(1.0 - p);
            }
            return ll;
        };
        // tanh link: score is proportional to the log-likelihood gradient (factor 1/2)
        const double factor = link == Link::Logistic ? 1.0 : 0.5;
        for (int c = 0; c < 2; ++c) {
            Eigen::Vector2d pp = psi, pm = psi;
            pp[c] += hp;
            pm[c] -= hp;
            const double fd = factor * (loglik(pp) - loglik(pm)) / (2.0 * hp);
            const double scale = std::max({std::abs(u[c]), std::abs(fd), 1e-8});
            require(std::abs(u[c] - fd) / scale <= 1e-6,
                    "classifier score mismatch vs log-likelihood finite differences");
        }
    }

    // fit_xi minimizes the quadratic loss
    const double xi0 = fit_xi(g, y);
    const Vector ydot = m_smooth(g, y);
    const auto enf_loss = [&](double xi) { return (y - xi * ydot).squaredNorm(); };
    require(enf_loss(xi0) <= enf_loss(xi0 + 1e-3) && enf_loss(xi0) <= enf_loss(xi0 - 1e-3),
            "xi graph fit is not a loss minimizer");
}

inline void check_all(const Graph& g, const Vector& y, std::uint64_t seed) {
    check_operator_symmetry(g);
    check_eigen_identities(g);
    check_trw_rows(g);
    check_sbs_extension(g, seed);
    check_census_reductions(g, y);
    check_gradients(g, y, seed + 1);
}

}  // namespace props
