#include "graphsee/enf.hpp"

#include "graphsee/parallel.hpp"
#include "graphsee/rng.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace graphsee {

double link_probability(Link link, double eta) {
    if (link == Link::Logistic) return 1.0 / (1.0 + std::exp(-eta));
    return 0.5 * (1.0 + std::tanh(eta));
}

namespace {

/// d p / d eta for the link.
double link_density(Link link, double eta) {
    if (link == Link::Logistic) {
        const double p = 1.0 / (1.0 + std::exp(-eta));
        return p * (1.0 - p);
    }
    const double t = std::tanh(eta);
    return 0.5 * (1.0 + t) * (1.0 - t);
}

double smoothed_value(const Graph& g, const Vector& y, int i) {
    const double di = g.degree(i);
    double acc = 0.0;
    for (int j : g.neighbors(i)) acc += y[j] / std::sqrt(di * g.degree(j));
    return acc;
}

}  // namespace

Vector m_smooth(const Graph& g, const Vector& y) {
    const int n = g.node_count();
    if (y.size() != n) throw DataError("value vector length does not match the graph");
    for (int i = 0; i < n; ++i)
        if (g.degree(i) == 0)
            throw DataError("node " + std::to_string(i + 1) + " is isolated; smoothing undefined");
    Vector out(n);
    for (int i = 0; i < n; ++i) out[i] = smoothed_value(g, y, i);
    return out;
}

double fit_xi(const Graph& g, const Vector& y) {
    const Vector ydot = m_smooth(g, y);
    const double den = ydot.squaredNorm();
    if (den == 0.0) throw NumericError("smoothed values vanish identically; xi undefined");
    return ydot.dot(y) / den;
}

Vector embed(const Graph& g, const Vector& y, double xi, bool normalize) {
    if (!std::isfinite(xi)) throw DataError("xi must be finite");
    Vector x = xi * m_smooth(g, y);
    if (!normalize) return x;
    const double norm = x.norm();
    if (norm == 0.0) throw NumericError("cannot normalize a zero embedding");
    x /= norm;
    const Vector yc = y.array() - y.mean();
    if (yc.norm() > 0.0 && x.dot(yc) < 0.0) x = -x;
    return x;
}

namespace {

bool perfectly_separated(const Vector& x, const Vector& y) {
    double min1 = std::numeric_limits<double>::infinity(), max1 = -min1;
    double min0 = min1, max0 = -min1;
    bool any1 = false, any0 = false;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        if (y[i] == 1.0) {
            any1 = true;
            min1 = std::min(min1, x[i]);
            max1 = std::max(max1, x[i]);
        } else {
            any0 = true;
            min0 = std::min(min0, x[i]);
            max0 = std::max(max0, x[i]);
        }
    }
    if (!any1 || !any0) return true;  // one-class data admits no finite fit
    return min1 > max0 || max1 < min0;
}

double negative_log_likelihood(const Vector& x, const Vector& y, const Vector& w, Link link,
                               const Eigen::Vector2d& psi) {
    double nll = 0.0;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        const double p = link_probability(link, psi[0] + psi[1] * x[i]);
        const double eps = 1e-300;
        nll -= w[i] * (y[i] * std::log(std::max(p, eps)) +
                       (1.0 - y[i]) * std::log(std::max(1.0 - p, eps)));
    }
    return nll;
}

}  // namespace

Eigen::Vector2d fit_psi_weighted(const Vector& x, const Vector& y, const Vector& w, Link link) {
    if (x.size() != y.size() || x.size() != w.size())
        throw DataError("classifier inputs differ in length");
    for (Eigen::Index i = 0; i < y.size(); ++i)
        if (y[i] != 0.0 && y[i] != 1.0) throw DataError("labels must be 0 or 1");
    if (perfectly_separated(x, y))
        throw NumericError("classes are perfectly separated; no finite classifier fit exists");
    if (x.maxCoeff() == x.minCoeff())
        throw NumericError("singular classifier Hessian: embedding values are constant");

    constexpr int kMaxIterations = 100;
    constexpr int kMaxHalvings = 20;
    constexpr double kScoreTol = 1e-10;

    Eigen::Vector2d psi = Eigen::Vector2d::Zero();
    double nll = negative_log_likelihood(x, y, w, link, psi);
    for (int it = 0; it < kMaxIterations; ++it) {
        Eigen::Vector2d score = Eigen::Vector2d::Zero();
        Eigen::Matrix2d hess = Eigen::Matrix2d::Zero();
        for (Eigen::Index i = 0; i < x.size(); ++i) {
            const double eta = psi[0] + psi[1] * x[i];
            const Eigen::Vector2d z(1.0, x[i]);
            score += w[i] * (y[i] - link_probability(link, eta)) * z;
            hess -= w[i] * link_density(link, eta) * z * z.transpose();
        }
        if (score.norm() <= kScoreTol) return psi;

        Eigen::FullPivLU<Eigen::Matrix2d> lu(hess);
        if (!lu.isInvertible())
            throw NumericError("singular classifier Hessian (degenerate embedding values)");
        const Eigen::Vector2d step = -lu.solve(score);
        double scale = 1.0;
        for (int h = 0; h <= kMaxHalvings; ++h, scale *= 0.5) {
            const Eigen::Vector2d cand = psi + scale * step;
            const double cand_nll = negative_log_likelihood(x, y, w, link, cand);
            if (cand_nll <= nll) {
                psi = cand;
                nll = cand_nll;
                break;
            }
            if (h == kMaxHalvings)
                throw NumericError("classifier fit stalled; data is likely near-separated");
        }
    }
    throw NumericError("classifier fit did not converge in 100 iterations; likely separation");
}

Eigen::Vector2d fit_psi(const Vector& x, const Vector& y, Link link) {
    return fit_psi_weighted(x, y, Vector::Ones(x.size()), link);
}

Vector classify(const Vector& x, const Eigen::Vector2d& psi, Link link) {
    Vector out(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i)
        out[i] = link_probability(link, psi[0] + psi[1] * x[i]) > 0.5 ? 1.0 : 0.0;
    return out;
}

double solve_xi_see(const Graph& g, const Vector& y, const WeightedNodeSample& ws) {
    if (ws.entries.empty()) throw DataError("empty node sample");
    double num = 0.0, den = 0.0;
    for (const auto& [node, weight] : ws.entries) {
        if (weight <= 0.0 || !std::isfinite(weight))
            throw DataError("weights must be positive and finite");
        const double ydot = smoothed_value(g, y, node);
        num += weight * ydot * y[node];
        den += weight * ydot * ydot;
    }
    if (den == 0.0)
        throw NumericError("weighted smoothed values vanish on the sample; xi undefined");
    return num / den;
}

double sample_fit_xi(const Graph& g, const SampleGraph& sg, const Vector& y,
                     const WeightedNodeSample& ws) {
    for (const auto& [node, weight] : ws.entries) {
        (void)weight;
        if (!std::binary_search(sg.seed.begin(), sg.seed.end(), node))
            throw DataError("sample entry " + std::to_string(node + 1) +
                            " is not a seed node; its neighbourhood is unobserved");
    }
    return solve_xi_see(g, y, ws);
}

Eigen::Vector2d sample_fit_psi(const SampleGraph& sg, const Vector& y,
                               const WeightedNodeSample& ws, const Vector& xhat, Link link) {
    const auto m = static_cast<Eigen::Index>(ws.entries.size());
    if (xhat.size() != m) throw DataError("plug-in embedding length does not match the sample");
    Vector xs(m), ys(m), wv(m);
    for (Eigen::Index e = 0; e < m; ++e) {
        const auto& [node, weight] = ws.entries[static_cast<std::size_t>(e)];
        if (!std::binary_search(sg.sampled_nodes.begin(), sg.sampled_nodes.end(), node))
            throw DataError("sample entry outside the observed sample graph");
        xs[e] = xhat[e];
        ys[e] = y[node];
        wv[e] = weight;
    }
    return fit_psi_weighted(xs, ys, wv, link);
}

Matrix enf_xi_scores(const Graph& g, const Vector& y, double xi0) {
    const Vector ydot = m_smooth(g, y);
    Matrix scores(g.node_count(), 1);
    scores.col(0) = ydot.cwiseProduct(y - xi0 * ydot);
    return scores;
}

Matrix enf_xi_hessian(const Graph& g, const Vector& y) {
    Matrix h(1, 1);
    h(0, 0) = -m_smooth(g, y).squaredNorm();
    return h;
}

Matrix enf_psi_scores(const Vector& x, const Vector& y, const Eigen::Vector2d& psi, Link link) {
    Matrix scores(x.size(), 2);
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        const double res = y[i] - link_probability(link, psi[0] + psi[1] * x[i]);
        scores(i, 0) = res;
        scores(i, 1) = res * x[i];
    }
    return scores;
}

Matrix enf_psi_hessian(const Vector& x, const Vector& y, const Eigen::Vector2d& psi, Link link) {
    (void)y;
    Eigen::Matrix2d hess = Eigen::Matrix2d::Zero();
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        const Eigen::Vector2d z(1.0, x[i]);
        hess -= link_density(link, psi[0] + psi[1] * x[i]) * z * z.transpose();
    }
    return hess;
}

EnfSbsStudy enf_sbs_study(const Graph& g, const Vector& y, int seed_size, long replications,
                          std::uint64_t rng_seed, int threads) {
    const int n = g.node_count();
    if (replications < 1) throw DataError("need at least one replication");
    const Vector ydot = m_smooth(g, y);

    struct Chunk {
        std::vector<double> xi_hats;
        long excluded = 0;
    };
    const int max_chunks = threads < 1 ? 1 : threads;
    std::vector<Chunk> chunks(max_chunks);

    parallel_chunks(replications, threads, [&](long begin, long end, int chunk) {
        auto& c = chunks[chunk];
        for (long rep = begin; rep < end; ++rep) {
            SplitMix64 rng(rng_seed + static_cast<std::uint64_t>(rep));
            const auto s0 = srs_sample(n, seed_size, rng);
            double num = 0.0, den = 0.0;
            for (int k : s0) {
                num += ydot[k] * y[k];
                den += ydot[k] * ydot[k];
            }
            if (den == 0.0) {
                ++c.excluded;
                continue;
            }
            c.xi_hats.push_back(num / den);
        }
    });

    EnfSbsStudy study;
    study.replications = replications;
    for (const auto& c : chunks) {
        study.excluded += c.excluded;
        study.xi_hats.insert(study.xi_hats.end(), c.xi_hats.begin(), c.xi_hats.end());
    }
    if (study.xi_hats.empty()) throw NumericError("every replicate was degenerate");

    double sum = 0.0;
    for (double v : study.xi_hats) sum += v;
    study.xi_mean = sum / static_cast<double>(study.xi_hats.size());
    double ss = 0.0;
    for (double v : study.xi_hats) ss += (v - study.xi_mean) * (v - study.xi_mean);
    const auto used = static_cast<double>(study.xi_hats.size());
    study.xi_se = used > 1 ? std::sqrt(ss / (used - 1.0) / used) : 0.0;
    study.xhat_mean = study.xi_mean * ydot;
    return study;
}

}  // namespace graphsee
