#include "graphsee/sampling.hpp"

#include "graphsee/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <set>
#include <string>

namespace graphsee {

Vector trw_transition_row(const Graph& g, const WalkConfig& cfg, int node) {
    const int n = g.node_count();
    if (node < 0 || node >= n) throw DataError("invalid node " + std::to_string(node + 1));
    if (cfg.r < 0.0) throw DataError("tuning constant r must be nonnegative");
    const double d = g.degree(node);
    if (cfg.r == 0.0 && d == 0.0)
        throw DataError("node " + std::to_string(node + 1) + " is absorbing under r = 0");
    Vector row = Vector::Constant(n, cfg.r / (n * (d + cfg.r)));
    const double edge_prob = (1.0 + cfg.r / n) / (d + cfg.r);
    for (int j : g.neighbors(node)) row[j] = edge_prob;
    return row;
}

namespace {

long effective_burn_in(const Graph& g, const WalkConfig& cfg) {
    return cfg.burn_in >= 0 ? cfg.burn_in : 50L * g.node_count();
}

/// One transition: jump uniformly (self included) with probability r/(d+r),
/// otherwise move along a uniform incident edge. Matches trw_transition_row.
int trw_step(const Graph& g, double r, int current, SplitMix64& rng) {
    const double d = g.degree(current);
    if (r == 0.0 && d == 0.0)
        throw DataError("node " + std::to_string(current + 1) + " is absorbing under r = 0");
    const bool jump = d == 0.0 || rng.uniform() * (d + r) < r;
    if (jump) return static_cast<int>(rng.below(g.node_count()));
    const auto& nb = g.neighbors(current);
    return nb[static_cast<std::size_t>(rng.below(nb.size()))];
}

}  // namespace

WalkTrace run_trw(const Graph& g, const WalkConfig& cfg, int start) {
    const int n = g.node_count();
    if (start < 0 || start >= n) throw DataError("invalid start node");
    if (cfg.r < 0.0) throw DataError("tuning constant r must be nonnegative");
    if (cfg.r == 0.0 && !g.connected())
        throw DataError("r = 0 requires a connected graph (pure edge walk is reducible)");
    if (cfg.spacing < 1) throw DataError("spacing must be positive");
    if (cfg.n_states < 1) throw DataError("n_states must be positive");

    WalkTrace trace;
    trace.config = cfg;
    trace.config.burn_in = effective_burn_in(g, cfg);
    trace.states.reserve(cfg.n_states);
    trace.visit_counts.assign(n, 0);

    SplitMix64 rng(cfg.rng_seed);
    int current = start;
    for (long t = 0; t < trace.config.burn_in; ++t) current = trw_step(g, cfg.r, current, rng);
    for (int k = 0; k < cfg.n_states; ++k) {
        for (int t = 0; t < cfg.spacing; ++t) current = trw_step(g, cfg.r, current, rng);
        trace.states.push_back(current);
        ++trace.visit_counts[current];
    }
    return trace;
}

SampleGraph run_sbs(const Graph& g, const std::vector<int>& s0, int t_waves) {
    const int n = g.node_count();
    if (s0.empty()) throw DataError("initial sample must be nonempty");
    if (t_waves < 1) throw DataError("wave count must be at least 1");
    for (int v : s0)
        if (v < 0 || v >= n) throw DataError("initial sample node out of range");

    SampleGraph sg;
    sg.t_waves = t_waves;
    std::vector<char> in_seed(n, 0);
    std::set<int> wave0(s0.begin(), s0.end());
    sg.waves.emplace_back(wave0.begin(), wave0.end());
    for (int v : wave0) in_seed[v] = 1;

    for (int t = 1; t < t_waves; ++t) {
        std::set<int> next;
        for (int v : sg.waves.back())
            for (int w : g.neighbors(v))
                if (!in_seed[w]) next.insert(w);
        if (next.empty()) break;
        sg.waves.emplace_back(next.begin(), next.end());
        for (int v : next) in_seed[v] = 1;
    }

    for (int v = 0; v < n; ++v)
        if (in_seed[v]) sg.seed.push_back(v);

    std::set<int> us(sg.seed.begin(), sg.seed.end());
    for (int k : sg.seed) {
        sg.observed_rows.push_back(g.neighbors(k));
        us.insert(g.neighbors(k).begin(), g.neighbors(k).end());
    }
    sg.sampled_nodes.assign(us.begin(), us.end());
    return sg;
}

namespace {

/// C(population - drop, n) / C(population, n), the probability that an SRS of
/// size n avoids a fixed set of `drop` nodes. Stable product form.
double srs_avoidance(int population, int n, int drop) {
    if (population - drop < n) return 0.0;
    double q = 1.0;
    for (int t = 0; t < drop; ++t)
        q *= static_cast<double>(population - n - t) / static_cast<double>(population - t);
    return q;
}

}  // namespace

InclusionWeights srs_inclusion_weights(const Graph& g, int n, int t_waves) {
    const int nn = g.node_count();
    if (t_waves != 1)
        throw DataError("exact inclusion weights cover 1-wave sampling only; use Monte Carlo");
    if (n < 1 || n > nn) throw DataError("seed size out of range");

    InclusionWeights iw;
    iw.method = WeightMethod::ExactSRS1Wave;
    iw.seed_prob = Vector::Constant(nn, static_cast<double>(n) / nn);
    iw.node_prob.resize(nn);
    for (int j = 0; j < nn; ++j) iw.node_prob[j] = 1.0 - srs_avoidance(nn, n, g.degree(j) + 1);

    iw.joint_seed_prob.resize(nn, nn);
    const double p_single = static_cast<double>(n) / nn;
    const double p_pair = static_cast<double>(n) * (n - 1) / (static_cast<double>(nn) * (nn - 1));
    iw.joint_seed_prob.setConstant(p_pair);
    iw.joint_seed_prob.diagonal().setConstant(p_single);

    iw.joint_node_prob.resize(nn, nn);
    for (int i = 0; i < nn; ++i) {
        const double qi = srs_avoidance(nn, n, g.degree(i) + 1);
        for (int j = i; j < nn; ++j) {
            const double qj = srs_avoidance(nn, n, g.degree(j) + 1);
            // |F_i ∪ F_j|, F = closed neighbourhood: |F_i∩F_j| is the common
            // neighbour count plus both endpoints when the edge ij exists.
            int funion = g.degree(i) + 1;
            if (i != j) {
                int common = g.has_edge(i, j) ? 2 : 0;
                const auto& a = g.neighbors(i);
                const auto& b = g.neighbors(j);
                std::size_t p = 0, q = 0;
                while (p < a.size() && q < b.size()) {
                    if (a[p] == b[q]) ++common, ++p, ++q;
                    else if (a[p] < b[q]) ++p;
                    else ++q;
                }
                funion = (g.degree(i) + 1) + (g.degree(j) + 1) - common;
            }
            const double qij = srs_avoidance(nn, n, funion);
            iw.joint_node_prob(i, j) = iw.joint_node_prob(j, i) = 1.0 - qi - qj + qij;
        }
    }
    return iw;
}

InclusionWeights monte_carlo_inclusion_weights(const Graph& g, const SbsDesign& design,
                                               long replications, std::uint64_t rng_seed,
                                               int threads) {
    const int n = g.node_count();
    if (replications < 1000) throw DataError("need at least 1000 replications");
    if (design.seed_size < 1 || design.seed_size > n) throw DataError("seed size out of range");
    if (design.t_waves < 1) throw DataError("wave count must be at least 1");

    std::vector<std::vector<long>> seed_hits;
    std::vector<std::vector<long>> node_hits;
    const int max_chunks = threads < 1 ? 1 : threads;
    seed_hits.assign(max_chunks, std::vector<long>(n, 0));
    node_hits.assign(max_chunks, std::vector<long>(n, 0));

    parallel_chunks(replications, threads, [&](long begin, long end, int chunk) {
        auto& sh = seed_hits[chunk];
        auto& nh = node_hits[chunk];
        for (long rep = begin; rep < end; ++rep) {
            SplitMix64 rng(rng_seed + static_cast<std::uint64_t>(rep));
            const auto s0 = srs_sample(n, design.seed_size, rng);
            const auto sg = run_sbs(g, s0, design.t_waves);
            for (int v : sg.seed) ++sh[v];
            for (int v : sg.sampled_nodes) ++nh[v];
        }
    });

    InclusionWeights iw;
    iw.method = WeightMethod::MonteCarlo;
    iw.replications = replications;
    iw.seed_prob.resize(n);
    iw.node_prob.resize(n);
    for (int v = 0; v < n; ++v) {
        long s = 0, u = 0;
        for (int c = 0; c < max_chunks; ++c) {
            s += seed_hits[c][v];
            u += node_hits[c][v];
        }
        iw.seed_prob[v] = static_cast<double>(s) / replications;
        iw.node_prob[v] = static_cast<double>(u) / replications;
    }
    return iw;
}

}  // namespace graphsee
