#pragma once

#include "graphsee/graph.hpp"
#include "graphsee/rng.hpp"
#include "graphsee/types.hpp"

#include <cstdint>
#include <vector>

namespace graphsee {

/// Targeted random walk configuration. burn_in < 0 selects the default of
/// 50 * N steps.
struct WalkConfig {
    double r = 2.0;
    long burn_in = -1;
    int spacing = 5;
    int n_states = 100;
    std::uint64_t rng_seed = 0;
};

/// One realized walk: the n extracted equilibrium states in order, plus
/// per-node extraction counts.
struct WalkTrace {
    std::vector<int> states;
    std::vector<int> visit_counts;
    WalkConfig config;
};

/// Transition row i: neighbours get (1 + r/N)/(d_i + r), every node
/// (including i itself) additionally reachable by random jump with
/// r/(N (d_i + r)). Rows sum to one.
Vector trw_transition_row(const Graph& g, const WalkConfig& cfg, int node);

/// Runs the walk: burn_in steps, then n_states extractions every `spacing`
/// steps. Deterministic given rng_seed. r = 0 requires a connected graph.
WalkTrace run_trw(const Graph& g, const WalkConfig& cfg, int start);

/// T-wave snowball sample: waves s_0..s_{T-1}, seed s = their union, sample
/// graph U_s = s plus everything adjacent to s. Observed adjacency consists
/// of the full rows of seed nodes.
struct SampleGraph {
    std::vector<int> seed;                    // sorted union of waves
    std::vector<std::vector<int>> waves;      // non-empty waves actually produced
    std::vector<int> sampled_nodes;           // sorted U_s
    std::vector<std::vector<int>> observed_rows;  // neighbour list per seed node
    int t_waves = 1;                          // requested T
};

SampleGraph run_sbs(const Graph& g, const std::vector<int>& s0, int t_waves);

enum class WeightMethod { ExactSRS1Wave, MonteCarlo };

/// Design inclusion probabilities for snowball sampling.
///   seed_prob:  pi_k   = Pr(k in s)
///   node_prob:  pidot_j = Pr(j in U_s)
///   joint_seed_prob: Pr(i in s and j in s)   (drives the variance sandwich)
///   joint_node_prob: Pr(i in U_s and j in U_s)
/// Joint matrices are empty when not computed.
struct InclusionWeights {
    Vector seed_prob;
    Vector node_prob;
    Matrix joint_seed_prob;
    Matrix joint_node_prob;
    WeightMethod method = WeightMethod::ExactSRS1Wave;
    long replications = 0;  // Monte-Carlo only

    bool usable(int node) const {
        return seed_prob[node] > 0.0 && node_prob[node] > 0.0;
    }
};

/// Exact closed-form weights for 1-wave SBS with an SRS seed of size n:
/// pi_k = n/N, pidot_j = 1 - C(N-d_j-1, n)/C(N, n), and both joint matrices.
InclusionWeights srs_inclusion_weights(const Graph& g, int n, int t_waves);

/// SRS-seeded T-wave snowball design for Monte-Carlo weight estimation.
struct SbsDesign {
    int seed_size = 1;
    int t_waves = 1;
};

/// Empirical inclusion frequencies over independent replications (seeded
/// base_seed + replicate). Nodes never included keep probability 0 and are
/// rejected by downstream weight users.
InclusionWeights monte_carlo_inclusion_weights(const Graph& g, const SbsDesign& design,
                                               long replications, std::uint64_t rng_seed,
                                               int threads = 1);

}  // namespace graphsee
