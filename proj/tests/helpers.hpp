#pragma once

#include "graphsee/graph.hpp"
#include "graphsee/rng.hpp"

#include <string>
#include <utility>
#include <vector>

namespace testutil {

inline std::string data_path(const std::string& name) {
    return std::string(GRAPHSEE_DATA_DIR) + "/" + name;
}

struct Zkc {
    graphsee::Graph graph;
    graphsee::Vector labels;  // 1 = Mr.Hi faction
};

inline Zkc load_zkc() {
    auto g = graphsee::load_edge_list_file(data_path("zkc_edges.txt"));
    auto y = graphsee::load_labels_file(data_path("zkc_labels.csv"), g.node_count());
    return Zkc{std::move(g), std::move(y)};
}

inline graphsee::Graph triangle() {
    return graphsee::Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
}

inline graphsee::Graph path2() {
    return graphsee::Graph::from_edges(2, {{0, 1}});
}

/// Connected Erdos-Renyi graph by rejection; deterministic in the seed.
inline graphsee::Graph connected_er(int n, double p, graphsee::SplitMix64& rng) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng.uniform() < p) edges.emplace_back(i, j);
        if (edges.empty()) continue;
        auto g = graphsee::Graph::from_edges(n, edges);
        if (g.connected()) return g;
    }
    throw std::runtime_error("failed to draw a connected graph");
}

/// Binary labels with both classes present.
inline graphsee::Vector random_labels(int n, graphsee::SplitMix64& rng) {
    graphsee::Vector y(n);
    for (;;) {
        int ones = 0;
        for (int i = 0; i < n; ++i) {
            y[i] = rng.uniform() < 0.5 ? 1.0 : 0.0;
            ones += y[i] == 1.0;
        }
        if (ones > 0 && ones < n) return y;
    }
}

}  // namespace testutil
