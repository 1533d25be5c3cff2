#pragma once

#include "graphsee/types.hpp"

#include <iosfwd>
#include <utility>
#include <vector>

namespace graphsee {

/// Immutable undirected simple graph. Nodes are 0-based internally;
/// file formats use 1-based ids.
class Graph {
public:
    /// Builds from an edge list over nodes 0..n_nodes-1. Duplicate edges are
    /// idempotent; self-loops are rejected.
    static Graph from_edges(int n_nodes, const std::vector<std::pair<int, int>>& edges);

    int node_count() const { return n_; }
    int edge_count() const { return edge_count_; }
    int degree(int i) const { return static_cast<int>(adjacency_[i].size()); }
    const std::vector<int>& neighbors(int i) const { return adjacency_[i]; }
    bool has_edge(int i, int j) const;
    bool connected() const;

    /// Degrees as a real vector (d_1..d_N).
    Vector degree_vector() const;

private:
    Graph() = default;
    int n_ = 0;
    int edge_count_ = 0;
    std::vector<std::vector<int>> adjacency_;  // sorted neighbour lists
};

/// Parses a line-oriented edge list: "i j" with 1-based ids, '#' comment lines.
/// N is the largest id seen. Rejects self-loops, non-integer tokens and empty input.
Graph load_edge_list(std::istream& in);
Graph load_edge_list_file(const std::string& path);

/// Parses a labels CSV "node_id,label" (optional header), label in {0,1},
/// 1-based ids covering every node of the graph exactly once.
Vector load_labels(std::istream& in, int n_nodes);
Vector load_labels_file(const std::string& path, int n_nodes);

}  // namespace graphsee
