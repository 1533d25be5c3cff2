#include "graphsee/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <vector>

namespace graphsee {

Graph Graph::from_edges(int n_nodes, const std::vector<std::pair<int, int>>& edges) {
    if (n_nodes <= 0) throw DataError("graph needs at least one node");
    Graph g;
    g.n_ = n_nodes;
    std::vector<std::set<int>> adj(n_nodes);
    for (const auto& [i, j] : edges) {
        if (i < 0 || i >= n_nodes || j < 0 || j >= n_nodes)
            throw DataError("edge endpoint out of range");
        if (i == j)
            throw DataError("self-loop at node " + std::to_string(i + 1) +
                            " violates the simple-graph constraint");
        adj[i].insert(j);
        adj[j].insert(i);
    }
    g.adjacency_.reserve(n_nodes);
    int degree_sum = 0;
    for (auto& s : adj) {
        g.adjacency_.emplace_back(s.begin(), s.end());
        degree_sum += static_cast<int>(s.size());
    }
    g.edge_count_ = degree_sum / 2;
    return g;
}

bool Graph::has_edge(int i, int j) const {
    const auto& nb = adjacency_[i];
    return std::binary_search(nb.begin(), nb.end(), j);
}

bool Graph::connected() const {
    if (n_ == 0) return false;
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : adjacency_[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n_;
}

Vector Graph::degree_vector() const {
    Vector d(n_);
    for (int i = 0; i < n_; ++i) d[i] = static_cast<double>(degree(i));
    return d;
}

namespace {

bool is_integer_token(const std::string& tok) {
    if (tok.empty()) return false;
    std::size_t k = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
    if (k == tok.size()) return false;
    for (; k < tok.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(tok[k]))) return false;
    return true;
}

int parse_node_id(const std::string& tok, long line_no) {
    if (!is_integer_token(tok))
        throw DataError("line " + std::to_string(line_no) + ": non-integer token '" + tok + "'");
    const long id = std::stol(tok);
    if (id < 1)
        throw DataError("line " + std::to_string(line_no) + ": node id must be positive, got " +
                        tok);
    return static_cast<int>(id);
}

}  // namespace

Graph load_edge_list(std::istream& in) {
    std::vector<std::pair<int, int>> edges;
    int max_id = 0;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a)) continue;  // blank line
        if (a[0] == '#') continue;
        if (!(ls >> b))
            throw DataError("line " + std::to_string(line_no) + ": expected two node ids");
        if (ls >> extra)
            throw DataError("line " + std::to_string(line_no) + ": trailing token '" + extra + "'");
        const int i = parse_node_id(a, line_no);
        const int j = parse_node_id(b, line_no);
        if (i == j)
            throw DataError("line " + std::to_string(line_no) + ": self-loop (" + a + " " + b +
                            ") violates the simple-graph constraint");
        edges.emplace_back(i - 1, j - 1);
        max_id = std::max({max_id, i, j});
    }
    if (edges.empty()) throw DataError("empty edge list");
    return Graph::from_edges(max_id, edges);
}

Graph load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open edge list '" + path + "'");
    return load_edge_list(in);
}

Vector load_labels(std::istream& in, int n_nodes) {
    Vector y = Vector::Constant(n_nodes, -1.0);
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string trimmed = line;
        trimmed.erase(0, trimmed.find_first_not_of(" \t"));
        if (trimmed.empty() || trimmed[0] == '#') continue;
        std::istringstream ls(trimmed);
        std::string a, b;
        if (!std::getline(ls, a, ',') || !std::getline(ls, b))
            throw DataError("labels line " + std::to_string(line_no) + ": expected node_id,label");
        if (line_no == 1 && !is_integer_token(a)) continue;  // header row
        const int id = parse_node_id(a, line_no);
        if (id > n_nodes)
            throw DataError("labels line " + std::to_string(line_no) + ": node id " +
                            std::to_string(id) + " exceeds graph size " + std::to_string(n_nodes));
        b.erase(0, b.find_first_not_of(" \t"));
        b.erase(b.find_last_not_of(" \t") + 1);
        if (b != "0" && b != "1")
            throw DataError("labels line " + std::to_string(line_no) + ": label must be 0 or 1, got '" +
                            b + "'");
        if (y[id - 1] >= 0.0)
            throw DataError("labels line " + std::to_string(line_no) + ": duplicate node id " +
                            std::to_string(id));
        y[id - 1] = (b == "1") ? 1.0 : 0.0;
    }
    for (int i = 0; i < n_nodes; ++i)
        if (y[i] < 0.0) throw DataError("missing label for node " + std::to_string(i + 1));
    return y;
}

Vector load_labels_file(const std::string& path, int n_nodes) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open labels file '" + path + "'");
    return load_labels(in, n_nodes);
}

}  // namespace graphsee
