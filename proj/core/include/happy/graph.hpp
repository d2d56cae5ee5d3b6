#pragma once

#include <utility>
#include <vector>

namespace happy {

using Edge = std::pair<int, int>;

// Simple undirected graph over vertices 1..n.
// Rejects self-loops and duplicate edges at construction.
class Graph {
public:
    explicit Graph(int n, std::vector<Edge> edges = {});

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge> &edges() const { return edges_; }
    const std::vector<int> &neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_vertex(int v) const { return v >= 1 && v <= n_; }

private:
    int n_;
    std::vector<Edge> edges_;           // normalized: u < v, sorted
    std::vector<std::vector<int>> adj_; // 1-indexed, sorted neighbor lists
};

} // namespace happy
