#include "happy/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace happy {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0)
        throw std::invalid_argument("vertex count must be nonnegative");
    for (auto &[u, v] : edges) {
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (u < 1 || u > n || v < 1 || v > n)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                        "," + std::to_string(v) + ")");
        if (u > v)
            std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge");
    edges_ = std::move(edges);
    adj_.assign(n + 1, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto &nbrs : adj_)
        std::sort(nbrs.begin(), nbrs.end());
}

} // namespace happy
