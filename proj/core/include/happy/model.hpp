#pragma once

#include <vector>

#include "happy/graph.hpp"

namespace happy {

// Partial vertex coloring with palette [1..ell]; 0 means uncolored.
class Precoloring {
public:
    Precoloring(int n, int ell);

    int palette_size() const { return ell_; }
    int size() const { return static_cast<int>(colors_.size()) - 1; }
    // 0 if v is uncolored.
    int color_of(int v) const { return colors_[v]; }
    bool is_colored(int v) const { return colors_[v] != 0; }
    void set(int v, int color);
    void unset(int v) { check_vertex(v), colors_[v] = 0; }

    int colored_count() const;
    int uncolored_count() const { return size() - colored_count(); }
    std::vector<int> uncolored_vertices() const;

private:
    void check_vertex(int v) const;

    int ell_;
    std::vector<int> colors_; // 1-indexed, 0 = uncolored
};

// Total coloring; every vertex mapped into [1..ell].
class Coloring {
public:
    Coloring(int n, int ell);

    int palette_size() const { return ell_; }
    int size() const { return static_cast<int>(colors_.size()) - 1; }
    int color_of(int v) const { return colors_[v]; }
    void set(int v, int color);
    bool extends(const Precoloring &p) const;

    bool operator==(const Coloring &) const = default;

private:
    int ell_;
    std::vector<int> colors_;
};

enum class Kind { MHV, MHE };

struct Instance {
    Kind kind;
    Graph graph;
    Precoloring precoloring;
    long long k = 0;

    Instance(Kind kind, Graph graph, Precoloring precoloring, long long k);
};

// Potential-happiness bookkeeping for (G, p).
//
// anchor_color[v] is -1 if v cannot be happy under any extension, 0 if v is
// potentially happy with no precolor in its closed neighborhood (free), and
// i >= 1 if any extension making v happy must color it i (anchored).
struct HappySets {
    std::vector<int> anchor_color;          // 1-indexed
    std::vector<int> potentially_happy;     // H(G,p)
    std::vector<std::vector<int>> per_color; // per_color[i] = H_i, i in 1..ell
    std::vector<int> anchored;              // P = union of H_i
    std::vector<int> free_vertices;         // U = H \ P

    int h() const { return static_cast<int>(potentially_happy.size()); }
};

std::vector<int> happy_vertices(const Graph &graph, const Coloring &coloring);
std::vector<Edge> happy_edges(const Graph &graph, const Coloring &coloring);

HappySets compute_happy_sets(const Graph &graph, const Precoloring &precoloring);

// Extends the precoloring by giving every uncolored vertex the one color.
Coloring trivial_extension(const Instance &instance, int color);

// Happy-vertex count (MHV) or happy-edge count (MHE) of a total coloring.
long long evaluate(const Instance &instance, const Coloring &coloring);

} // namespace happy
