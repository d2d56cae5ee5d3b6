#include "happy/model.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "happy/errors.hpp"

namespace happy {

Precoloring::Precoloring(int n, int ell) : ell_(ell), colors_(n + 1, 0) {
    if (n < 0)
        throw std::invalid_argument("vertex count must be nonnegative");
    if (ell < 1)
        throw std::invalid_argument("palette size must be at least 1");
}

void Precoloring::check_vertex(int v) const {
    if (v < 1 || v > size())
        throw std::invalid_argument("vertex index out of range: " + std::to_string(v));
}

void Precoloring::set(int v, int color) {
    check_vertex(v);
    if (color < 1 || color > ell_)
        throw std::invalid_argument("color out of palette: " + std::to_string(color));
    colors_[v] = color;
}

int Precoloring::colored_count() const {
    return static_cast<int>(std::count_if(colors_.begin() + 1, colors_.end(),
                                          [](int c) { return c != 0; }));
}

std::vector<int> Precoloring::uncolored_vertices() const {
    std::vector<int> out;
    for (int v = 1; v <= size(); ++v)
        if (colors_[v] == 0)
            out.push_back(v);
    return out;
}

Coloring::Coloring(int n, int ell) : ell_(ell), colors_(n + 1, 1) {
    if (n < 0)
        throw std::invalid_argument("vertex count must be nonnegative");
    if (ell < 1)
        throw std::invalid_argument("palette size must be at least 1");
    colors_[0] = 0;
}

void Coloring::set(int v, int color) {
    if (v < 1 || v > size())
        throw std::invalid_argument("vertex index out of range: " + std::to_string(v));
    if (color < 1 || color > ell_)
        throw std::invalid_argument("color out of palette: " + std::to_string(color));
    colors_[v] = color;
}

bool Coloring::extends(const Precoloring &p) const {
    if (p.size() != size())
        return false;
    for (int v = 1; v <= size(); ++v)
        if (p.is_colored(v) && p.color_of(v) != colors_[v])
            return false;
    return true;
}

Instance::Instance(Kind kind, Graph graph, Precoloring precoloring, long long k)
    : kind(kind), graph(std::move(graph)), precoloring(std::move(precoloring)), k(k) {
    if (k < 0)
        throw std::invalid_argument("target k must be nonnegative");
    if (this->precoloring.size() != this->graph.vertex_count())
        throw std::invalid_argument("precoloring size does not match graph");
}

std::vector<int> happy_vertices(const Graph &graph, const Coloring &coloring) {
    std::vector<int> out;
    for (int v = 1; v <= graph.vertex_count(); ++v) {
        bool ok = true;
        for (int u : graph.neighbors(v))
            if (coloring.color_of(u) != coloring.color_of(v)) {
                ok = false;
                break;
            }
        if (ok)
            out.push_back(v); // isolated vertices are vacuously happy
    }
    return out;
}

std::vector<Edge> happy_edges(const Graph &graph, const Coloring &coloring) {
    std::vector<Edge> out;
    for (auto [u, v] : graph.edges())
        if (coloring.color_of(u) == coloring.color_of(v))
            out.emplace_back(u, v);
    return out;
}

HappySets compute_happy_sets(const Graph &graph, const Precoloring &precoloring) {
    const int n = graph.vertex_count();
    HappySets hs;
    hs.anchor_color.assign(n + 1, 0);
    hs.per_color.assign(precoloring.palette_size() + 1, {});
    for (int v = 1; v <= n; ++v) {
        // the unique precolor seen in N[v], or 0; -1 marks a clash
        int seen = precoloring.color_of(v);
        for (int u : graph.neighbors(v)) {
            int c = precoloring.color_of(u);
            if (c == 0)
                continue;
            if (seen == 0)
                seen = c;
            else if (seen != c) {
                seen = -1;
                break;
            }
        }
        hs.anchor_color[v] = seen;
        if (seen < 0)
            continue;
        hs.potentially_happy.push_back(v);
        if (seen == 0) {
            hs.free_vertices.push_back(v);
        } else {
            hs.anchored.push_back(v);
            hs.per_color[seen].push_back(v);
        }
    }
    return hs;
}

Coloring trivial_extension(const Instance &instance, int color) {
    const Precoloring &p = instance.precoloring;
    if (color < 1 || color > p.palette_size())
        throw std::invalid_argument("extension color out of palette: " + std::to_string(color));
    Coloring c(p.size(), p.palette_size());
    for (int v = 1; v <= p.size(); ++v)
        c.set(v, p.is_colored(v) ? p.color_of(v) : color);
    return c;
}

long long evaluate(const Instance &instance, const Coloring &coloring) {
    if (!coloring.extends(instance.precoloring))
        throw std::invalid_argument("coloring does not extend the instance precoloring");
    if (instance.kind == Kind::MHV)
        return static_cast<long long>(happy_vertices(instance.graph, coloring).size());
    return static_cast<long long>(happy_edges(instance.graph, coloring).size());
}

} // namespace happy
