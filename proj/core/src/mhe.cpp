#include "happy/mhe.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "happy/errors.hpp"

namespace happy {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void require_mhe(const Instance &instance, const char *op) {
    if (instance.kind != Kind::MHE)
        throw std::invalid_argument(std::string(op) + " requires an MHE instance");
}

std::vector<std::vector<int>> connected_components(const Graph &graph) {
    const int n = graph.vertex_count();
    std::vector<int> comp(n + 1, -1);
    std::vector<std::vector<int>> out;
    for (int s = 1; s <= n; ++s) {
        if (comp[s] != -1)
            continue;
        comp[s] = static_cast<int>(out.size());
        std::vector<int> stack{s}, members;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int u : graph.neighbors(v))
                if (comp[u] == -1) {
                    comp[u] = comp[s];
                    stack.push_back(u);
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

// Greedy extension: keep coloring an uncolored
// vertex from an already-colored neighbor; each step gains one happy edge.
// Requires that no remaining component is entirely uncolored; leftovers
// (removed components) default to color 1.
Coloring greedy_certificate(const Instance &instance) {
    const Graph &graph = instance.graph;
    const int n = graph.vertex_count();
    std::vector<int> assigned(n + 1, 0);
    for (int v = 1; v <= n; ++v)
        assigned[v] = instance.precoloring.color_of(v);

    bool progress = true;
    while (progress) {
        progress = false;
        for (int v = 1; v <= n; ++v) {
            if (assigned[v] != 0)
                continue;
            for (int u : graph.neighbors(v))
                if (assigned[u] != 0) {
                    assigned[v] = assigned[u];
                    progress = true;
                    break;
                }
        }
    }
    Coloring c(n, instance.precoloring.palette_size());
    for (int v = 1; v <= n; ++v)
        c.set(v, assigned[v] == 0 ? 1 : assigned[v]);
    return c;
}

} // namespace

SolveResult mhe_brute_force(const Instance &instance, unsigned long long budget) {
    require_mhe(instance, "mhe_brute_force");
    const auto start = Clock::now();
    const unsigned long long total = extension_count(instance);
    if (total > budget)
        throw ResourceLimitError("mhe_brute_force: ell^n' = " + std::to_string(total) +
                                 " exceeds budget " + std::to_string(budget));
    SolveResult result;
    long long best = -1;
    for_each_extension(instance, [&](const Coloring &c) {
        ++result.stats.calls;
        long long value = evaluate(instance, c);
        if (value > best) {
            best = value;
            result.certificate = c;
        }
    });
    result.optimum = best;
    result.decision = best >= instance.k;
    result.stats.elapsed_ms = ms_since(start);
    return result;
}

KernelResult kernelize_mhe(const Instance &instance) {
    require_mhe(instance, "kernelize_mhe");
    const Graph &graph = instance.graph;
    const Precoloring &p = instance.precoloring;
    const int n = graph.vertex_count();

    KernelResult result;
    std::vector<char> removed(n + 1, 0);
    for (const auto &members : connected_components(graph)) {
        bool all_uncolored = std::none_of(members.begin(), members.end(),
                                          [&](int v) { return p.is_colored(v); });
        if (!all_uncolored)
            continue;
        long long internal = 0;
        for (int v : members)
            internal += graph.degree(v);
        internal /= 2;
        for (int v : members)
            removed[v] = 1;
        result.removed_components.push_back({members, internal});
        result.k_reduction += internal;
    }

    // remaining graph, renumbered densely
    std::vector<int> new_index(n + 1, 0);
    for (int v = 1; v <= n; ++v)
        if (!removed[v]) {
            result.kept_vertices.push_back(v);
            new_index[v] = static_cast<int>(result.kept_vertices.size());
        }
    std::vector<Edge> kept_edges;
    for (auto [u, v] : graph.edges())
        if (!removed[u] && !removed[v])
            kept_edges.emplace_back(new_index[u], new_index[v]);
    Graph reduced_graph(static_cast<int>(result.kept_vertices.size()), std::move(kept_edges));
    Precoloring reduced_p(reduced_graph.vertex_count(), p.palette_size());
    for (int v : result.kept_vertices)
        if (p.is_colored(v))
            reduced_p.set(new_index[v], p.color_of(v));

    const long long k_prime = instance.k - result.k_reduction;
    const int uncolored_left = reduced_p.uncolored_count();
    if (k_prime <= 0 || uncolored_left >= k_prime) {
        result.status = KernelResult::Status::ResolvedYes;
        result.certificate = greedy_certificate(instance);
        return result;
    }
    result.status = KernelResult::Status::Reduced;
    result.reduced_instance =
        Instance(Kind::MHE, std::move(reduced_graph), std::move(reduced_p),
                 std::max<long long>(0, k_prime));
    return result;
}

SolveResult mhe_subset_dp(const Instance &instance, int width_limit) {
    require_mhe(instance, "mhe_subset_dp");
    const auto start = Clock::now();
    const Graph &graph = instance.graph;
    const Precoloring &p = instance.precoloring;
    const int ell = p.palette_size();

    const std::vector<int> uncolored = p.uncolored_vertices();
    const int w = static_cast<int>(uncolored.size());
    if (w > width_limit)
        throw ResourceLimitError("mhe_subset_dp: n' = " + std::to_string(w) +
                                 " exceeds width limit " + std::to_string(width_limit));

    // happy edges fixed by the precoloring
    long long h0 = 0;
    for (auto [u, v] : graph.edges())
        if (p.is_colored(u) && p.is_colored(v) && p.color_of(u) == p.color_of(v))
            ++h0;

    std::vector<int> index_of(graph.vertex_count() + 1, -1);
    for (int i = 0; i < w; ++i)
        index_of[uncolored[i]] = i;
    std::vector<std::uint32_t> adj_mask(w, 0);
    std::vector<std::vector<int>> color_count(w, std::vector<int>(ell + 1, 0));
    for (int i = 0; i < w; ++i) {
        for (int u : graph.neighbors(uncolored[i])) {
            if (int j = index_of[u]; j >= 0)
                adj_mask[i] |= std::uint32_t{1} << j;
            else
                ++color_count[i][p.color_of(u)];
        }
    }

    const std::size_t masks = std::size_t{1} << w;
    // best[T] = edges inside T plus the best single color for T's outside edges
    std::vector<long long> best(masks, 0);
    std::vector<int> best_color(masks, 1);
    for (std::size_t t = 1; t < masks; ++t) {
        const int low = std::countr_zero(static_cast<std::uint32_t>(t));
        const std::uint32_t rest = static_cast<std::uint32_t>(t) & ~(std::uint32_t{1} << low);
        best[t] = best[rest] + std::popcount(adj_mask[low] & rest);
    }
    // best[] currently holds internal edge counts only; now add color scores.
    // (two passes keep memory to two words per mask)
    std::vector<long long> internal_edges;
    internal_edges.swap(best);
    best.assign(masks, 0);
    std::vector<long long> score(ell + 1, 0);
    for (std::size_t t = 1; t < masks; ++t) {
        std::fill(score.begin(), score.end(), 0);
        for (std::uint32_t rem = static_cast<std::uint32_t>(t); rem;) {
            const int i = std::countr_zero(rem);
            rem &= rem - 1;
            for (int c = 1; c <= ell; ++c)
                score[c] += color_count[i][c];
        }
        long long best_score = score[1];
        int arg = 1;
        for (int c = 2; c <= ell; ++c)
            if (score[c] > best_score) {
                best_score = score[c];
                arg = c;
            }
        best[t] = internal_edges[t] + best_score;
        best_color[t] = arg;
    }
    internal_edges.clear();
    internal_edges.shrink_to_fit();

    // f(S): best value of partitioning S into monochromatic parts
    SolveResult result;
    std::vector<long long> f(masks, 0);
    for (std::size_t s = 1; s < masks; ++s) {
        long long value = -1;
        const std::uint32_t sm = static_cast<std::uint32_t>(s);
        for (std::uint32_t t = sm; t; t = (t - 1) & sm) {
            ++result.stats.calls;
            // >= keeps the lexicographically smallest part (descending scan)
            if (long long v = best[t] + f[sm ^ t]; v >= value)
                value = v;
        }
        f[s] = value;
    }

    // backtrack a witness partition, re-finding each chosen part
    Coloring certificate(graph.vertex_count(), ell);
    for (int v = 1; v <= graph.vertex_count(); ++v)
        if (p.is_colored(v))
            certificate.set(v, p.color_of(v));
    std::uint32_t s = w == 0 ? 0 : static_cast<std::uint32_t>(masks - 1);
    while (s) {
        std::uint32_t chosen = s;
        long long value = -1;
        for (std::uint32_t t = s; t; t = (t - 1) & s)
            if (long long v = best[t] + f[s ^ t]; v >= value) {
                value = v;
                chosen = t;
            }
        for (std::uint32_t rem = chosen; rem;) {
            const int i = std::countr_zero(rem);
            rem &= rem - 1;
            certificate.set(uncolored[i], best_color[chosen]);
        }
        s ^= chosen;
    }

    result.optimum = h0 + (w == 0 ? 0 : f[masks - 1]);
    result.decision = *result.optimum >= instance.k;
    result.certificate = std::move(certificate);
    if (evaluate(instance, *result.certificate) != *result.optimum)
        throw InternalError("mhe_subset_dp: certificate does not attain the optimum");
    result.stats.elapsed_ms = ms_since(start);
    return result;
}

SolveResult mhe_solve(const Instance &instance, int width_limit) {
    require_mhe(instance, "mhe_solve");
    const auto start = Clock::now();
    KernelResult kernel = kernelize_mhe(instance);
    if (kernel.status == KernelResult::Status::ResolvedYes) {
        SolveResult result;
        result.decision = true;
        result.certificate = std::move(kernel.certificate);
        if (evaluate(instance, *result.certificate) < instance.k)
            throw InternalError("mhe_solve: kernel certificate misses the target");
        result.stats.elapsed_ms = ms_since(start);
        return result;
    }

    SolveResult reduced = mhe_subset_dp(*kernel.reduced_instance, width_limit);
    SolveResult result;
    result.optimum = *reduced.optimum + kernel.k_reduction;
    result.decision = *result.optimum >= instance.k;
    result.stats = reduced.stats;

    Coloring lifted(instance.graph.vertex_count(), instance.precoloring.palette_size());
    for (std::size_t i = 0; i < kernel.kept_vertices.size(); ++i)
        lifted.set(kernel.kept_vertices[i], reduced.certificate->color_of(static_cast<int>(i) + 1));
    // removed components are monochromatic; any color is optimal for them
    for (const auto &comp : kernel.removed_components)
        for (int v : comp.vertices)
            lifted.set(v, 1);
    if (evaluate(instance, lifted) != *result.optimum)
        throw InternalError("mhe_solve: lifted certificate does not attain the optimum");
    result.certificate = std::move(lifted);
    result.stats.elapsed_ms = ms_since(start);
    return result;
}

} // namespace happy
