#include "happy/mhv.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "happy/errors.hpp"
#include "happy/rng.hpp"

namespace happy {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void require_mhv(const Instance &instance, const char *op) {
    if (instance.kind != Kind::MHV)
        throw std::invalid_argument(std::string(op) + " requires an MHV instance");
}

// anchor colors restricted to alive vertices: -1 clash, 0 free, i>=1 anchored
std::vector<int> masked_anchor_colors(const Graph &graph, const Precoloring &p,
                                      const std::vector<char> &alive) {
    std::vector<int> anchor(graph.vertex_count() + 1, 0);
    for (int v = 1; v <= graph.vertex_count(); ++v) {
        if (!alive[v])
            continue;
        int seen = p.color_of(v);
        for (int u : graph.neighbors(v)) {
            if (!alive[u])
                continue;
            int c = p.color_of(u);
            if (c == 0)
                continue;
            if (seen == 0)
                seen = c;
            else if (seen != c) {
                seen = -1;
                break;
            }
        }
        anchor[v] = seen;
    }
    return anchor;
}

} // namespace

SolveResult mhv_brute_force(const Instance &instance, unsigned long long budget) {
    require_mhv(instance, "mhv_brute_force");
    const auto start = Clock::now();
    const unsigned long long total = extension_count(instance);
    if (total > budget)
        throw ResourceLimitError("mhv_brute_force: ell^n' = " + std::to_string(total) +
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

std::vector<int> guess_answer(const Instance &instance, std::uint64_t seed) {
    require_mhv(instance, "guess_answer");
    const Graph &graph = instance.graph;
    std::mt19937_64 rng(seed);

    std::vector<char> alive(graph.vertex_count() + 1, 1);
    Precoloring p = instance.precoloring;
    long long k = instance.k;
    std::vector<int> picked;

    while (true) {
        const std::vector<int> anchor = masked_anchor_colors(graph, p, alive);
        std::vector<int> anchored_set, free_set;
        for (int v = 1; v <= graph.vertex_count(); ++v) {
            if (!alive[v])
                continue;
            if (anchor[v] > 0)
                anchored_set.push_back(v);
            else if (anchor[v] == 0)
                free_set.push_back(v);
        }
        if (k <= static_cast<long long>(free_set.size())) {
            picked.insert(picked.end(), free_set.begin(), free_set.end());
            return picked;
        }
        if (anchored_set.empty())
            return picked;

        std::uniform_int_distribution<std::size_t> dist(0, anchored_set.size() - 1);
        const int v = anchored_set[dist(rng)];
        const int color = anchor[v];
        if (p.is_colored(v) && p.color_of(v) != color)
            throw InternalError("guess_answer: anchored vertex disagrees with its precolor");
        p.unset(v);
        for (int u : graph.neighbors(v))
            if (alive[u])
                p.set(u, color);
        alive[v] = 0;
        picked.push_back(v);
        --k;
    }
}

Coloring reconstruct_coloring(const Instance &instance, const std::vector<int> &happy_set) {
    const Graph &graph = instance.graph;
    const Precoloring &p = instance.precoloring;
    const int n = graph.vertex_count();

    std::vector<int> assigned(n + 1, 0);
    for (int v = 1; v <= n; ++v)
        assigned[v] = p.color_of(v);

    // Propagate forced colors: while some set member sees an assigned color in
    // its closed neighborhood, it must take that color along with all neighbors.
    std::vector<char> done(n + 1, 0);
    bool progress = true;
    while (progress) {
        progress = false;
        for (int v : happy_set) {
            if (done[v])
                continue;
            int forced = assigned[v];
            for (int u : graph.neighbors(v)) {
                if (assigned[u] == 0)
                    continue;
                if (forced == 0)
                    forced = assigned[u];
                else if (forced != assigned[u])
                    throw InternalError("reconstruct_coloring: conflicting forced colors");
            }
            if (forced == 0)
                continue;
            if (assigned[v] != 0 && assigned[v] != forced)
                throw InternalError("reconstruct_coloring: vertex forced against its color");
            assigned[v] = forced;
            for (int u : graph.neighbors(v)) {
                if (assigned[u] != 0 && assigned[u] != forced)
                    throw InternalError("reconstruct_coloring: neighborhood conflict");
                assigned[u] = forced;
            }
            done[v] = 1;
            progress = true;
        }
    }

    // Whatever is left is unconstrained; one shared color keeps the remaining
    // free set members happy.
    Coloring c(n, p.palette_size());
    for (int v = 1; v <= n; ++v)
        c.set(v, assigned[v] == 0 ? 1 : assigned[v]);

    for (int v : happy_set) {
        for (int u : graph.neighbors(v))
            if (c.color_of(u) != c.color_of(v))
                throw InternalError("reconstruct_coloring: set member " + std::to_string(v) +
                                    " is not happy; unsatisfiable set");
    }
    if (!c.extends(p))
        throw InternalError("reconstruct_coloring: output violates the precoloring");
    return c;
}

std::uint64_t RandomizedConfig::effective_repetitions(int ell, long long k) const {
    if (repetitions > 0)
        return repetitions;
    const double wanted = 3.0 * std::pow(static_cast<double>(ell), static_cast<double>(k));
    if (wanted >= static_cast<double>(max_repetitions))
        return max_repetitions;
    return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(wanted)));
}

SolveResult mhv_randomized(const Instance &instance, const RandomizedConfig &config) {
    require_mhv(instance, "mhv_randomized");
    const auto start = Clock::now();
    const std::uint64_t reps =
        config.effective_repetitions(instance.precoloring.palette_size(), instance.k);

    SolveResult result;
    result.stats.seed = config.seed;
    for (std::uint64_t rep = 0; rep < reps; ++rep) {
        const std::uint64_t rep_seed = split_seed(config.seed + rep);
        std::vector<int> set = guess_answer(instance, rep_seed);
        ++result.stats.calls;
        result.stats.max_depth = std::max(result.stats.max_depth, static_cast<int>(set.size()));
        Coloring c = reconstruct_coloring(instance, set);
        if (evaluate(instance, c) >= instance.k) {
            result.decision = true;
            result.certificate = std::move(c);
            result.stats.repetitions = rep + 1;
            result.stats.elapsed_ms = ms_since(start);
            return result;
        }
    }
    result.decision = false;
    result.stats.repetitions = reps;
    result.stats.elapsed_ms = ms_since(start);
    return result;
}

SolveResult best_trivial_extension(const Instance &instance) {
    require_mhv(instance, "best_trivial_extension");
    const auto start = Clock::now();
    SolveResult result;
    long long best = -1;
    for (int color = 1; color <= instance.precoloring.palette_size(); ++color) {
        Coloring c = trivial_extension(instance, color);
        ++result.stats.calls;
        long long value = evaluate(instance, c);
        if (value > best) { // lowest color wins ties
            best = value;
            result.certificate = std::move(c);
        }
    }
    result.optimum = best;
    result.decision = best >= instance.k;
    result.stats.elapsed_ms = ms_since(start);
    return result;
}

} // namespace happy
