#include "happy/reductions.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>

#include "happy/errors.hpp"

namespace happy {

namespace {

void require(bool condition, const std::string &message) {
    if (!condition)
        throw std::invalid_argument(message);
}

void check_coverage(const SetSystem &system, const std::string &who) {
    std::vector<char> covered(system.universe_size + 1, 0);
    for (const auto &s : system.sets)
        for (int e : s)
            covered[e] = 1;
    for (int e = 1; e <= system.universe_size; ++e)
        require(covered[e], who + ": element " + std::to_string(e) + " is not covered by any set");
}

// Best trivial extension of any instance kind; lowest color wins ties.
std::pair<long long, int> best_trivial(const Instance &instance) {
    long long best = -1;
    int best_color = 1;
    for (int color = 1; color <= instance.precoloring.palette_size(); ++color) {
        long long value = evaluate(instance, trivial_extension(instance, color));
        if (value > best) {
            best = value;
            best_color = color;
        }
    }
    return {best, best_color};
}

void stamp_guarantee(ReductionOutput &out) {
    auto [value, color] = best_trivial(out.instance);
    out.guarantee = value;
    out.guarantee_color = color;
}

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

} // namespace

void SetSystem::validate() const {
    if (universe_size < 0)
        throw std::invalid_argument("universe size must be nonnegative");
    for (const auto &s : sets) {
        require(!s.empty(), "sets must be nonempty");
        for (int e : s)
            require(e >= 1 && e <= universe_size,
                    "set element out of universe: " + std::to_string(e));
        auto sorted = s;
        std::sort(sorted.begin(), sorted.end());
        require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
                "repeated element inside a set");
    }
    if (!weights.empty()) {
        require(weights.size() == sets.size(), "one weight per set required");
        for (long long w : weights)
            require(w >= 1, "weights must be positive");
    }
}

std::string to_string(SourceKind kind) {
    switch (kind) {
    case SourceKind::SetPacking: return "set-packing";
    case SourceKind::Brds: return "brds";
    case SourceKind::IndependentSet: return "independent-set";
    case SourceKind::X3C: return "x3c";
    case SourceKind::SetPartitioning: return "set-partitioning";
    }
    return "?";
}

ReductionOutput reduce_set_packing_to_mhv(const SetSystem &system, long long k) {
    system.validate();
    require(k >= 0, "target k must be nonnegative");
    const int n = system.universe_size;
    const int m = static_cast<int>(system.sets.size());

    // u-block, then one block of weight(S_j) copies per set, then guards t1, t2
    int next = n;
    std::vector<std::vector<int>> set_vertices(m);
    for (int j = 0; j < m; ++j)
        for (long long copy = 0; copy < system.weight_of(j); ++copy)
            set_vertices[j].push_back(++next);
    const int t1 = ++next, t2 = ++next;

    std::vector<Edge> edges;
    for (int j = 0; j < m; ++j)
        for (int sv : set_vertices[j])
            for (int e : system.sets[j])
                edges.emplace_back(e, sv);
    edges.emplace_back(t1, t2);
    for (int i = 1; i <= n; ++i) {
        edges.emplace_back(i, t1);
        edges.emplace_back(i, t2);
    }

    const int ell = std::max(m, 2);
    Graph graph(next, std::move(edges));
    Precoloring p(next, ell);
    for (int j = 0; j < m; ++j)
        for (int sv : set_vertices[j])
            p.set(sv, j + 1);
    p.set(t1, 1);
    p.set(t2, 2);

    ReductionOutput out{Instance(Kind::MHV, std::move(graph), std::move(p), k),
                        SourceKind::SetPacking};
    out.element_vertices.resize(n);
    for (int i = 1; i <= n; ++i)
        out.element_vertices[i - 1] = i;
    out.set_vertices = std::move(set_vertices);
    out.guard_vertices = {t1, t2};
    out.source_system = system;
    out.source_k = k;
    stamp_guarantee(out);
    return out;
}

ReductionOutput reduce_brds_to_mhe(const SetSystem &system, long long k) {
    system.validate();
    require(!system.sets.empty(), "brds: empty set family");
    require(k >= 1, "brds: target k must be positive");
    const int n = system.universe_size;
    const int d = static_cast<int>(system.sets.front().size());
    for (const auto &s : system.sets)
        require(static_cast<int>(s.size()) == d, "brds: all sets must have equal size d");
    require(static_cast<long long>(n) == k * d, "brds: universe size must equal k*d");
    check_coverage(system, "brds");
    const int m = static_cast<int>(system.sets.size());

    int next = n;
    std::vector<std::vector<int>> set_vertices(m);
    for (int j = 0; j < m; ++j)
        for (int copy = 0; copy < n; ++copy)
            set_vertices[j].push_back(++next);

    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            edges.emplace_back(i, j);
    for (int j = 0; j < m; ++j)
        for (int sv : set_vertices[j])
            for (int e : system.sets[j])
                edges.emplace_back(e, sv);

    Graph graph(next, std::move(edges));
    Precoloring p(next, std::max(m, 1));
    for (int j = 0; j < m; ++j)
        for (int sv : set_vertices[j])
            p.set(sv, j + 1);

    const long long target =
        static_cast<long long>(n) * n + k * (static_cast<long long>(d) * (d - 1) / 2);
    ReductionOutput out{Instance(Kind::MHE, std::move(graph), std::move(p), target),
                        SourceKind::Brds};
    out.element_vertices.resize(n);
    for (int i = 1; i <= n; ++i)
        out.element_vertices[i - 1] = i;
    out.set_vertices = std::move(set_vertices);
    out.source_system = system;
    out.source_k = k;
    stamp_guarantee(out);
    return out;
}

ReductionOutput reduce_colored_graph_to_mhv_subdivision(const Graph &source,
                                                        const Coloring &proper_coloring,
                                                        long long k) {
    require(proper_coloring.size() == source.vertex_count(),
            "coloring size does not match source graph");
    for (auto [u, v] : source.edges())
        require(proper_coloring.color_of(u) != proper_coloring.color_of(v),
                "coloring is not proper on edge (" + std::to_string(u) + "," +
                    std::to_string(v) + ")");
    require(k >= 0, "target k must be nonnegative");

    const int n = source.vertex_count();
    const int m = source.edge_count();
    std::vector<Edge> edges;
    std::vector<int> edge_vertices(m);
    for (int idx = 0; idx < m; ++idx) {
        auto [u, v] = source.edges()[idx];
        const int mid = n + idx + 1;
        edge_vertices[idx] = mid;
        edges.emplace_back(u, mid);
        edges.emplace_back(mid, v);
    }

    Graph graph(n + m, std::move(edges));
    Precoloring p(n + m, proper_coloring.palette_size());
    for (int v = 1; v <= n; ++v)
        p.set(v, proper_coloring.color_of(v));

    ReductionOutput out{Instance(Kind::MHV, std::move(graph), std::move(p), k),
                        SourceKind::IndependentSet};
    out.edge_vertices = std::move(edge_vertices);
    out.source_graph = source;
    out.source_coloring = proper_coloring;
    out.source_k = k;
    stamp_guarantee(out);
    return out;
}

ReductionOutput reduce_x3c_to_mhe_above_guarantee(int n, std::vector<std::vector<int>> sets) {
    require(n >= 1, "x3c: n must be positive");
    if (n % 2 == 0) {
        // pad to odd n with a fresh set over three fresh elements
        sets.push_back({3 * n + 1, 3 * n + 2, 3 * n + 3});
        ++n;
    }
    SetSystem system{3 * n, sets, {}};
    system.validate();
    for (const auto &s : sets)
        require(s.size() == 3, "x3c: every set must have exactly three elements");
    check_coverage(system, "x3c");
    const int m = static_cast<int>(sets.size());

    int next = 3 * n;
    std::vector<std::vector<int>> set_vertices(m);
    for (int j = 0; j < m; ++j)
        for (int copy = 0; copy < 3 * n; ++copy)
            set_vertices[j].push_back(++next);
    std::vector<int> guards(3 * (n + 1) / 2);
    for (auto &g : guards)
        g = ++next;

    std::vector<Edge> edges;
    for (int i = 1; i <= 3 * n; ++i)
        for (int j = i + 1; j <= 3 * n; ++j)
            edges.emplace_back(i, j);
    for (int j = 0; j < m; ++j)
        for (int sv : set_vertices[j])
            for (int e : sets[j])
                edges.emplace_back(e, sv);
    // all guard-to-clique edges except (w_1, u_1)
    for (std::size_t gi = 0; gi < guards.size(); ++gi)
        for (int i = 1; i <= 3 * n; ++i)
            if (!(gi == 0 && i == 1))
                edges.emplace_back(i, guards[gi]);

    Graph graph(next, std::move(edges));
    Precoloring p(next, m + 1);
    for (int j = 0; j < m; ++j)
        for (int sv : set_vertices[j])
            p.set(sv, j + 1);
    for (int g : guards)
        p.set(g, m + 1);

    const long long guarantee = 9ll * n * n + 3ll * n - 1;
    ReductionOutput out{Instance(Kind::MHE, std::move(graph), std::move(p), guarantee + 1),
                        SourceKind::X3C};
    out.element_vertices.resize(3 * n);
    for (int i = 1; i <= 3 * n; ++i)
        out.element_vertices[i - 1] = i;
    out.set_vertices = std::move(set_vertices);
    out.guard_vertices = std::move(guards);
    out.guarantee = guarantee;
    out.guarantee_color = m + 1;
    out.source_system = std::move(system);
    if (evaluate(out.instance, trivial_extension(out.instance, out.guarantee_color)) !=
        out.guarantee)
        throw InternalError("x3c gadget: trivial extension misses the promised guarantee");
    return out;
}

SetSystem eliminate_size_two_sets(const SetSystem &system) {
    system.validate();
    require(system.universe_size > 2, "eliminate_size_two_sets: universe must exceed 2");

    std::vector<std::vector<int>> pairs; // the size-2 subfamily
    SetSystem out{system.universe_size, {}, {}};
    for (const auto &s : system.sets) {
        if (s.size() == 2)
            pairs.push_back(s);
        else
            out.sets.push_back(s);
    }
    if (pairs.empty())
        return out;

    auto disjoint = [](const std::vector<int> &a, const std::vector<int> &b) {
        for (int x : a)
            if (std::find(b.begin(), b.end(), x) != b.end())
                return false;
        return true;
    };

    std::set<std::vector<int>> unions;
    // every original set (size-2 ones included) joined with a disjoint pair
    for (const auto &si : system.sets)
        for (const auto &sj : pairs)
            if (disjoint(si, sj)) {
                std::vector<int> u = si;
                u.insert(u.end(), sj.begin(), sj.end());
                unions.insert(sorted_unique(std::move(u)));
            }
    // every pairwise disjoint triple of pairs
    for (std::size_t a = 0; a < pairs.size(); ++a)
        for (std::size_t b = a + 1; b < pairs.size(); ++b) {
            if (!disjoint(pairs[a], pairs[b]))
                continue;
            for (std::size_t c = b + 1; c < pairs.size(); ++c) {
                if (!disjoint(pairs[a], pairs[c]) || !disjoint(pairs[b], pairs[c]))
                    continue;
                std::vector<int> u = pairs[a];
                u.insert(u.end(), pairs[b].begin(), pairs[b].end());
                u.insert(u.end(), pairs[c].begin(), pairs[c].end());
                unions.insert(sorted_unique(std::move(u)));
            }
        }
    for (auto &u : unions)
        out.sets.push_back(u);
    return out;
}

ReductionOutput reduce_set_partitioning_to_mhe(const SetSystem &system) {
    system.validate();
    const int n = system.universe_size;
    require(n > 2, "set-partitioning: universe must exceed 2");
    for (const auto &s : system.sets)
        require(s.size() != 2,
                "set-partitioning: size-2 sets present; run eliminate_size_two_sets first");
    check_coverage(system, "set-partitioning");
    const int m = static_cast<int>(system.sets.size());

    int next = n;
    std::vector<std::vector<int>> set_vertices(m);
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            edges.emplace_back(i, j);
    for (int j = 0; j < m; ++j) {
        const auto s = [&] {
            auto v = system.sets[j];
            std::sort(v.begin(), v.end());
            return v;
        }();
        const int d = static_cast<int>(s.size());
        const int copies = n * n - (d - 1) / 2;
        for (int copy = 0; copy < copies; ++copy)
            set_vertices[j].push_back(++next);
        if (d % 2 == 1) {
            for (int e : s)
                for (int sv : set_vertices[j])
                    edges.emplace_back(e, sv);
        } else {
            // ascending-order halves; the second half skips the last copy
            for (int idx = 0; idx < d; ++idx) {
                const bool first_half = idx < d / 2;
                for (int ci = 0; ci < copies; ++ci) {
                    if (!first_half && ci == copies - 1)
                        continue;
                    edges.emplace_back(s[idx], set_vertices[j][ci]);
                }
            }
        }
    }

    Graph graph(next, std::move(edges));
    Precoloring p(next, std::max(m, 1));
    for (int j = 0; j < m; ++j)
        for (int sv : set_vertices[j])
            p.set(sv, j + 1);

    const long long target = static_cast<long long>(n) * n * n;
    ReductionOutput out{Instance(Kind::MHE, std::move(graph), std::move(p), target),
                        SourceKind::SetPartitioning};
    out.element_vertices.resize(n);
    for (int i = 1; i <= n; ++i)
        out.element_vertices[i - 1] = i;
    out.set_vertices = std::move(set_vertices);
    out.source_system = system;
    stamp_guarantee(out);
    return out;
}

namespace {

void verify_disjoint_chosen(const SetSystem &system, const std::vector<int> &chosen,
                            const char *who) {
    std::vector<char> used(system.universe_size + 1, 0);
    for (int j : chosen)
        for (int e : system.sets[j - 1]) {
            if (used[e])
                throw InternalError(std::string(who) +
                                    ": back-mapped sets are not pairwise disjoint");
            used[e] = 1;
        }
}

} // namespace

SourceCertificate map_solution_back(const ReductionOutput &output, const Coloring &coloring) {
    const Instance &gadget = output.instance;
    if (evaluate(gadget, coloring) < gadget.k)
        throw std::invalid_argument("map_solution_back: coloring does not meet the target");

    SourceCertificate cert;
    switch (output.source_kind) {
    case SourceKind::SetPacking: {
        const SetSystem &system = *output.source_system;
        std::vector<char> is_happy(gadget.graph.vertex_count() + 1, 0);
        for (int v : happy_vertices(gadget.graph, coloring))
            is_happy[v] = 1;
        for (std::size_t j = 0; j < output.set_vertices.size(); ++j)
            if (std::all_of(output.set_vertices[j].begin(), output.set_vertices[j].end(),
                            [&](int v) { return is_happy[v]; }))
                cert.chosen_sets.push_back(static_cast<int>(j) + 1);
        verify_disjoint_chosen(system, cert.chosen_sets, "set-packing");
        long long total = 0;
        for (int j : cert.chosen_sets)
            total += system.weight_of(j - 1);
        if (total < output.source_k)
            throw InternalError("set-packing: back-mapped family too small");
        break;
    }
    case SourceKind::Brds:
    case SourceKind::X3C:
    case SourceKind::SetPartitioning: {
        const SetSystem &system = *output.source_system;
        const int m = static_cast<int>(system.sets.size());
        std::vector<int> chosen;
        for (std::size_t i = 0; i < output.element_vertices.size(); ++i) {
            const int j = coloring.color_of(output.element_vertices[i]);
            if (j < 1 || j > m)
                throw InternalError(to_string(output.source_kind) +
                                    ": element colored outside the set palette");
            const auto &s = system.sets[j - 1];
            if (std::find(s.begin(), s.end(), static_cast<int>(i) + 1) == s.end())
                throw InternalError(to_string(output.source_kind) +
                                    ": element colored with a set not containing it");
            chosen.push_back(j);
        }
        cert.chosen_sets = sorted_unique(std::move(chosen));
        verify_disjoint_chosen(system, cert.chosen_sets, to_string(output.source_kind).c_str());
        std::size_t covered = 0;
        for (int j : cert.chosen_sets)
            covered += system.sets[j - 1].size();
        if (output.source_kind == SourceKind::Brds) {
            if (static_cast<long long>(cert.chosen_sets.size()) < output.source_k)
                throw InternalError("brds: back-mapped family too small");
        } else if (covered != output.element_vertices.size()) {
            throw InternalError(to_string(output.source_kind) +
                                ": back-mapped sets do not cover the universe exactly");
        }
        break;
    }
    case SourceKind::IndependentSet: {
        const Graph &source = *output.source_graph;
        std::vector<char> is_happy(gadget.graph.vertex_count() + 1, 0);
        for (int v : happy_vertices(gadget.graph, coloring))
            is_happy[v] = 1;
        for (int v = 1; v <= source.vertex_count(); ++v)
            if (is_happy[v])
                cert.independent_set.push_back(v);
        for (int u : cert.independent_set)
            for (int v : source.neighbors(u))
                if (is_happy[v])
                    throw InternalError("subdivision: back-mapped set is not independent");
        if (static_cast<long long>(cert.independent_set.size()) < output.source_k)
            throw InternalError("subdivision: back-mapped independent set too small");
        break;
    }
    }
    return cert;
}

long long max_set_packing_value(const SetSystem &system) {
    system.validate();
    if (system.universe_size > 62)
        throw ResourceLimitError("max_set_packing_value: universe too large");
    const int m = static_cast<int>(system.sets.size());
    std::vector<std::uint64_t> masks(m, 0);
    for (int j = 0; j < m; ++j)
        for (int e : system.sets[j])
            masks[j] |= std::uint64_t{1} << e;

    long long best = 0;
    auto rec = [&](auto &&self, int j, std::uint64_t used, long long value) -> void {
        best = std::max(best, value);
        for (int t = j; t < m; ++t)
            if ((masks[t] & used) == 0)
                self(self, t + 1, used | masks[t], value + system.weight_of(t));
    };
    rec(rec, 0, 0, 0);
    return best;
}

bool has_exact_cover(const SetSystem &system) {
    system.validate();
    if (system.universe_size > 25)
        throw ResourceLimitError("has_exact_cover: universe too large");
    const std::uint32_t full =
        system.universe_size == 0 ? 0 : (std::uint32_t{1} << system.universe_size) - 1;
    std::vector<std::uint32_t> masks;
    for (const auto &s : system.sets) {
        std::uint32_t m = 0;
        for (int e : s)
            m |= std::uint32_t{1} << (e - 1);
        masks.push_back(m);
    }
    std::vector<char> reachable(std::size_t{1} << system.universe_size, 0);
    reachable[0] = 1;
    std::vector<std::uint32_t> frontier{0};
    while (!frontier.empty()) {
        std::uint32_t cur = frontier.back();
        frontier.pop_back();
        if (cur == full)
            return true;
        for (std::uint32_t m : masks)
            if ((m & cur) == 0 && !reachable[cur | m]) {
                reachable[cur | m] = 1;
                frontier.push_back(cur | m);
            }
    }
    return full == 0;
}

long long max_independent_set(const Graph &graph) {
    const int n = graph.vertex_count();
    if (n > 62)
        throw ResourceLimitError("max_independent_set: graph too large");
    std::vector<std::uint64_t> closed(n + 1, 0);
    for (int v = 1; v <= n; ++v) {
        closed[v] = std::uint64_t{1} << v;
        for (int u : graph.neighbors(v))
            closed[v] |= std::uint64_t{1} << u;
    }
    auto rec = [&](auto &&self, std::uint64_t remaining) -> long long {
        if (remaining == 0)
            return 0;
        const int v = std::countr_zero(remaining);
        // branch: exclude v, or take v and drop N[v]
        return std::max(self(self, remaining & ~(std::uint64_t{1} << v)),
                        1 + self(self, remaining & ~closed[v]));
    };
    std::uint64_t all = 0;
    for (int v = 1; v <= n; ++v)
        all |= std::uint64_t{1} << v;
    return rec(rec, all);
}

} // namespace happy
