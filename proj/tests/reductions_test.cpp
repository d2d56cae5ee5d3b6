#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "happy/errors.hpp"
#include "happy/io.hpp"
#include "happy/mhe.hpp"
#include "happy/mhv.hpp"
#include "happy/reductions.hpp"

using namespace happy;

namespace {

std::string header_of(const Instance &instance) {
    const std::string text = serialize_instance(instance);
    return text.substr(0, text.find('\n'));
}

Coloring greedy_proper_coloring(const Graph &g, int ell) {
    Coloring c(g.vertex_count(), ell);
    for (int v = 1; v <= g.vertex_count(); ++v) {
        std::vector<char> taken(ell + 1, 0);
        for (int u : g.neighbors(v))
            if (u < v)
                taken[c.color_of(u)] = 1;
        for (int color = 1; color <= ell; ++color)
            if (!taken[color]) {
                c.set(v, color);
                break;
            }
    }
    return c;
}

} // namespace

TEST_CASE("set system validation") {
    const SetSystem out_of_universe{2, {{1, 3}}, {}};
    const SetSystem repeated_element{3, {{1, 1}}, {}};
    const SetSystem empty_set{3, {{}}, {}};
    const SetSystem weight_count{3, {{1}, {2}}, {1}};
    const SetSystem zero_weight{3, {{1}}, {0}};
    CHECK_THROWS_AS(out_of_universe.validate(), std::invalid_argument);
    CHECK_THROWS_AS(repeated_element.validate(), std::invalid_argument);
    CHECK_THROWS_AS(empty_set.validate(), std::invalid_argument);
    CHECK_THROWS_AS(weight_count.validate(), std::invalid_argument);
    CHECK_THROWS_AS(zero_weight.validate(), std::invalid_argument);
    SetSystem{3, {{1, 2}, {3}}, {2, 5}}.validate();
}

TEST_CASE("source oracles") {
    SetSystem packing{4, {{1, 2}, {3, 4}, {2, 3}}, {}};
    CHECK(max_set_packing_value(packing) == 2);
    SetSystem weighted{4, {{1, 2}, {3, 4}, {2, 3}}, {1, 1, 5}};
    CHECK(max_set_packing_value(weighted) == 5);

    CHECK(has_exact_cover(SetSystem{3, {{1, 2, 3}}, {}}));
    CHECK(has_exact_cover(SetSystem{4, {{1, 2}, {3, 4}, {2, 3}}, {}}));
    CHECK_FALSE(has_exact_cover(SetSystem{4, {{1, 2, 3}, {2, 3, 4}}, {}}));
    CHECK(has_exact_cover(SetSystem{0, {}, {}}));

    Graph c5(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
    CHECK(max_independent_set(c5) == 2);
    CHECK(max_independent_set(Graph(3, {{1, 2}, {2, 3}, {1, 3}})) == 1);
    CHECK(max_independent_set(Graph(4, {})) == 4);
}

TEST_CASE("set packing gadget shape and optimum") {
    SetSystem system{4, {{1, 2}, {3, 4}, {2, 3}}, {}};
    ReductionOutput out = reduce_set_packing_to_mhv(system, 2);
    // 4 elements + 3 single copies + two guards
    CHECK(out.instance.graph.vertex_count() == 9);
    CHECK(out.instance.precoloring.palette_size() == 3);
    CHECK(out.guard_vertices.size() == 2);

    SolveResult r = mhv_brute_force(out.instance);
    CHECK(*r.optimum == 2); // only copies of disjoint chosen sets can be happy

    SourceCertificate cert = map_solution_back(out, *r.certificate);
    CHECK(cert.chosen_sets.size() == 2);

    // raising the target past the packing number flips the decision
    ReductionOutput no = reduce_set_packing_to_mhv(system, 3);
    CHECK(*mhv_brute_force(no.instance).optimum < no.instance.k);
}

TEST_CASE("set packing gadget respects weights") {
    SetSystem system{4, {{1, 2}, {3, 4}, {2, 3}}, {2, 1, 3}};
    ReductionOutput out = reduce_set_packing_to_mhv(system, 3);
    // weight w(S_j) copies per set: 4 + (2+1+3) + 2 guards
    CHECK(out.instance.graph.vertex_count() == 12);
    CHECK(*mhv_brute_force(out.instance).optimum == max_set_packing_value(system));
}

TEST_CASE("set packing gadget optimum equals the packing number") {
    std::mt19937_64 seeds(53);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 3 + static_cast<int>(seeds() % 3);
        const int m = 2 + static_cast<int>(seeds() % 3);
        SetSystem system{n, {}, {}};
        for (int j = 0; j < m; ++j) {
            std::vector<int> s;
            for (int e = 1; e <= n; ++e)
                if (seeds() % 2)
                    s.push_back(e);
            if (s.empty())
                s.push_back(1 + static_cast<int>(seeds() % n));
            system.sets.push_back(std::move(s));
        }
        ReductionOutput out = reduce_set_packing_to_mhv(system, 1);
        CHECK(*mhv_brute_force(out.instance).optimum == max_set_packing_value(system));
    }
}

TEST_CASE("disjoint-cover gadget hits its closed-form target") {
    // two singleton sets partition a 2-element universe
    SetSystem system{2, {{1}, {2}}, {}};
    ReductionOutput out = reduce_brds_to_mhe(system, 2);
    CHECK(header_of(out.instance) == "p mhe 6 2 4");

    SolveResult r = mhe_brute_force(out.instance);
    CHECK(*r.optimum == 4);
    SourceCertificate cert = map_solution_back(out, *r.certificate);
    CHECK(cert.chosen_sets == std::vector<int>{1, 2});
}

TEST_CASE("disjoint-cover gadget falls short on no-instances") {
    // every set contains element 1, so two disjoint sets cannot exist
    SetSystem system{4, {{1, 2}, {1, 3}, {1, 4}}, {}};
    ReductionOutput out = reduce_brds_to_mhe(system, 2);
    CHECK(out.instance.k == 4 * 4 + 2 * 1);
    CHECK(*mhe_subset_dp(out.instance).optimum < out.instance.k);
}

TEST_CASE("disjoint-cover gadget validates its preconditions") {
    CHECK_THROWS_AS(reduce_brds_to_mhe(SetSystem{3, {{1, 2}, {3}}, {}}, 2),
                    std::invalid_argument); // unequal set sizes
    CHECK_THROWS_AS(reduce_brds_to_mhe(SetSystem{3, {{1, 2}, {2, 3}}, {}}, 2),
                    std::invalid_argument); // n != k*d
    CHECK_THROWS_AS(reduce_brds_to_mhe(SetSystem{4, {{1, 2}, {1, 3}}, {}}, 2),
                    std::invalid_argument); // element 4 uncovered
}

TEST_CASE("subdivision gadget optimum equals the independence number") {
    Graph c5(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
    Coloring proper = greedy_proper_coloring(c5, 3);
    ReductionOutput out = reduce_colored_graph_to_mhv_subdivision(c5, proper, 2);
    CHECK(out.instance.graph.vertex_count() == 10);
    CHECK(out.instance.graph.edge_count() == 10);

    SolveResult r = mhv_brute_force(out.instance);
    CHECK(*r.optimum == 2);
    SourceCertificate cert = map_solution_back(out, *r.certificate);
    CHECK(cert.independent_set.size() == 2);

    std::mt19937_64 seeds(59);
    for (int trial = 0; trial < 20; ++trial) {
        Instance base = generate_random(Kind::MHV, 4 + trial % 4, 2, 0.4, 0.0, seeds());
        if (base.graph.edge_count() > 8)
            continue;
        Coloring c = greedy_proper_coloring(base.graph, base.graph.vertex_count());
        ReductionOutput o = reduce_colored_graph_to_mhv_subdivision(base.graph, c, 0);
        CHECK(*mhv_brute_force(o.instance).optimum == max_independent_set(base.graph));
    }
}

TEST_CASE("subdivision gadget rejects improper colorings") {
    Graph edge(2, {{1, 2}});
    Coloring same(2, 2);
    same.set(1, 1);
    same.set(2, 1);
    CHECK_THROWS_AS(reduce_colored_graph_to_mhv_subdivision(edge, same, 1),
                    std::invalid_argument);
}

TEST_CASE("exact-cover gadget, smallest yes-instance") {
    ReductionOutput out = reduce_x3c_to_mhe_above_guarantee(1, {{1, 2, 3}});
    CHECK(header_of(out.instance) == "p mhe 9 2 12");
    CHECK(out.guarantee == 11);
    CHECK(evaluate(out.instance, trivial_extension(out.instance, out.guarantee_color)) == 11);

    SolveResult r = mhe_subset_dp(out.instance);
    CHECK(*r.optimum == 12);
    SourceCertificate cert = map_solution_back(out, *r.certificate);
    CHECK(cert.chosen_sets == std::vector<int>{1});
}

TEST_CASE("exact-cover gadget stops exactly at the guarantee on no-instances") {
    // covers the universe but admits no exact cover by disjoint triples
    std::vector<std::vector<int>> sets = {
        {1, 2, 3}, {3, 4, 5}, {5, 6, 7}, {7, 8, 9}, {1, 8, 9}};
    CHECK_FALSE(has_exact_cover(SetSystem{9, sets, {}}));

    ReductionOutput out = reduce_x3c_to_mhe_above_guarantee(3, sets);
    CHECK(out.guarantee == 9 * 9 + 9 - 1);
    CHECK(out.instance.k == out.guarantee + 1);
    CHECK(*mhe_subset_dp(out.instance).optimum == out.guarantee);
    CHECK_THROWS_AS(
        map_solution_back(out, trivial_extension(out.instance, out.guarantee_color)),
        std::invalid_argument);
}

TEST_CASE("exact-cover gadget pads even n with a fresh triple") {
    ReductionOutput out =
        reduce_x3c_to_mhe_above_guarantee(2, {{1, 2, 3}, {4, 5, 6}});
    // padded to n=3: the extra set {7,8,9} makes the count odd again
    CHECK(out.source_system->universe_size == 9);
    CHECK(out.source_system->sets.size() == 3);
    CHECK(out.element_vertices.size() == 9);
    CHECK(out.guarantee == 9 * 9 + 9 - 1);
    CHECK(*mhe_subset_dp(out.instance).optimum == out.instance.k); // still a yes-instance
}

TEST_CASE("eliminating size-2 sets preserves exact partitions") {
    SetSystem system{5, {{1, 2}, {3, 4, 5}}, {}};
    SetSystem out = eliminate_size_two_sets(system);
    for (const auto &s : out.sets)
        CHECK(s.size() != 2);
    CHECK(has_exact_cover(out));

    std::mt19937_64 seeds(61);
    int checked = 0;
    for (int trial = 0; trial < 200 && checked < 60; ++trial) {
        const int n = 4 + static_cast<int>(seeds() % 4);
        SetSystem sys{n, {}, {}};
        const int m = 2 + static_cast<int>(seeds() % 4);
        for (int j = 0; j < m; ++j) {
            std::vector<int> s;
            for (int e = 1; e <= n; ++e)
                if (seeds() % 3 == 0)
                    s.push_back(e);
            if (s.empty())
                continue;
            sys.sets.push_back(std::move(s));
        }
        if (sys.sets.empty())
            continue;
        SetSystem reduced = eliminate_size_two_sets(sys);
        for (const auto &s : reduced.sets)
            CHECK(s.size() != 2);
        CHECK(has_exact_cover(sys) == has_exact_cover(reduced));
        ++checked;
    }
    CHECK(checked == 60);
}

TEST_CASE("partition gadget, single covering triple") {
    SetSystem system{3, {{1, 2, 3}}, {}};
    ReductionOutput out = reduce_set_partitioning_to_mhe(system);
    // 3 elements + (9-1) copies of the lone set, palette of one color
    CHECK(header_of(out.instance) == "p mhe 11 1 27");
    CHECK(*mhe_subset_dp(out.instance).optimum == 27);
}

TEST_CASE("partition gadget handles even-size sets") {
    SetSystem system{4, {{1, 2, 3, 4}}, {}};
    ReductionOutput out = reduce_set_partitioning_to_mhe(system);
    // 16 - 1 copies; the upper half of the set skips the last copy
    CHECK(out.set_vertices[0].size() == 15);
    CHECK(out.instance.graph.edge_count() == 6 + 2 * 15 + 2 * 14);
    SolveResult r = mhe_subset_dp(out.instance);
    CHECK(*r.optimum == 64);
    CHECK(map_solution_back(out, *r.certificate).chosen_sets == std::vector<int>{1});
}

TEST_CASE("partition gadget misses the target without a partition") {
    SetSystem system{4, {{1, 2, 3}, {2, 3, 4}}, {}};
    ReductionOutput out = reduce_set_partitioning_to_mhe(system);
    CHECK(out.instance.k == 64);
    CHECK(*mhe_subset_dp(out.instance).optimum < 64);
    CHECK_THROWS_AS(map_solution_back(out, trivial_extension(out.instance, 1)),
                    std::invalid_argument);

    CHECK_THROWS_AS(reduce_set_partitioning_to_mhe(SetSystem{4, {{1, 2}, {3, 4}}, {}}),
                    std::invalid_argument); // size-2 sets must be eliminated first
}

TEST_CASE("partition gadget agrees with the exact-cover oracle") {
    std::mt19937_64 seeds(67);
    int checked = 0;
    for (int trial = 0; trial < 100 && checked < 20; ++trial) {
        const int n = 4 + static_cast<int>(seeds() % 2);
        SetSystem sys{n, {}, {}};
        const int m = 2 + static_cast<int>(seeds() % 2);
        for (int j = 0; j < m; ++j) {
            std::vector<int> s;
            for (int e = 1; e <= n; ++e)
                if (seeds() % 2)
                    s.push_back(e);
            if (s.empty() || s.size() == 2)
                continue;
            sys.sets.push_back(std::move(s));
        }
        std::vector<char> covered(n + 1, 0);
        for (const auto &s : sys.sets)
            for (int e : s)
                covered[e] = 1;
        if (!std::all_of(covered.begin() + 1, covered.end(),
                         [](char c) { return c != 0; }))
            continue;
        ReductionOutput out = reduce_set_partitioning_to_mhe(sys);
        const bool gadget_yes = *mhe_subset_dp(out.instance).optimum >= out.instance.k;
        CHECK(gadget_yes == has_exact_cover(sys));
        ++checked;
    }
    CHECK(checked == 20);
}

TEST_CASE("map_solution_back rejects colorings below the target") {
    SetSystem system{2, {{1}, {2}}, {}};
    ReductionOutput out = reduce_brds_to_mhe(system, 2);
    // both elements take color 2: only the second set's copies stay happy
    CHECK_THROWS_AS(map_solution_back(out, trivial_extension(out.instance, 2)),
                    std::invalid_argument);
}
