#pragma once

#include <optional>
#include <string>
#include <vector>

#include "happy/model.hpp"

namespace happy {

// Family of nonempty subsets of [1..universe_size], optionally weighted.
struct SetSystem {
    int universe_size = 0;
    std::vector<std::vector<int>> sets;
    std::vector<long long> weights; // empty, or one positive weight per set

    void validate() const;
    bool weighted() const { return !weights.empty(); }
    long long weight_of(int j) const { return weighted() ? weights[j] : 1; }
};

enum class SourceKind { SetPacking, Brds, IndependentSet, X3C, SetPartitioning };

std::string to_string(SourceKind kind);

// A gadget instance together with the table linking source objects to gadget
// vertices and the retained source data needed for verification.
struct ReductionOutput {
    Instance instance;
    SourceKind source_kind;

    std::vector<int> element_vertices;            // universe element i -> u_i
    std::vector<std::vector<int>> set_vertices;   // set j -> its precolored copies
    std::vector<int> guard_vertices;              // t- or w-block
    std::vector<int> edge_vertices;               // subdivision vertex per source edge

    long long guarantee = 0;  // value promised by the stated trivial extension
    int guarantee_color = 0;

    std::optional<SetSystem> source_system;
    std::optional<Graph> source_graph;
    std::optional<Coloring> source_coloring;
    long long source_k = 0;
};

ReductionOutput reduce_set_packing_to_mhv(const SetSystem &system, long long k);

// Requires all sets of equal size d, universe size n = k*d, full coverage.
ReductionOutput reduce_brds_to_mhe(const SetSystem &system, long long k);

// Subdivides every edge; original vertices keep their (proper) colors.
// S is independent in the source iff S can be simultaneously happy here.
ReductionOutput reduce_colored_graph_to_mhv_subdivision(const Graph &source,
                                                        const Coloring &proper_coloring,
                                                        long long k);

// Above-guarantee gadget; pads an even n by one extra set over new elements.
ReductionOutput reduce_x3c_to_mhe_above_guarantee(int n, std::vector<std::vector<int>> sets);

// Replaces size-2 sets by disjoint unions, preserving Set Partitioning yes/no.
SetSystem eliminate_size_two_sets(const SetSystem &system);

// Requires no size-2 sets (run eliminate_size_two_sets first), n > 2, coverage.
ReductionOutput reduce_set_partitioning_to_mhe(const SetSystem &system);

struct SourceCertificate {
    std::vector<int> chosen_sets;     // 1-based set indices
    std::vector<int> independent_set; // source vertices (subdivision gadgets)
};

// Maps a gadget coloring meeting the target back to a verified source
// certificate. Throws std::invalid_argument below target and InternalError if
// the back-mapped certificate fails source-side verification.
SourceCertificate map_solution_back(const ReductionOutput &output, const Coloring &coloring);

// Source-side brute-force oracles (desk scale).
long long max_set_packing_value(const SetSystem &system);
bool has_exact_cover(const SetSystem &system);
long long max_independent_set(const Graph &graph);

} // namespace happy
