#pragma once

#include <optional>
#include <vector>

#include "happy/enumerate.hpp"
#include "happy/solve_result.hpp"

namespace happy {

inline constexpr int kDefaultSubsetDpWidth = 25;

struct RemovedComponent {
    std::vector<int> vertices;
    long long internal_edges = 0;
};

// Outcome of exhaustively applying the all-uncolored-component rule.
struct KernelResult {
    enum class Status { ResolvedYes, Reduced };

    Status status = Status::Reduced;
    std::optional<Instance> reduced_instance;
    std::vector<RemovedComponent> removed_components;
    long long k_reduction = 0; // edges credited against k
    // Reduced vertex i corresponds to original vertex kept_vertices[i-1].
    std::vector<int> kept_vertices;
    // For ResolvedYes: a coloring of the ORIGINAL instance meeting its target.
    std::optional<Coloring> certificate;
};

// Exhaustive oracle. Throws ResourceLimitError when ell^{n'} exceeds budget.
SolveResult mhe_brute_force(const Instance &instance,
                            unsigned long long budget = kDefaultEnumerationBudget);

// Removes connected components made only of uncolored vertices, crediting
// their internal edges against k. Resolves yes outright when the remaining
// target is met by counting uncolored vertices.
KernelResult kernelize_mhe(const Instance &instance);

// Exact optimum by dynamic programming over subsets of uncolored vertices.
// Runs in O(3^{n'}); n' above width_limit raises ResourceLimitError.
SolveResult mhe_subset_dp(const Instance &instance, int width_limit = kDefaultSubsetDpWidth);

// Kernelization followed by the subset DP on the reduced instance, with the
// certificate lifted back through the removed components.
SolveResult mhe_solve(const Instance &instance, int width_limit = kDefaultSubsetDpWidth);

} // namespace happy
