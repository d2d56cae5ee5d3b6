#pragma once

#include <cstdint>
#include <vector>

#include "happy/enumerate.hpp"
#include "happy/solve_result.hpp"

namespace happy {

struct RandomizedConfig {
    std::uint64_t seed = 0;
    // 0 means auto: ceil(3 * ell^k), capped at max_repetitions.
    std::uint64_t repetitions = 0;
    std::uint64_t max_repetitions = 10'000'000;

    std::uint64_t effective_repetitions(int ell, long long k) const;
};

// Exhaustive oracle. Throws ResourceLimitError when ell^{n'} exceeds budget.
SolveResult mhv_brute_force(const Instance &instance,
                            unsigned long long budget = kDefaultEnumerationBudget);

// One run of the randomized branching procedure. Returns a set of vertices
// that can be made happy simultaneously; on a yes-instance the set has size
// >= k with probability at least ell^{-k}.
std::vector<int> guess_answer(const Instance &instance, std::uint64_t seed);

// Turns a guess_answer set into a certificate coloring by replaying the
// forced neighborhood assignments, then trivially extending the rest.
// Throws InternalError if the set is not simultaneously satisfiable.
Coloring reconstruct_coloring(const Instance &instance, const std::vector<int> &happy_set);

// Repetition wrapper. Sound: never answers yes without a verified certificate.
SolveResult mhv_randomized(const Instance &instance, const RandomizedConfig &config);

// Best of the ell trivial extensions; ties go to the lowest color.
// Its value is always >= |U| + |P|/ell.
SolveResult best_trivial_extension(const Instance &instance);

} // namespace happy
