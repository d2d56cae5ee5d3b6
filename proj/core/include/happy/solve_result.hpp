#pragma once

#include <cstdint>
#include <optional>

#include "happy/model.hpp"

namespace happy {

struct SolveStats {
    std::uint64_t calls = 0;      // procedure invocations / colorings evaluated
    int max_depth = 0;            // deepest branching depth reached
    double elapsed_ms = 0.0;
    std::uint64_t seed = 0;       // base RNG seed (randomized solvers only)
    std::uint64_t repetitions = 0; // repetitions actually run
};

struct SolveResult {
    std::optional<bool> decision;      // w.r.t. the instance target k
    std::optional<long long> optimum;  // exact solvers only
    std::optional<Coloring> certificate;
    SolveStats stats;

    bool is_yes() const { return decision.value_or(false); }
};

} // namespace happy
