#pragma once

#include <functional>

#include "happy/model.hpp"

namespace happy {

inline constexpr unsigned long long kDefaultEnumerationBudget = 20'000'000ull;

// ell^{n'}, saturating at ULLONG_MAX.
unsigned long long extension_count(const Instance &instance);

// Invokes fn with every total extension of the instance precoloring.
void for_each_extension(const Instance &instance,
                        const std::function<void(const Coloring &)> &fn);

} // namespace happy
