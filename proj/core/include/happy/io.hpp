#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "happy/model.hpp"
#include "happy/reductions.hpp"

namespace happy {

// Text format:
//   # comment
//   p <mhv|mhe> <n> <ell> <k>      (exactly once, first non-comment line)
//   e <u> <v>                      (1 <= u < v <= n)
//   c <v> <color>                  (color in 1..ell, at most one per vertex)
Instance parse_instance(const std::string &text);
Instance load_instance(const std::string &path);

// Canonical form: header, sorted edge lines, then sorted color lines.
// parse(serialize(x)) == x; serialize(parse(t)) canonicalizes t.
std::string serialize_instance(const Instance &instance);

// Set-system format:
//   u <n>                          (first non-comment line)
//   s <elem> <elem> ...
//   w <weight>                     (optional, directly after a set line)
SetSystem parse_set_system(const std::string &text);
SetSystem load_set_system(const std::string &path);
std::string serialize_set_system(const SetSystem &system);

// Erdos-Renyi edges plus independent uniform precolors; k is left 0.
Instance generate_random(Kind kind, int n, int ell, double edge_probability,
                         double precolor_fraction, std::uint64_t seed);

} // namespace happy
