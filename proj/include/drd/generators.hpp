#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "drd/graph.hpp"

namespace drd {

struct PathSpec { int n; };
struct CycleSpec { int n; };
struct CompleteSpec { int n; };
struct StarSpec { int leaves; };
/// One leaf count per spine vertex, in spine order.
struct CaterpillarSpec { std::vector<int> leaves; };
/// Caterpillar whose leaves hang only off spine positions i = 2 (mod 3).
struct C2Spec { int spine; int leaves; };
struct GnpSpec { int n; double p; std::uint64_t seed; };

using FamilySpec = std::variant<PathSpec, CycleSpec, CompleteSpec, StarSpec, CaterpillarSpec, C2Spec, GnpSpec>;

/// Grammar: path:<n> | cycle:<n> | complete:<n> | star:<leaves> |
///          caterpillar:<l1>,<l2>,... | c2:<spine>,<leaves> | gnp:<n>,<p>,<seed>
FamilySpec parse_family_spec(std::string_view text);
std::string to_string(const FamilySpec& spec);

enum class Role { Spine, Leaf, Center, Plain };
std::string_view to_string(Role role);

struct Generated {
  Graph graph;
  std::vector<Role> roles;  // index v-1
};

/// Canonical numbering: spine vertices 1..n in path order, then leaves
/// grouped by spine vertex in ascending spine order. A star's centre is 1.
/// Throws Error{InvalidSpec} (or InvalidProbability for gnp).
Generated generate(const FamilySpec& spec);

/// Every pair u < v, in lexicographic order, is kept when the next
/// SplitMix64 draw passes bernoulli(p).
Graph generate_gnp(int n, double p, std::uint64_t seed);

struct AllOnes {};
struct AllDegrees {};
/// k(v) uniform on [1, deg v], one draw per non-isolated vertex in index order.
struct UniformRandom { std::uint64_t seed; };
struct Explicit { std::vector<int> values; };

using FMode = std::variant<AllOnes, AllDegrees, UniformRandom, Explicit>;

/// `ones | degrees | random:<seed> | explicit:<k1>,<k2>,...`
FMode parse_f_mode(std::string_view text);
std::string to_string(const FMode& mode);

/// Throws Error{InadmissibleF} for an Explicit list outside the window.
std::vector<int> generate_f(const Graph& g, const FMode& mode);

}  // namespace drd
