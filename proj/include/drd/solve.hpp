#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "drd/certify.hpp"
#include "drd/graph.hpp"
#include "drd/restriction.hpp"

namespace drd {

enum class Method { BruteForce, BranchAndBound };
std::string_view to_string(Method method);

struct SolveOptions {
  /// Largest order accepted by the exhaustive routines (at most 64).
  int brute_force_limit = 20;
};

struct SolveResult {
  CapacityRule rule;
  int gamma = 0;
  Certificate witness;
  std::uint64_t explored = 0;
  Method method = Method::BruteForce;
};

/// Tries subsets by increasing size, then lexicographically by sorted
/// members; the witness is the lexicographically least minimum DRD set.
/// Throws Error{TooLarge} above the brute-force limit.
SolveResult solve_brute(const Instance& inst, const CapacityRule& rule, const SolveOptions& options = {});

/// Branch and bound. Only gamma is contractual; the witness is some minimum
/// DRD set.
SolveResult solve_bnb(const Instance& inst, const CapacityRule& rule);

/// Greedy feasible set: repeatedly add the vertex whose addition shrinks the
/// number of unassignable vertices the most (ties to the lowest index).
VertexSet greedy_upper_bound(const Instance& inst, const CapacityRule& rule);

/// ceil(n / (1 + ceil(max degree / min k))) for Ceil; ceil(n / (1 + max
/// capacity)) for every other rule. Never exceeds gamma.
int lower_bound(const Instance& inst, const CapacityRule& rule);

/// Some feasible set of exactly `size` vertices accepted by `filter`, in the
/// same enumeration order as solve_brute. Throws Error{TooLarge}.
std::optional<VertexSet> find_feasible_set(const Instance& inst, const CapacityRule& rule, int size,
                                           const std::function<bool(const VertexSet&)>& filter,
                                           const SolveOptions& options = {});

struct Matching {
  std::vector<Edge> edges;  // (u, v) with u < v, sorted
  int size = 0;
};

/// Maximum-cardinality matching (Edmonds' blossom algorithm).
Matching max_matching(const Graph& g);

/// Minimum edge cover size, n - mu. Throws Error{HasIsolates}.
int edge_cover_number(const Graph& g);

/// Throws Error{TooLarge} above the limit.
VertexSet maximum_independent_set(const Graph& g, const SolveOptions& options = {});
int independence_number(const Graph& g, const SolveOptions& options = {});

struct GraphInvariants {
  int mu = 0;
  std::optional<int> beta_prime;  // absent when g has isolated vertices
  int alpha = 0;
};

GraphInvariants graph_invariants(const Graph& g, const SolveOptions& options = {});

}  // namespace drd
