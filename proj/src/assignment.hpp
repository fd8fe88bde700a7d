#pragma once

#include <span>
#include <vector>

#include "drd/graph.hpp"

namespace drd::detail {

// Maximum capacitated assignment of outside vertices to adjacent dominators:
// a bipartite b-matching with supply capacity[v] on every v in D and demand 1
// on every vertex outside D. Solved by single-unit augmenting paths, demand
// vertices processed in ascending order, so results are deterministic.
class AssignmentSolver {
 public:
  AssignmentSolver(const Graph& g, std::vector<int> capacity);

  // in_d has one entry per vertex (index v-1). Returns the number of outside
  // vertices left without a dominator.
  int solve(std::span<const char> in_d);

  // Valid after solve().
  Vertex dominator_of(Vertex u) const { return owner_[u - 1]; }
  VertexSet unmatched() const;
  // Vertices reachable by alternating paths from the unmatched ones; every
  // dominator adjacent to this set is saturated by it, so its demand exceeds
  // the capacity available to it.
  VertexSet deficient() const;
  // Same closure grown from a single unmatched vertex.
  VertexSet deficient_from(Vertex u) const;

 private:
  bool augment(Vertex u);

  const Graph& g_;
  std::vector<int> capacity_;
  std::vector<char> in_d_;
  std::vector<Vertex> owner_;               // dominator assigned to u, 0 if none
  std::vector<std::vector<Vertex>> load_;   // outside vertices assigned to v
  std::vector<int> visit_stamp_;
  int stamp_ = 0;
};

}  // namespace drd::detail
