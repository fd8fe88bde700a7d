#pragma once

#include <span>
#include <utility>
#include <vector>

#include "drd/graph.hpp"
#include "drd/restriction.hpp"

namespace drd {

/// A dominating set together with the outside-vertex -> dominator assignment
/// that proves it respects every dominator's capacity.
struct Certificate {
  VertexSet set;
  /// (outside vertex, its dominator), sorted by outside vertex.
  std::vector<std::pair<Vertex, Vertex>> assignment;
  CapacityRule rule;
};

struct Coverage {
  bool feasible = false;
  Certificate certificate;  // meaningful when feasible
  /// Outside vertices left without a dominator by a maximum assignment.
  VertexSet uncovered;
  /// Hall witness: these outside vertices need more dominators than the
  /// total capacity of their neighbours in D provides.
  VertexSet deficient;
};

/// A set D is a DRD set under `rule` when every vertex outside D can be
/// assigned to an adjacent member of D without any member v receiving more
/// than capacity(v) vertices. Members of D cover themselves for free.
/// Throws Error{OutOfRange}, Error{KPartTooLarge}.
Coverage coverage_feasible(const Instance& inst, const CapacityRule& rule, std::span<const Vertex> d);

/// True iff no single member can be dropped from the feasible set `d`
/// (sufficient because feasibility is preserved under supersets).
/// Throws Error{NotADrdSet} when `d` itself is infeasible.
bool is_minimal(const Instance& inst, const CapacityRule& rule, std::span<const Vertex> d);

/// Checks both certificate invariants directly (adjacency and loads).
bool certificate_valid(const Instance& inst, const Certificate& cert);

}  // namespace drd
