#include "drd/certify.hpp"

#include <algorithm>

#include "assignment.hpp"
#include "drd/error.hpp"

namespace drd {

Coverage coverage_feasible(const Instance& inst, const CapacityRule& rule, std::span<const Vertex> d) {
  const Graph& g = inst.graph();
  VertexSet set = make_vertex_set(g, d);
  std::vector<char> in_d(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : set) in_d[v - 1] = 1;

  detail::AssignmentSolver solver(g, capacity_vector(inst, rule));
  Coverage out;
  if (solver.solve(in_d) == 0) {
    out.feasible = true;
    for (Vertex u = 1; u <= g.order(); ++u)
      if (!in_d[u - 1]) out.certificate.assignment.emplace_back(u, solver.dominator_of(u));
  } else {
    out.uncovered = solver.unmatched();
    out.deficient = solver.deficient();
  }
  out.certificate.set = std::move(set);
  out.certificate.rule = rule;
  return out;
}

bool is_minimal(const Instance& inst, const CapacityRule& rule, std::span<const Vertex> d) {
  const VertexSet set = make_vertex_set(inst.graph(), d);
  if (!coverage_feasible(inst, rule, set).feasible) throw Error(ErrorKind::NotADrdSet, "set is not a DRD set");
  for (std::size_t i = 0; i < set.size(); ++i) {
    VertexSet smaller = set;
    smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
    if (coverage_feasible(inst, rule, smaller).feasible) return false;
  }
  return true;
}

bool certificate_valid(const Instance& inst, const Certificate& cert) {
  const Graph& g = inst.graph();
  std::vector<char> in_d(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : cert.set) {
    if (!g.contains(v)) return false;
    in_d[v - 1] = 1;
  }
  std::vector<int> load(static_cast<std::size_t>(g.order()), 0);
  std::vector<char> covered(static_cast<std::size_t>(g.order()), 0);
  for (auto [u, s] : cert.assignment) {
    if (!g.contains(u) || !g.contains(s) || in_d[u - 1] || !in_d[s - 1] || covered[u - 1]) return false;
    if (!g.adjacent(u, s)) return false;
    covered[u - 1] = 1;
    ++load[s - 1];
  }
  const auto cap = capacity_vector(inst, cert.rule);
  for (Vertex v = 1; v <= g.order(); ++v) {
    if (!in_d[v - 1] && !covered[v - 1]) return false;
    if (load[v - 1] > cap[v - 1]) return false;
  }
  return true;
}

}  // namespace drd
