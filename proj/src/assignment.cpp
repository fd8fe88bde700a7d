#include "assignment.hpp"

#include <algorithm>
#include <deque>

namespace drd::detail {

AssignmentSolver::AssignmentSolver(const Graph& g, std::vector<int> capacity)
    : g_(g),
      capacity_(std::move(capacity)),
      in_d_(static_cast<std::size_t>(g.order()), 0),
      owner_(static_cast<std::size_t>(g.order()), 0),
      load_(static_cast<std::size_t>(g.order())),
      visit_stamp_(static_cast<std::size_t>(g.order()), 0) {}

int AssignmentSolver::solve(std::span<const char> in_d) {
  std::copy(in_d.begin(), in_d.end(), in_d_.begin());
  std::fill(owner_.begin(), owner_.end(), 0);
  for (auto& l : load_) l.clear();

  int deficit = 0;
  for (Vertex u = 1; u <= g_.order(); ++u) {
    if (in_d_[u - 1]) continue;
    ++stamp_;
    if (!augment(u)) ++deficit;
  }
  return deficit;
}

bool AssignmentSolver::augment(Vertex u) {
  // Direct placement first keeps paths short on the common easy case.
  for (Vertex s : g_.neighbors(u)) {
    if (in_d_[s - 1] && static_cast<int>(load_[s - 1].size()) < capacity_[s - 1]) {
      load_[s - 1].push_back(u);
      owner_[u - 1] = s;
      return true;
    }
  }
  for (Vertex s : g_.neighbors(u)) {
    if (!in_d_[s - 1] || visit_stamp_[s - 1] == stamp_) continue;
    visit_stamp_[s - 1] = stamp_;
    if (capacity_[s - 1] == 0) continue;
    auto& assigned = load_[s - 1];
    for (std::size_t i = 0; i < assigned.size(); ++i) {
      Vertex w = assigned[i];
      owner_[w - 1] = 0;
      if (augment(w)) {
        // augment() may have appended to other loads but never to this one,
        // since s is stamped; index i is still w.
        assigned[i] = u;
        owner_[u - 1] = s;
        return true;
      }
      owner_[w - 1] = s;
    }
  }
  return false;
}

VertexSet AssignmentSolver::unmatched() const {
  VertexSet out;
  for (Vertex u = 1; u <= g_.order(); ++u)
    if (!in_d_[u - 1] && owner_[u - 1] == 0) out.push_back(u);
  return out;
}

VertexSet AssignmentSolver::deficient_from(Vertex root) const {
  std::vector<char> seen_demand(static_cast<std::size_t>(g_.order()), 0);
  std::vector<char> seen_supply(static_cast<std::size_t>(g_.order()), 0);
  std::deque<Vertex> queue{root};
  seen_demand[root - 1] = 1;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex s : g_.neighbors(u)) {
      if (!in_d_[s - 1] || seen_supply[s - 1]) continue;
      seen_supply[s - 1] = 1;
      for (Vertex w : load_[s - 1]) {
        if (!seen_demand[w - 1]) {
          seen_demand[w - 1] = 1;
          queue.push_back(w);
        }
      }
    }
  }
  VertexSet out;
  for (Vertex u = 1; u <= g_.order(); ++u)
    if (seen_demand[u - 1]) out.push_back(u);
  return out;
}

VertexSet AssignmentSolver::deficient() const {
  VertexSet out;
  for (Vertex u : unmatched()) {
    VertexSet part = deficient_from(u);
    VertexSet merged;
    std::set_union(out.begin(), out.end(), part.begin(), part.end(), std::back_inserter(merged));
    out = std::move(merged);
  }
  return out;
}

}  // namespace drd::detail
