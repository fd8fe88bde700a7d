#include "drd/solve.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>

#include "assignment.hpp"
#include "drd/error.hpp"

namespace drd {

namespace {

using Mask = std::uint64_t;

int ceil_div(int a, int b) { return (a + b - 1) / b; }

void require_small(const Graph& g, const SolveOptions& options) {
  const int limit = std::min(options.brute_force_limit, 64);
  if (g.order() > limit) {
    throw Error(ErrorKind::TooLarge,
                "order " + std::to_string(g.order()) + " exceeds brute-force limit " + std::to_string(limit));
  }
}

// Visits every k-subset of {1..n} in lexicographic order of sorted members
// until the visitor returns true.
template <typename Visit>
bool for_each_subset(int n, int k, Visit&& visit) {
  std::vector<Vertex> combo(static_cast<std::size_t>(k));
  std::iota(combo.begin(), combo.end(), 1);
  while (true) {
    if (visit(combo)) return true;
    int i = k - 1;
    while (i >= 0 && combo[i] == n - k + i + 1) --i;
    if (i < 0) return false;
    ++combo[i];
    for (int j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
  }
}

// Cheap necessary conditions evaluated on bitmasks before running the
// assignment solver: D must dominate V, and total capacity must reach |V-D|.
class SubsetScreen {
 public:
  SubsetScreen(const Graph& g, const std::vector<int>& capacity) : capacity_(capacity) {
    const int n = g.order();
    full_ = n == 64 ? ~Mask{0} : ((Mask{1} << n) - 1);
    closed_.resize(static_cast<std::size_t>(n));
    for (Vertex v = 1; v <= n; ++v) {
      Mask m = Mask{1} << (v - 1);
      for (Vertex w : g.neighbors(v)) m |= Mask{1} << (w - 1);
      closed_[v - 1] = m;
    }
  }

  bool passes(const std::vector<Vertex>& combo, int n) const {
    Mask covered = 0;
    long supply = 0;
    for (Vertex v : combo) {
      covered |= closed_[v - 1];
      supply += capacity_[v - 1];
    }
    return covered == full_ && supply >= n - static_cast<long>(combo.size());
  }

 private:
  const std::vector<int>& capacity_;
  std::vector<Mask> closed_;
  Mask full_ = 0;
};

Certificate make_certificate(const Graph& g, const detail::AssignmentSolver& solver, const std::vector<char>& in_d,
                             const CapacityRule& rule) {
  Certificate cert;
  cert.rule = rule;
  for (Vertex v = 1; v <= g.order(); ++v) {
    if (in_d[v - 1])
      cert.set.push_back(v);
    else
      cert.assignment.emplace_back(v, solver.dominator_of(v));
  }
  return cert;
}

// Feasible set of size n - max capacity: keep everything except capacity(v)
// neighbours of the vertex v with the largest capacity, all assigned to v.
VertexSet all_but_neighbourhood(const Graph& g, const std::vector<int>& capacity) {
  const auto best = std::max_element(capacity.begin(), capacity.end());
  const Vertex hub = static_cast<Vertex>(best - capacity.begin()) + 1;
  std::vector<char> dropped(static_cast<std::size_t>(g.order()), 0);
  auto nbrs = g.neighbors(hub);
  for (int i = 0; i < *best; ++i) dropped[nbrs[i] - 1] = 1;
  VertexSet out;
  for (Vertex v = 1; v <= g.order(); ++v)
    if (!dropped[v - 1]) out.push_back(v);
  return out;
}

class BranchAndBound {
 public:
  BranchAndBound(const Instance& inst, const CapacityRule& rule)
      : g_(inst.graph()),
        capacity_(capacity_vector(inst, rule)),
        solver_(g_, capacity_),
        in_d_(static_cast<std::size_t>(g_.order()), 0),
        excluded_(static_cast<std::size_t>(g_.order()), 0) {}

  void seed(VertexSet incumbent) {
    best_size_ = static_cast<int>(incumbent.size());
    best_ = std::move(incumbent);
  }

  void search(int size) {
    ++explored_;
    const int deficit = solver_.solve(in_d_);
    if (deficit == 0) {
      if (size < best_size_) {
        best_size_ = size;
        best_.clear();
        for (Vertex v = 1; v <= g_.order(); ++v)
          if (in_d_[v - 1]) best_.push_back(v);
      }
      return;
    }
    // Adding one vertex w lowers the deficit by at most 1 + capacity(w).
    int max_cap = -1;
    for (Vertex v = 1; v <= g_.order(); ++v)
      if (!in_d_[v - 1] && !excluded_[v - 1]) max_cap = std::max(max_cap, capacity_[v - 1]);
    if (max_cap < 0) return;
    if (size + ceil_div(deficit, 1 + max_cap) >= best_size_) return;

    // Any feasible superset must add a vertex of N[X] for the deficient set X
    // grown from the lowest unassignable vertex.
    const Vertex u = solver_.unmatched().front();
    std::vector<char> pick(static_cast<std::size_t>(g_.order()), 0);
    for (Vertex x : solver_.deficient_from(u)) {
      pick[x - 1] = 1;
      for (Vertex w : g_.neighbors(x)) pick[w - 1] = 1;
    }
    std::vector<Vertex> candidates;
    for (Vertex v = 1; v <= g_.order(); ++v)
      if (pick[v - 1] && !in_d_[v - 1] && !excluded_[v - 1]) candidates.push_back(v);

    std::vector<Vertex> banned;
    for (Vertex c : candidates) {
      in_d_[c - 1] = 1;
      search(size + 1);
      in_d_[c - 1] = 0;
      excluded_[c - 1] = 1;
      banned.push_back(c);
    }
    for (Vertex c : banned) excluded_[c - 1] = 0;
  }

  int best_size() const { return best_size_; }
  const VertexSet& best() const { return best_; }
  std::uint64_t explored() const { return explored_; }

 private:
  const Graph& g_;
  std::vector<int> capacity_;
  detail::AssignmentSolver solver_;
  std::vector<char> in_d_;
  std::vector<char> excluded_;
  VertexSet best_;
  int best_size_ = 0;
  std::uint64_t explored_ = 0;
};

}  // namespace

std::string_view to_string(Method method) {
  return method == Method::BruteForce ? "brute_force" : "branch_and_bound";
}

SolveResult solve_brute(const Instance& inst, const CapacityRule& rule, const SolveOptions& options) {
  const Graph& g = inst.graph();
  require_small(g, options);
  const auto capacity = capacity_vector(inst, rule);
  const SubsetScreen screen(g, capacity);
  detail::AssignmentSolver solver(g, capacity);
  std::vector<char> in_d(static_cast<std::size_t>(g.order()), 0);

  SolveResult result;
  result.rule = rule;
  result.method = Method::BruteForce;
  for (int size = 1; size <= g.order(); ++size) {
    const bool found = for_each_subset(g.order(), size, [&](const std::vector<Vertex>& combo) {
      ++result.explored;
      if (!screen.passes(combo, g.order())) return false;
      std::fill(in_d.begin(), in_d.end(), 0);
      for (Vertex v : combo) in_d[v - 1] = 1;
      return solver.solve(in_d) == 0;
    });
    if (found) {
      result.gamma = size;
      result.witness = make_certificate(g, solver, in_d, rule);
      return result;
    }
  }
  throw Error(ErrorKind::NotADrdSet, "no feasible set found; the full vertex set should always qualify");
}

std::optional<VertexSet> find_feasible_set(const Instance& inst, const CapacityRule& rule, int size,
                                           const std::function<bool(const VertexSet&)>& filter,
                                           const SolveOptions& options) {
  const Graph& g = inst.graph();
  require_small(g, options);
  if (size < 0 || size > g.order()) return std::nullopt;
  const auto capacity = capacity_vector(inst, rule);
  const SubsetScreen screen(g, capacity);
  detail::AssignmentSolver solver(g, capacity);
  std::vector<char> in_d(static_cast<std::size_t>(g.order()), 0);
  std::optional<VertexSet> found;
  for_each_subset(g.order(), size, [&](const std::vector<Vertex>& combo) {
    if (!filter(combo) || !screen.passes(combo, g.order())) return false;
    std::fill(in_d.begin(), in_d.end(), 0);
    for (Vertex v : combo) in_d[v - 1] = 1;
    if (solver.solve(in_d) != 0) return false;
    found = combo;
    return true;
  });
  return found;
}

VertexSet greedy_upper_bound(const Instance& inst, const CapacityRule& rule) {
  const Graph& g = inst.graph();
  detail::AssignmentSolver solver(g, capacity_vector(inst, rule));
  std::vector<char> in_d(static_cast<std::size_t>(g.order()), 0);
  int deficit = solver.solve(in_d);
  while (deficit > 0) {
    Vertex best = 0;
    int best_deficit = deficit;
    for (Vertex v = 1; v <= g.order(); ++v) {
      if (in_d[v - 1]) continue;
      in_d[v - 1] = 1;
      const int d = solver.solve(in_d);
      in_d[v - 1] = 0;
      if (d < best_deficit) {
        best_deficit = d;
        best = v;
      }
    }
    // An unassignable vertex always exists while deficit > 0, and adding it
    // lowers the deficit by at least one.
    if (best < 1) throw Error(ErrorKind::NotADrdSet, "greedy made no progress");
    in_d[best - 1] = 1;
    deficit = best_deficit;
  }
  VertexSet out;
  for (Vertex v = 1; v <= g.order(); ++v)
    if (in_d[v - 1]) out.push_back(v);
  return out;
}

int lower_bound(const Instance& inst, const CapacityRule& rule) {
  const int n = inst.order();
  int reach = 0;
  if (rule.kind == RuleKind::Ceil) {
    const int k_min = *std::min_element(inst.f().begin(), inst.f().end());
    reach = ceil_div(inst.graph().max_degree(), k_min);
  } else {
    const auto cap = capacity_vector(inst, rule);
    reach = *std::max_element(cap.begin(), cap.end());
  }
  return ceil_div(n, 1 + reach);
}

SolveResult solve_bnb(const Instance& inst, const CapacityRule& rule) {
  const Graph& g = inst.graph();
  const auto capacity = capacity_vector(inst, rule);
  BranchAndBound bnb(inst, rule);
  VertexSet greedy = greedy_upper_bound(inst, rule);
  VertexSet constructed = all_but_neighbourhood(g, capacity);
  bnb.seed(constructed.size() < greedy.size() ? std::move(constructed) : std::move(greedy));
  bnb.search(0);

  SolveResult result;
  result.rule = rule;
  result.method = Method::BranchAndBound;
  result.gamma = bnb.best_size();
  result.explored = bnb.explored();
  Coverage cov = coverage_feasible(inst, rule, bnb.best());
  result.witness = std::move(cov.certificate);
  return result;
}

Matching max_matching(const Graph& g) {
  const int n = g.order();
  std::vector<int> match(n, -1), parent(n), base(n);
  std::vector<char> used(n), blossom(n);
  auto nbrs = [&](int v) { return g.neighbors(v + 1); };

  auto lca = [&](int a, int b) {
    std::vector<char> seen(n, 0);
    while (true) {
      a = base[a];
      seen[a] = 1;
      if (match[a] == -1) break;
      a = parent[match[a]];
    }
    while (true) {
      b = base[b];
      if (seen[b]) return b;
      b = parent[match[b]];
    }
  };
  auto mark_path = [&](int v, int b, int child) {
    while (base[v] != b) {
      blossom[base[v]] = blossom[base[match[v]]] = 1;
      parent[v] = child;
      child = match[v];
      v = parent[match[v]];
    }
  };
  auto find_path = [&](int root) {
    std::fill(used.begin(), used.end(), 0);
    std::fill(parent.begin(), parent.end(), -1);
    std::iota(base.begin(), base.end(), 0);
    used[root] = 1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (Vertex w : nbrs(v)) {
        int to = w - 1;
        if (base[v] == base[to] || match[v] == to) continue;
        if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
          int cur = lca(v, to);
          std::fill(blossom.begin(), blossom.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n; ++i) {
            if (blossom[base[i]]) {
              base[i] = cur;
              if (!used[i]) {
                used[i] = 1;
                queue.push_back(i);
              }
            }
          }
        } else if (parent[to] == -1) {
          parent[to] = v;
          if (match[to] == -1) return to;
          used[match[to]] = 1;
          queue.push_back(match[to]);
        }
      }
    }
    return -1;
  };

  for (int v = 0; v < n; ++v) {
    if (match[v] != -1) continue;
    int u = find_path(v);
    while (u != -1) {
      int pv = parent[u];
      int next = match[pv];
      match[u] = pv;
      match[pv] = u;
      u = next;
    }
  }

  Matching out;
  for (int v = 0; v < n; ++v)
    if (match[v] > v) out.edges.emplace_back(v + 1, match[v] + 1);
  out.size = static_cast<int>(out.edges.size());
  return out;
}

int edge_cover_number(const Graph& g) {
  if (g.min_degree() == 0) throw Error(ErrorKind::HasIsolates, "edge cover needs an isolate-free graph");
  return g.order() - max_matching(g).size;
}

VertexSet maximum_independent_set(const Graph& g, const SolveOptions& options) {
  require_small(g, options);
  const int n = g.order();
  std::vector<Mask> nbr(static_cast<std::size_t>(n), 0);
  for (Vertex v = 1; v <= n; ++v)
    for (Vertex w : g.neighbors(v)) nbr[v - 1] |= Mask{1} << (w - 1);

  Mask best = 0;
  int best_size = 0;
  auto grow = [&](auto&& self, Mask chosen, int size, Mask candidates) -> void {
    if (candidates == 0) {
      if (size > best_size) {
        best_size = size;
        best = chosen;
      }
      return;
    }
    if (size + std::popcount(candidates) <= best_size) return;
    const int v = std::countr_zero(candidates);
    const Mask bit = Mask{1} << v;
    self(self, chosen | bit, size + 1, candidates & ~bit & ~nbr[v]);
    if ((nbr[v] & candidates) != 0) self(self, chosen, size, candidates & ~bit);
  };
  const Mask all = n == 64 ? ~Mask{0} : ((Mask{1} << n) - 1);
  grow(grow, 0, 0, all);

  VertexSet out;
  for (int v = 0; v < n; ++v)
    if (best >> v & 1) out.push_back(v + 1);
  return out;
}

int independence_number(const Graph& g, const SolveOptions& options) {
  return static_cast<int>(maximum_independent_set(g, options).size());
}

GraphInvariants graph_invariants(const Graph& g, const SolveOptions& options) {
  GraphInvariants inv;
  inv.mu = max_matching(g).size;
  if (g.min_degree() > 0) inv.beta_prime = g.order() - inv.mu;
  inv.alpha = independence_number(g, options);
  return inv;
}

}  // namespace drd
