#pragma once

// Test-only reference implementations. They work straight from definitions
// (explicit assignment enumeration, subset enumeration, Floyd-Warshall) and
// share no code paths with the library routines they check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "drd/graph.hpp"
#include "drd/restriction.hpp"
#include "drd/rng.hpp"

namespace oracle {

using drd::Edge;
using drd::Vertex;

inline drd::Instance sample7(std::vector<int> f = {2, 2, 1, 3, 2, 1, 1}) {
  const std::vector<Edge> edges{{3, 1}, {1, 4}, {4, 2}, {4, 5}, {4, 7}, {4, 6}, {3, 6}, {2, 5}};
  return drd::Instance(drd::Graph(7, edges), std::move(f));
}

inline int cap(const drd::CapacityRule& rule, int d, int k) {
  if (d == 0) return 0;
  switch (rule.kind) {
    case drd::RuleKind::Ceil: return d % k == 0 ? d / k : d / k + 1;
    case drd::RuleKind::Floor: return d / k;
    case drd::RuleKind::Translate: return d + 1 - k;
    case drd::RuleKind::Classic: return d;
    case drd::RuleKind::KPart: return d % rule.k == 0 ? d / rule.k : d / rule.k + 1;
  }
  return 0;
}

// Does some map from V-D to adjacent D-vertices respect every capacity?
// Enumerates assignment functions one outside vertex at a time.
inline bool feasible(const drd::Instance& inst, const drd::CapacityRule& rule, const std::vector<Vertex>& d) {
  const auto& g = inst.graph();
  const int n = g.order();
  std::vector<char> in_d(n + 1, 0);
  for (Vertex v : d) in_d[v] = 1;
  std::vector<Vertex> outside;
  for (Vertex v = 1; v <= n; ++v)
    if (!in_d[v]) outside.push_back(v);
  std::vector<int> remaining(n + 1, 0);
  for (Vertex v : d) remaining[v] = cap(rule, g.degree(v), inst.k(v));

  std::function<bool(std::size_t)> place = [&](std::size_t i) {
    if (i == outside.size()) return true;
    for (Vertex s : g.neighbors(outside[i])) {
      if (!in_d[s] || remaining[s] == 0) continue;
      --remaining[s];
      const bool ok = place(i + 1);
      ++remaining[s];
      if (ok) return true;
    }
    return false;
  };
  return place(0);
}

// Minimum feasible size, with the lexicographically least minimum set.
inline std::pair<int, std::vector<Vertex>> gamma(const drd::Instance& inst, const drd::CapacityRule& rule) {
  const int n = inst.order();
  std::optional<std::vector<Vertex>> best;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<Vertex> d;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) d.push_back(i + 1);
    if (best && d.size() > best->size()) continue;
    if (!feasible(inst, rule, d)) continue;
    if (!best || d.size() < best->size() || d < *best) best = d;
  }
  return {static_cast<int>(best->size()), *best};
}

inline int matching_number(const drd::Graph& g) {
  const auto& e = g.edges();
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << e.size()); ++mask) {
    std::vector<char> used(g.order() + 1, 0);
    int count = 0;
    bool ok = true;
    for (std::size_t i = 0; i < e.size() && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      ok = !used[e[i].first] && !used[e[i].second];
      used[e[i].first] = used[e[i].second] = 1;
      ++count;
    }
    if (ok) best = std::max(best, count);
  }
  return best;
}

inline int edge_cover(const drd::Graph& g) {
  const auto& e = g.edges();
  int best = 1 << 30;
  for (std::uint32_t mask = 0; mask < (1u << e.size()); ++mask) {
    std::vector<char> hit(g.order() + 1, 0);
    int count = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (mask >> i & 1) {
        hit[e[i].first] = hit[e[i].second] = 1;
        ++count;
      }
    if (std::count(hit.begin() + 1, hit.end(), 1) == g.order()) best = std::min(best, count);
  }
  return best;
}

inline int independence(const drd::Graph& g) {
  int best = 0;
  const int n = g.order();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (auto [u, v] : g.edges())
      if ((mask >> (u - 1) & 1) && (mask >> (v - 1) & 1)) ok = false;
    if (ok) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

// All-pairs hop counts, -1 for unreachable; index [u][v] 1-based.
inline std::vector<std::vector<int>> floyd(const drd::Graph& g) {
  const int n = g.order();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n + 1, std::vector<int>(n + 1, inf));
  for (Vertex v = 1; v <= n; ++v) d[v][v] = 0;
  for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (int k = 1; k <= n; ++k)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (int& x : row)
      if (x >= inf) x = -1;
  return d;
}

// Random graph + admissible f, for property tests.
inline drd::Instance random_instance(drd::SplitMix64& rng, int n_min, int n_max, double p) {
  const int n = static_cast<int>(rng.uniform_int(n_min, n_max));
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v)
      if (rng.bernoulli(p)) edges.emplace_back(u, v);
  drd::Graph g(n, edges);
  std::vector<int> f(n, 1);
  for (Vertex v = 1; v <= n; ++v)
    if (g.degree(v) > 0) f[v - 1] = static_cast<int>(rng.uniform_int(1, g.degree(v)));
  return drd::Instance(std::move(g), std::move(f));
}

}  // namespace oracle
