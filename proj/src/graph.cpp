#include "drd/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "drd/error.hpp"

namespace drd {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::InvalidProbability: return "InvalidProbability";
    case ErrorKind::InadmissibleF: return "InadmissibleF";
    case ErrorKind::KPartTooLarge: return "KPartTooLarge";
    case ErrorKind::NotADrdSet: return "NotADrdSet";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::HasIsolates: return "HasIsolates";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::CountMismatch: return "CountMismatch";
  }
  return "Unknown";
}

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  if (n < 1) throw Error(ErrorKind::OutOfRange, "graph order must be at least 1, got " + std::to_string(n));
  adjacency_.resize(static_cast<std::size_t>(n));
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (!contains(u) || !contains(v)) {
      throw Error(ErrorKind::OutOfRange, "edge {" + std::to_string(u) + "," + std::to_string(v) +
                                             "} outside 1.." + std::to_string(n));
    }
    if (u == v) throw Error(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(u));
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw Error(ErrorKind::DuplicateEdge,
                "edge {" + std::to_string(dup->first) + "," + std::to_string(dup->second) + "} listed twice");
  }
  for (auto [u, v] : edges_) {
    adjacency_[index(u)].push_back(v);
    adjacency_[index(v)].push_back(u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());

  auto [lo, hi] = std::minmax_element(adjacency_.begin(), adjacency_.end(),
                                      [](const auto& a, const auto& b) { return a.size() < b.size(); });
  min_degree_ = static_cast<int>(lo->size());
  max_degree_ = static_cast<int>(hi->size());
}

std::size_t Graph::index(Vertex v) const {
  if (!contains(v)) throw Error(ErrorKind::OutOfRange, "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
  return static_cast<std::size_t>(v - 1);
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nbrs = adjacency_[index(u)];
  index(v);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> out;
  out.reserve(adjacency_.size());
  for (const auto& nbrs : adjacency_) out.push_back(static_cast<int>(nbrs.size()));
  return out;
}

Graph build_graph(int n, std::span<const Edge> edges) { return Graph(n, edges); }

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  g.neighbors(source);  // range check
  std::deque<Vertex> queue{source};
  dist[source - 1] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w - 1] < 0) {
        dist[w - 1] = dist[u - 1] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::optional<int> bfs_distance(const Graph& g, Vertex u, Vertex v) {
  g.neighbors(v);
  int d = bfs_distances(g, u)[v - 1];
  if (d < 0) return std::nullopt;
  return d;
}

std::optional<int> restricted_radius(const Graph& g, std::span<const Vertex> s) {
  const VertexSet members = make_vertex_set(g, s);
  std::optional<int> best;
  for (std::size_t i = 0; i + 1 < members.size(); ++i) {
    const auto dist = bfs_distances(g, members[i]);
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      int d = dist[members[j] - 1];
      if (d >= 0 && (!best || d < *best)) best = d;
    }
  }
  return best;
}

std::optional<std::vector<int>> is_bipartite(const Graph& g) {
  std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
  for (Vertex root = 1; root <= g.order(); ++root) {
    if (color[root - 1] >= 0) continue;
    color[root - 1] = 0;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (color[w - 1] < 0) {
          color[w - 1] = 1 - color[u - 1];
          queue.push_back(w);
        } else if (color[w - 1] == color[u - 1]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

VertexSet isolates(const Graph& g) {
  VertexSet out;
  for (Vertex v = 1; v <= g.order(); ++v)
    if (g.degree(v) == 0) out.push_back(v);
  return out;
}

bool is_connected(const Graph& g) {
  const auto dist = bfs_distances(g, 1);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

VertexSet make_vertex_set(const Graph& g, std::span<const Vertex> vertices) {
  VertexSet out(vertices.begin(), vertices.end());
  for (Vertex v : out)
    if (!g.contains(v)) throw Error(ErrorKind::OutOfRange, "vertex " + std::to_string(v) + " outside 1.." + std::to_string(g.order()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace drd
