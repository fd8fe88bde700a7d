#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace drd {

/// Vertices are 1-based: a graph of order n has vertices 1..n.
using Vertex = int;

/// Sorted ascending, no duplicates.
using VertexSet = std::vector<Vertex>;

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph. Degrees, extremal degrees and the
/// canonical edge list are computed once at construction; neighbour lists are
/// sorted ascending.
class Graph {
 public:
  /// Throws Error{OutOfRange | SelfLoop | DuplicateEdge}.
  Graph(int n, std::span<const Edge> edges);

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }

  bool contains(Vertex v) const noexcept { return v >= 1 && v <= n_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[index(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[index(v)].size()); }
  bool adjacent(Vertex u, Vertex v) const;

  int max_degree() const noexcept { return max_degree_; }
  int min_degree() const noexcept { return min_degree_; }
  std::vector<int> degree_sequence() const;

  /// Edges as (u, v) with u < v, sorted lexicographically.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t index(Vertex v) const;

  int n_ = 0;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
  int max_degree_ = 0;
  int min_degree_ = 0;
};

Graph build_graph(int n, std::span<const Edge> edges);

/// Hop count of a shortest u-v path; nullopt when unreachable.
std::optional<int> bfs_distance(const Graph& g, Vertex u, Vertex v);

/// Distances from `source` to every vertex (index v-1); -1 marks unreachable.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// Minimum distance over unordered pairs of distinct vertices of `s`.
/// nullopt stands for an infinite radius: |s| <= 1 or no pair is connected.
std::optional<int> restricted_radius(const Graph& g, std::span<const Vertex> s);

/// Two-colouring (colour of v at index v-1, values 0/1) when g has no odd
/// cycle; nullopt otherwise.
std::optional<std::vector<int>> is_bipartite(const Graph& g);

VertexSet isolates(const Graph& g);

bool is_connected(const Graph& g);

/// Sorts and deduplicates; throws OutOfRange if any vertex is not in g.
VertexSet make_vertex_set(const Graph& g, std::span<const Vertex> vertices);

}  // namespace drd
