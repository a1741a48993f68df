#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace evencycles {

using Vertex = int;

/// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..order()-1.
///
/// Values are immutable once built; the "edit" helpers return new graphs. Adjacency lists are
/// kept sorted so that every traversal visits neighbours smallest-id first, which is what makes
/// all algorithms in this library deterministic.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);
  /// Throws InputError on self-loops, parallel edges or out-of-range ids.
  Graph(int order, std::span<const Edge> edges);

  int order() const noexcept { return static_cast<int>(adj_.size()); }
  int size() const noexcept { return edge_count_; }

  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(static_cast<std::size_t>(v)); }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool has_edge(Vertex u, Vertex v) const;
  bool contains(Vertex v) const noexcept { return v >= 0 && v < order(); }

  /// All edges, sorted.
  std::vector<Edge> edges() const;

  Graph with_edge(Vertex u, Vertex v) const;
  Graph without_edge(Vertex u, Vertex v) const;

  bool operator==(const Graph& other) const { return adj_ == other.adj_; }

 private:
  std::vector<std::vector<Vertex>> adj_;
  int edge_count_ = 0;
};

/// A simple path, stored as its vertex sequence. length() counts edges.
struct Path {
  std::vector<Vertex> vertices;

  int length() const noexcept { return static_cast<int>(vertices.size()) - 1; }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  Path reversed() const;
  bool contains(Vertex v) const;

  bool operator==(const Path&) const = default;
};

/// Concatenates a and b, which must share the endpoint a.back() == b.front().
Path concat(const Path& a, const Path& b);

/// A simple cycle; the order of `vertices` fixes the orientation.
struct Cycle {
  std::vector<Vertex> vertices;

  int length() const noexcept { return static_cast<int>(vertices.size()); }
  bool contains(Vertex v) const;
  /// Index of v in the cyclic sequence; throws InputError when v is not on the cycle.
  int position(Vertex v) const;
  /// Subpath from u to v following the orientation. arc(u, u) is the single vertex u.
  Path arc(Vertex u, Vertex v) const;
  /// Same cycle rotated to start at its smallest vertex, heading towards the smaller neighbour.
  Cycle canonical() const;
  Cycle reversed() const;

  bool operator==(const Cycle&) const = default;
};

/// Builds a cycle by closing a path whose endpoints are adjacent (or by joining two paths
/// with common endpoints: first from a to b, second from b back to a).
Cycle close_path(const Path& p);
Cycle join_paths(const Path& a_to_b, const Path& b_to_a);

/// Returns a description of the first violated invariant, or nullopt when valid.
std::optional<std::string> path_defect(const Graph& g, const Path& p);
std::optional<std::string> cycle_defect(const Graph& g, const Cycle& c);

/// Edges of g joining two non-consecutive vertices of c, sorted.
std::vector<Edge> chords(const Graph& g, const Cycle& c);

}  // namespace evencycles
