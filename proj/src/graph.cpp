#include "evencycles/graph.hpp"

#include <algorithm>
#include <set>

#include "evencycles/errors.hpp"

namespace evencycles {

Graph::Graph(int order) {
  if (order < 0) throw InputError("graph order must be non-negative");
  adj_.resize(static_cast<std::size_t>(order));
}

Graph::Graph(int order, std::span<const Edge> edges) : Graph(order) {
  for (const Edge& e : edges) {
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v >= order) {
      throw InputError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       "} out of range for order " + std::to_string(order));
    }
    adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw InputError("parallel edge");
    }
  }
  edge_count_ = static_cast<int>(edges.size());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  const auto& list = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adj_[static_cast<std::size_t>(u)]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
  auto es = edges();
  if (!has_edge(u, v)) es.emplace_back(u, v);
  return Graph(order(), es);
}

Graph Graph::without_edge(Vertex u, Vertex v) const {
  auto es = edges();
  std::erase(es, Edge(u, v));
  return Graph(order(), es);
}

Path Path::reversed() const {
  return Path{std::vector<Vertex>(vertices.rbegin(), vertices.rend())};
}

bool Path::contains(Vertex v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

Path concat(const Path& a, const Path& b) {
  if (a.vertices.empty()) return b;
  if (b.vertices.empty()) return a;
  if (a.back() != b.front()) throw InputError("concat: paths do not share an endpoint");
  Path out = a;
  out.vertices.insert(out.vertices.end(), b.vertices.begin() + 1, b.vertices.end());
  return out;
}

bool Cycle::contains(Vertex v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

int Cycle::position(Vertex v) const {
  auto it = std::find(vertices.begin(), vertices.end(), v);
  if (it == vertices.end()) throw InputError("vertex " + std::to_string(v) + " is not on the cycle");
  return static_cast<int>(it - vertices.begin());
}

Path Cycle::arc(Vertex u, Vertex v) const {
  const int n = length();
  int i = position(u);
  const int j = position(v);
  Path p;
  p.vertices.push_back(vertices[static_cast<std::size_t>(i)]);
  while (i != j) {
    i = (i + 1) % n;
    p.vertices.push_back(vertices[static_cast<std::size_t>(i)]);
  }
  return p;
}

Cycle Cycle::canonical() const {
  if (vertices.empty()) return *this;
  const int n = length();
  const int start = static_cast<int>(std::min_element(vertices.begin(), vertices.end()) - vertices.begin());
  const Vertex next = vertices[static_cast<std::size_t>((start + 1) % n)];
  const Vertex prev = vertices[static_cast<std::size_t>((start + n - 1) % n)];
  const int step = next <= prev ? 1 : n - 1;
  Cycle out;
  out.vertices.reserve(vertices.size());
  for (int k = 0, i = start; k < n; ++k, i = (i + step) % n) {
    out.vertices.push_back(vertices[static_cast<std::size_t>(i)]);
  }
  return out;
}

Cycle Cycle::reversed() const {
  return Cycle{std::vector<Vertex>(vertices.rbegin(), vertices.rend())};
}

Cycle close_path(const Path& p) { return Cycle{p.vertices}; }

Cycle join_paths(const Path& a_to_b, const Path& b_to_a) {
  if (a_to_b.vertices.empty() || b_to_a.vertices.empty() || a_to_b.back() != b_to_a.front() ||
      b_to_a.back() != a_to_b.front()) {
    throw InputError("join_paths: endpoints do not match");
  }
  Cycle c{a_to_b.vertices};
  c.vertices.insert(c.vertices.end(), b_to_a.vertices.begin() + 1, b_to_a.vertices.end() - 1);
  return c;
}

std::optional<std::string> path_defect(const Graph& g, const Path& p) {
  if (p.vertices.empty()) return "empty path";
  std::set<Vertex> seen;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    const Vertex v = p.vertices[i];
    if (!g.contains(v)) return "unknown vertex " + std::to_string(v);
    if (!seen.insert(v).second) return "repeated vertex " + std::to_string(v);
    if (i > 0 && !g.has_edge(p.vertices[i - 1], v)) {
      return "missing edge {" + std::to_string(p.vertices[i - 1]) + "," + std::to_string(v) + "}";
    }
  }
  return std::nullopt;
}

std::optional<std::string> cycle_defect(const Graph& g, const Cycle& c) {
  if (c.length() < 3) return "cycle shorter than 3";
  if (auto d = path_defect(g, Path{c.vertices})) return d;
  if (!g.has_edge(c.vertices.back(), c.vertices.front())) {
    return "missing closing edge {" + std::to_string(c.vertices.back()) + "," +
           std::to_string(c.vertices.front()) + "}";
  }
  return std::nullopt;
}

std::vector<Edge> chords(const Graph& g, const Cycle& c) {
  std::vector<Edge> out;
  const int n = c.length();
  std::vector<int> pos(static_cast<std::size_t>(g.order()), -1);
  for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(c.vertices[static_cast<std::size_t>(i)])] = i;
  for (Vertex u : c.vertices) {
    for (Vertex w : g.neighbors(u)) {
      const int pu = pos[static_cast<std::size_t>(u)];
      const int pw = pos[static_cast<std::size_t>(w)];
      if (pw < 0 || u > w) continue;
      const int gap = (pw - pu + n) % n;
      if (gap != 1 && gap != n - 1) out.emplace_back(u, w);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace evencycles
