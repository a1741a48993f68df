#pragma once

// Helpers shared by the finder translation units.

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "evencycles/connectivity.hpp"
#include "evencycles/errors.hpp"
#include "evencycles/finder.hpp"
#include "evencycles/graph.hpp"
#include "evencycles/oracle.hpp"

namespace evencycles::detail {

// Guard used where the construction falls back on exhaustive search (cited theorems and
// "easily found" configurations).
inline constexpr int kFallbackGuard = 20;

inline std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

inline void ensure(bool ok, const std::string& what) {
  if (!ok) throw InternalInvariantError(what);
}

inline void hit(FinderTrace* trace, const char* branch) {
  if (trace != nullptr) trace->hit(branch);
}

inline std::vector<bool> mask(int n, std::span<const Vertex> vs) {
  std::vector<bool> m(idx(n), false);
  for (Vertex v : vs) m[idx(v)] = true;
  return m;
}

inline std::vector<Vertex> all_but(int n, const std::vector<bool>& excluded) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    if (!excluded[idx(v)]) out.push_back(v);
  }
  return out;
}

// Path from a to b whose internal vertices are allowed; b need not be allowed.
inline std::optional<Path> path_within(const Graph& g, Vertex a, Vertex b, const std::vector<bool>& allowed) {
  const Vertex target[1] = {b};
  return shortest_path_to(g, a, target, allowed);
}

// Orders a pair of even cycles differing by two into a certificate.
inline CyclePairCertificate make_pair(const Cycle& a, const Cycle& b) {
  return a.length() <= b.length() ? CyclePairCertificate{a, b} : CyclePairCertificate{b, a};
}

// Every returned certificate passes the validator, or the construction is wrong.
inline CyclePairCertificate checked(const Graph& g, CyclePairCertificate cert, const char* where) {
  if (auto v = validate(cert, g); !v) throw InternalInvariantError(std::string(where) + ": " + v.diagnosis);
  return cert;
}

inline std::vector<Vertex> cycle_vertices_sorted(const Cycle& c) {
  std::vector<Vertex> vs = c.vertices;
  std::sort(vs.begin(), vs.end());
  return vs;
}

inline Cycle theta_cycle(const ThetaGraph& t) { return theta_even_cycle(t).canonical(); }

inline void require_input(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

inline void require_three_connected(const Graph& g, const char* who) {
  if (g.order() < 4 || !is_three_connected(g)) {
    throw HypothesisFailure("3-connected", std::string(who) + " needs a 3-connected graph");
  }
}

inline void require_cycle(const Graph& g, const Cycle& c, int parity, const char* who) {
  if (auto d = cycle_defect(g, c)) throw InputError(std::string(who) + ": " + *d);
  if (c.length() % 2 != parity) {
    throw InputError(std::string(who) + ": expected an " + (parity == 0 ? "even" : "odd") + " cycle");
  }
}

inline bool cycle_less(const Cycle& a, const Cycle& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return a.vertices < b.vertices;
}

// Vertex list of a closed sequence if it is a cycle of g, canonicalized.
inline std::optional<Cycle> as_cycle(const Graph& g, std::vector<Vertex> vs) {
  Cycle c{std::move(vs)};
  if (cycle_defect(g, c)) return std::nullopt;
  return c.canonical();
}

// BFS tree of an induced connected vertex set, used for tree paths.
struct SpanningTree {
  std::vector<Vertex> parent;
  std::vector<int> depth;

  Path path(Vertex a, Vertex b) const {
    std::vector<Vertex> left{a}, right{b};
    while (a != b) {
      if (depth[idx(a)] >= depth[idx(b)]) {
        a = parent[idx(a)];
        left.push_back(a);
      } else {
        b = parent[idx(b)];
        right.push_back(b);
      }
    }
    right.pop_back();
    left.insert(left.end(), right.rbegin(), right.rend());
    return Path{left};
  }
};

inline SpanningTree bfs_tree(const Graph& g, const std::vector<Vertex>& vertices) {
  const auto inside = detail::mask(g.order(), vertices);
  SpanningTree t{std::vector<Vertex>(idx(g.order()), -1), std::vector<int>(idx(g.order()), -1)};
  const Vertex root = vertices.front();
  t.depth[idx(root)] = 0;
  std::vector<Vertex> queue{root};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    for (Vertex w : g.neighbors(x)) {
      if (!inside[idx(w)] || t.depth[idx(w)] >= 0) continue;
      t.depth[idx(w)] = t.depth[idx(x)] + 1;
      t.parent[idx(w)] = x;
      queue.push_back(w);
    }
  }
  ensure(queue.size() == vertices.size(), "spanning tree: vertex set is not connected");
  return t;
}

inline std::vector<Vertex> outside_neighbors(const Graph& g, Vertex v, const std::vector<bool>& on_c) {
  std::vector<Vertex> out;
  for (Vertex w : g.neighbors(v)) {
    if (!on_c[idx(w)]) out.push_back(w);
  }
  return out;
}

Cycle stabilize_impl(const Graph& g, std::span<const Vertex> avoid, Cycle c, FinderTrace* trace);
CyclePairCertificate disjoint_odd_even_impl(const Graph& g, const Cycle& d, const std::optional<Cycle>& seed,
                                            FinderTrace* trace);

}  // namespace evencycles::detail
