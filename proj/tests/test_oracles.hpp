#pragma once

// Ground truth for the tests, written independently of the library's own enumerators.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "evencycles/graph.hpp"

namespace testoracle {

using evencycles::Edge;
using evencycles::Graph;
using evencycles::Vertex;

// Cycle lengths by scanning edge subsets in which every vertex has degree 0 or 2 and the
// touched vertices form one component.
inline std::set<int> edge_subset_spectrum(const Graph& g) {
  const auto edges = g.edges();
  const int n = g.order();
  std::set<int> out;
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  std::vector<int> chosen;

  auto is_single_cycle = [&]() {
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
    for (int i : chosen) {
      adj[static_cast<std::size_t>(edges[static_cast<std::size_t>(i)].u)].push_back(edges[static_cast<std::size_t>(i)].v);
      adj[static_cast<std::size_t>(edges[static_cast<std::size_t>(i)].v)].push_back(edges[static_cast<std::size_t>(i)].u);
    }
    for (int v = 0; v < n; ++v) {
      if (deg[static_cast<std::size_t>(v)] != 0 && deg[static_cast<std::size_t>(v)] != 2) return false;
    }
    const Vertex start = edges[static_cast<std::size_t>(chosen.front())].u;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<Vertex> stack{start};
    seen[static_cast<std::size_t>(start)] = true;
    int reached = 0;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      ++reached;
      for (Vertex w : adj[static_cast<std::size_t>(v)]) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          stack.push_back(w);
        }
      }
    }
    return reached == static_cast<int>(chosen.size());
  };

  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (chosen.size() >= 3 && is_single_cycle()) out.insert(static_cast<int>(chosen.size()));
    if (static_cast<int>(chosen.size()) >= n) return;
    for (std::size_t j = i; j < edges.size(); ++j) {
      const Edge& e = edges[j];
      auto& du = deg[static_cast<std::size_t>(e.u)];
      auto& dv = deg[static_cast<std::size_t>(e.v)];
      if (du == 2 || dv == 2) continue;
      ++du;
      ++dv;
      chosen.push_back(static_cast<int>(j));
      go(j + 1);
      chosen.pop_back();
      --du;
      --dv;
    }
  };
  go(0);
  return out;
}

// Cycle lengths as the sizes of vertex subsets whose induced subgraph is Hamiltonian
// (Held-Karp over each subset). Requires n <= 16.
inline std::set<int> hamiltonian_spectrum(const Graph& g) {
  const int n = g.order();
  std::set<int> out;
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    const int k = __builtin_popcount(s);
    if (k < 3 || out.contains(k)) continue;
    const int root = __builtin_ctz(s);
    // reach[mask][v]: a path from root through exactly mask ending at v.
    std::vector<std::uint32_t> members;
    for (int v = 0; v < n; ++v) {
      if (s >> v & 1u) members.push_back(static_cast<std::uint32_t>(v));
    }
    std::vector<std::vector<bool>> reach(1u << k, std::vector<bool>(static_cast<std::size_t>(k), false));
    reach[1][0] = true;
    for (std::uint32_t m = 1; m < (1u << k); ++m) {
      if (!(m & 1u)) continue;
      for (int a = 0; a < k; ++a) {
        if (!reach[m][static_cast<std::size_t>(a)]) continue;
        for (int b = 1; b < k; ++b) {
          if (m >> b & 1u) continue;
          if (g.has_edge(static_cast<Vertex>(members[static_cast<std::size_t>(a)]),
                         static_cast<Vertex>(members[static_cast<std::size_t>(b)]))) {
            reach[m | (1u << b)][static_cast<std::size_t>(b)] = true;
          }
        }
      }
    }
    const std::uint32_t full = (1u << k) - 1;
    for (int a = 1; a < k; ++a) {
      if (reach[full][static_cast<std::size_t>(a)] &&
          g.has_edge(static_cast<Vertex>(members[static_cast<std::size_t>(a)]), root)) {
        out.insert(k);
        break;
      }
    }
  }
  return out;
}

// Lengths of simple x-y paths by plain depth-first search.
inline std::set<int> xy_lengths(const Graph& g, Vertex x, Vertex y) {
  std::set<int> out;
  std::vector<bool> on(static_cast<std::size_t>(g.order()), false);
  std::function<void(Vertex, int)> go = [&](Vertex v, int len) {
    if (v == y) {
      out.insert(len);
      return;
    }
    on[static_cast<std::size_t>(v)] = true;
    for (Vertex w : g.neighbors(v)) {
      if (!on[static_cast<std::size_t>(w)]) go(w, len + 1);
    }
    on[static_cast<std::size_t>(v)] = false;
  };
  go(x, 0);
  return out;
}

// True when removing `cut` leaves no path from a vertex of a to a vertex of b.
inline bool separates(const Graph& g, const std::vector<Vertex>& a, const std::vector<Vertex>& b,
                      const std::vector<Vertex>& cut) {
  std::vector<bool> gone(static_cast<std::size_t>(g.order()), false);
  for (Vertex v : cut) gone[static_cast<std::size_t>(v)] = true;
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  std::vector<Vertex> stack;
  for (Vertex v : a) {
    if (!gone[static_cast<std::size_t>(v)]) {
      seen[static_cast<std::size_t>(v)] = true;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    if (std::find(b.begin(), b.end(), v) != b.end()) return false;
    for (Vertex w : g.neighbors(v)) {
      if (!gone[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        stack.push_back(w);
      }
    }
  }
  return true;
}

inline Graph from_edges(int n, std::initializer_list<std::pair<int, int>> es) {
  std::vector<Edge> v;
  for (auto [a, b] : es) v.emplace_back(a, b);
  return Graph(n, v);
}

inline int cut_size_brute(const Graph& g) {
  // Smallest vertex cut by trying every subset; n when g is complete.
  const int n = g.order();
  int best = n - 1;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    const int k = __builtin_popcount(s);
    if (k >= best || n - k < 2) continue;
    std::vector<Vertex> rest;
    for (int v = 0; v < n; ++v) {
      if (!(s >> v & 1u)) rest.push_back(v);
    }
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<Vertex> stack{rest.front()};
    seen[static_cast<std::size_t>(rest.front())] = true;
    std::size_t reached = 0;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      ++reached;
      for (Vertex w : g.neighbors(v)) {
        if (!(s >> w & 1u) && !seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          stack.push_back(w);
        }
      }
    }
    if (reached < rest.size()) best = k;
  }
  return best;
}

}  // namespace testoracle
