// Two x-y paths whose lengths differ by two.

#include <algorithm>

#include "finder_internal.hpp"

namespace evencycles {

using detail::ensure;
using detail::hit;
using detail::idx;

namespace {

struct PathPair {
  Path shorter;
  Path longer;
};

Vertex local_id(const Subgraph& sub, Vertex original) {
  const auto it = std::lower_bound(sub.to_original.begin(), sub.to_original.end(), original);
  ensure(it != sub.to_original.end() && *it == original, "theorem 1.4: vertex missing from a subgraph");
  return static_cast<Vertex>(it - sub.to_original.begin());
}

PathPair solve(const Graph& g, Vertex x, Vertex y, FinderTrace* trace);

// Recursive call on a smaller instance; the proof guarantees its hypotheses.
PathPair recurse(const Graph& h, Vertex a, Vertex b, FinderTrace* trace) {
  if (auto failure = two_paths_hypotheses(h, a, b)) {
    throw InternalInvariantError("theorem 1.4: reduced instance violates " + failure->hypothesis + " (" +
                                 failure->detail + ")");
  }
  return solve(h.has_edge(a, b) ? h.without_edge(a, b) : h, a, b, trace);
}

PathPair prepend(Vertex v, const PathPair& p) {
  return {concat(Path{{v, p.shorter.front()}}, p.shorter), concat(Path{{v, p.longer.front()}}, p.longer)};
}

PathPair base_case(const Graph& g, Vertex x, Vertex y, FinderTrace* trace) {
  const auto lengths = xy_path_lengths(g, x, y);
  for (const auto& [len, p] : lengths) {
    if (lengths.contains(len + 2)) {
      hit(trace, "theorem1.4:base");
      return {p, lengths.at(len + 2)};
    }
  }
  throw InternalInvariantError("theorem 1.4: base instance without two path lengths differing by two");
}

// Case 1: a 4-cycle x x1 a x2 avoiding y.
std::optional<PathPair> four_cycle_case(const Graph& g, Vertex x, Vertex y, FinderTrace* trace) {
  const auto& nx = g.neighbors(x);
  for (std::size_t i = 0; i < nx.size(); ++i) {
    for (std::size_t j = i + 1; j < nx.size(); ++j) {
      const Vertex x1 = nx[i];
      const Vertex x2 = nx[j];
      if (x1 == y || x2 == y) continue;
      for (Vertex a : g.neighbors(x1)) {
        if (a == x || a == y || a == x2 || !g.has_edge(a, x2)) continue;
        const std::vector<Vertex> c{x, x1, a, x2};
        const auto rest = remove_vertices(g, c);
        std::vector<Vertex> f;
        for (const auto& comp : components(rest.graph)) {
          std::vector<Vertex> orig;
          for (Vertex v : comp) orig.push_back(rest.original(v));
          if (std::binary_search(orig.begin(), orig.end(), y)) f = std::move(orig);
        }
        const auto in_f = detail::mask(g.order(), f);
        for (auto [near, far] : {std::pair{x1, x2}, std::pair{x2, x1}}) {
          if (std::none_of(g.neighbors(near).begin(), g.neighbors(near).end(),
                           [&](Vertex w) { return in_f[idx(w)]; })) {
            continue;
          }
          auto p = detail::path_within(g, near, y, in_f);
          ensure(p.has_value(), "theorem 1.4: component of y not reachable from its neighbour");
          hit(trace, "theorem1.4:case1-direct");
          return PathPair{concat(Path{{x, near}}, *p), concat(Path{{x, far, a, near}}, *p)};
        }
        const auto keep = remove_vertices(g, f);
        auto inner = recurse(keep.graph, local_id(keep, x), local_id(keep, a), trace);
        auto tail = detail::path_within(g, a, y, in_f);
        ensure(tail.has_value(), "theorem 1.4: component of y not adjacent to the far corner");
        hit(trace, "theorem1.4:case1-recurse");
        return PathPair{concat(keep.lift(inner.shorter), *tail), concat(keep.lift(inner.longer), *tail)};
      }
    }
  }
  return std::nullopt;
}

// Case 2: contract N(x) into one vertex.
PathPair contraction_case(const Graph& g, Vertex x, Vertex y, FinderTrace* trace) {
  const std::vector<Vertex> xs_orig = g.neighbors(x);
  const std::vector<Vertex> only_x{x};
  const auto gx = remove_vertices(g, only_x);
  std::vector<Vertex> xs;
  for (Vertex v : xs_orig) xs.push_back(local_id(gx, v));
  const auto con = contract(gx.graph, xs);
  const Graph& star = con.graph;
  const Vertex xstar = con.record.contracted;
  const Vertex ystar = con.record.to_contracted[idx(local_id(gx, y))];

  // Maps a contracted-graph path starting at x* back to g.
  auto lift_from_star = [&](const Path& p) { return gx.lift(lift_path(con.record, p).path); };

  const Graph closed = star.has_edge(xstar, ystar) ? star : star.with_edge(xstar, ystar);
  if (is_two_connected(closed)) {
    const auto inner = recurse(closed, xstar, ystar, trace);
    hit(trace, "theorem1.4:case2-whole");
    return prepend(x, {lift_from_star(inner.shorter), lift_from_star(inner.longer)});
  }
  const auto dec = blocks(star);
  const int b_index = dec.blocks_of[idx(ystar)].front();
  const Block& b = dec.blocks[idx(b_index)];
  if (b.vertices.size() >= 3) {
    const auto sub = induced_subgraph(star, b.vertices);
    const auto inner = recurse(sub.graph, local_id(sub, xstar), local_id(sub, ystar), trace);
    hit(trace, "theorem1.4:case2-block");
    return prepend(x, {lift_from_star(sub.lift(inner.shorter)), lift_from_star(sub.lift(inner.longer))});
  }

  ensure(g.neighbors(y) == xs_orig, "theorem 1.4: y is not adjacent to exactly the neighbours of x");
  std::optional<int> other;
  for (int k : dec.blocks_of[idx(xstar)]) {
    if (k != b_index) {
      other = k;
      break;
    }
  }
  ensure(other.has_value(), "theorem 1.4: contracted graph has a single block");
  std::vector<Vertex> d;
  for (Vertex v : dec.blocks[idx(*other)].vertices) {
    if (v != xstar) d.push_back(gx.original(con.record.to_original[idx(v)]));
  }
  std::optional<Vertex> u1;
  for (Vertex v : xs_orig) {
    if (std::any_of(d.begin(), d.end(), [&](Vertex w) { return g.has_edge(v, w); })) {
      u1 = v;
      break;
    }
  }
  ensure(u1.has_value(), "theorem 1.4: block beside x* has no neighbour in N(x)");
  std::vector<Vertex> keep = xs_orig;
  keep.insert(keep.end(), d.begin(), d.end());
  std::sort(keep.begin(), keep.end());
  const auto sub = induced_subgraph(g, keep);
  std::vector<Vertex> rest_x;
  for (Vertex v : xs_orig) {
    if (v != *u1) rest_x.push_back(local_id(sub, v));
  }
  const auto g1 = contract(sub.graph, rest_x);
  const Vertex u1_local = g1.record.to_contracted[idx(local_id(sub, *u1))];
  const auto inner = recurse(g1.graph, u1_local, g1.record.contracted, trace);
  auto lift_back = [&](const Path& p) {
    const Path from_x = sub.lift(lift_path(g1.record, p.reversed()).path);
    return concat(concat(Path{{x, from_x.front()}}, from_x), Path{{*u1, y}});
  };
  hit(trace, "theorem1.4:case2-endgame");
  return {lift_back(inner.shorter), lift_back(inner.longer)};
}

PathPair solve(const Graph& g, Vertex x, Vertex y, FinderTrace* trace) {
  if (g.degree(y) < g.degree(x)) {
    const auto swapped = solve(g, y, x, trace);
    return {swapped.shorter.reversed(), swapped.longer.reversed()};
  }
  if (g.order() <= 5) return base_case(g, x, y, trace);
  if (auto found = four_cycle_case(g, x, y, trace)) return *found;
  return contraction_case(g, x, y, trace);
}

}  // namespace

std::optional<HypothesisFailureReport> two_paths_hypotheses(const Graph& g, Vertex x, Vertex y) {
  if (!g.contains(x) || !g.contains(y) || x == y) {
    return HypothesisFailureReport{"terminals", "x and y must be distinct vertices of the graph"};
  }
  const Graph closed = g.has_edge(x, y) ? g : g.with_edge(x, y);
  if (!is_two_connected(closed)) {
    return HypothesisFailureReport{"two-connected-with-xy", "G + xy is not 2-connected"};
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (v != x && v != y && g.degree(v) < 3) {
      return HypothesisFailureReport{"min-degree-3", "vertex " + std::to_string(v) + " has degree " +
                                                         std::to_string(g.degree(v))};
    }
  }
  for (const Edge& e : g.edges()) {
    if (e.u == x || e.u == y || e.v == x || e.v == y) continue;
    if (g.degree(e.u) + g.degree(e.v) < 7) {
      return HypothesisFailureReport{"edge-degree-sum-7", "edge " + std::to_string(e.u) + "-" +
                                                              std::to_string(e.v) + " has degree sum " +
                                                              std::to_string(g.degree(e.u) + g.degree(e.v))};
    }
  }
  return std::nullopt;
}

PathPairCertificate two_paths_diff_two(const Graph& g, Vertex x, Vertex y, FinderTrace* trace) {
  if (auto failure = two_paths_hypotheses(g, x, y)) throw HypothesisFailure(failure->hypothesis, failure->detail);
  const auto pair = solve(g.has_edge(x, y) ? g.without_edge(x, y) : g, x, y, trace);
  PathPairCertificate cert{x, y, pair.shorter, pair.longer};
  if (auto v = validate(cert, g); !v) throw InternalInvariantError("theorem 1.4: " + v.diagnosis);
  return cert;
}

}  // namespace evencycles
