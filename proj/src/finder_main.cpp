// Top-level reduction: consecutive even cycle lengths under 2e >= 5(n - 1).

#include <algorithm>
#include <numeric>

#include "finder_internal.hpp"

namespace evencycles {

using detail::checked;
using detail::ensure;
using detail::hit;
using detail::idx;

namespace {

bool dense(int n, int e) { return 2L * e >= 5L * (n - 1); }

bool is_k1(const Graph& g) { return g.order() == 1; }

K5BlockWitness make_witness(const Graph& g) {
  K5BlockWitness w;
  w.decomposition = blocks(g);
  for (const Block& b : w.decomposition.blocks) {
    w.block_is_k5.push_back(b.vertices.size() == 5 && b.edges.size() == 10);
  }
  w.order_is_one_mod_four = g.order() % 4 == 1;
  if (auto defect = k5_witness_defect(g, w)) throw InternalInvariantError("theorem 1.3: " + *defect);
  return w;
}

CyclePairCertificate lift(const Subgraph& sub, const CyclePairCertificate& c) {
  return {sub.lift(c.shorter), sub.lift(c.longer)};
}

using Result = std::variant<CyclePairCertificate, K5BlockWitness>;

Result solve(const Graph& g, FinderTrace* trace);

CyclePairCertificate must_be_pair(const Result& r, const char* where) {
  if (const auto* c = std::get_if<CyclePairCertificate>(&r)) return *c;
  throw InternalInvariantError(std::string(where) + ": subgraph with surplus edges reduced to a K5 block tree");
}

// Path of length `len` between a and b in a K5 block tree, for len between the distance and
// four times the distance: each block crossed contributes one to four edges.
Path stretched_path(const Graph& h, const BlockDecomposition& dec, Vertex a, Vertex b, int len) {
  const std::vector<bool> all(idx(h.order()), true);
  auto shortest = detail::path_within(h, a, b, all);
  ensure(shortest.has_value(), "theorem 1.3: reinsertion terminals are disconnected");
  int extra = len - shortest->length();
  ensure(extra >= 0 && extra <= 3 * shortest->length(), "theorem 1.3: requested length out of range");
  std::vector<Vertex> out{a};
  const auto& vs = shortest->vertices;
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    std::optional<int> block;
    for (int k : dec.blocks_of[idx(vs[i])]) {
      const auto& bv = dec.blocks[idx(k)].vertices;
      if (std::binary_search(bv.begin(), bv.end(), vs[i + 1])) block = k;
    }
    ensure(block.has_value(), "theorem 1.3: consecutive path vertices share no block");
    for (Vertex w : dec.blocks[idx(*block)].vertices) {
      if (extra == 0) break;
      if (w == vs[i] || w == vs[i + 1]) continue;
      out.push_back(w);
      --extra;
    }
    out.push_back(vs[i + 1]);
  }
  Path p{out};
  ensure(!path_defect(h, p) && p.length() == len, "theorem 1.3: stretched path is invalid");
  return p;
}

// Low-degree edge uv: recurse on g - {u, v}; a K5 block tree there yields two cycles through u.
Result reinsert(const Graph& g, Vertex u, Vertex v, FinderTrace* trace) {
  const std::vector<Vertex> gone{u, v};
  const auto rest = remove_vertices(g, gone);
  const auto inner = solve(rest.graph, trace);
  if (const auto* c = std::get_if<CyclePairCertificate>(&inner)) {
    hit(trace, "theorem1.3:low-edge");
    return lift(rest, *c);
  }
  const auto& dec = std::get<K5BlockWitness>(inner).decomposition;
  std::vector<Vertex> nu;
  for (Vertex w : g.neighbors(u)) {
    if (w != v) nu.push_back(static_cast<Vertex>(
        std::lower_bound(rest.to_original.begin(), rest.to_original.end(), w) - rest.to_original.begin()));
  }
  ensure(nu.size() >= 2, "theorem 1.3: endpoint of the low-degree edge has fewer than two other neighbours");
  const Vertex a = nu[0];
  const Vertex b = nu[1];
  const std::vector<bool> all(idx(rest.graph.order()), true);
  const int dist = detail::path_within(rest.graph, a, b, all)->length();
  // Even cycle lengths through u are path lengths plus two.
  const int low = dist % 2 == 0 ? dist : dist + 1;
  ensure(low + 2 <= 4 * dist, "theorem 1.3: block path too short to stretch");
  auto close_through_u = [&](int len) {
    const Path p = rest.lift(stretched_path(rest.graph, dec, a, b, len));
    std::vector<Vertex> vs{u};
    vs.insert(vs.end(), p.vertices.begin(), p.vertices.end());
    return Cycle{vs};
  };
  hit(trace, "theorem1.3:reinsert");
  return checked(g, detail::make_pair(close_through_u(low), close_through_u(low + 2)), "theorem 1.3");
}

// Two paths of lengths differing by two from the 2-connected side, closed by an x-y path of
// the right parity through the other side.
CyclePairCertificate two_cut(const Graph& g, Vertex x, Vertex y, FinderTrace* trace) {
  const std::vector<Vertex> cut{x, y};
  const auto rest = remove_vertices(g, cut);
  const auto comps = components(rest.graph);
  ensure(comps.size() >= 2, "theorem 1.3: 2-cut does not separate");
  auto side = [&](const std::vector<Vertex>& comp) {
    std::vector<Vertex> vs{x, y};
    for (Vertex w : comp) vs.push_back(rest.original(w));
    std::sort(vs.begin(), vs.end());
    return induced_subgraph(g, vs);
  };
  auto local = [](const Subgraph& s, Vertex w) {
    return static_cast<Vertex>(std::lower_bound(s.to_original.begin(), s.to_original.end(), w) -
                               s.to_original.begin());
  };
  std::vector<Vertex> others;
  for (std::size_t i = 1; i < comps.size(); ++i) others.insert(others.end(), comps[i].begin(), comps[i].end());
  auto bipartite_without_xy = [&](const Subgraph& s) {
    const Vertex a = local(s, x), b = local(s, y);
    return is_bipartite(s.graph.has_edge(a, b) ? s.graph.without_edge(a, b) : s.graph).bipartite;
  };
  // The path-parity side prefers an odd cycle; the bipartite fallback needs exhaustive search.
  auto h1 = side(comps[0]);
  auto h2 = side(others);
  if (bipartite_without_xy(h2) && (!bipartite_without_xy(h1) || h1.graph.order() < h2.graph.order())) {
    std::swap(h1, h2);
  }
  const Vertex x1 = local(h1, x), y1 = local(h1, y);
  if (auto failure = two_paths_hypotheses(h1.graph, x1, y1)) {
    throw InternalInvariantError("theorem 1.3: 2-cut side violates " + failure->hypothesis);
  }
  const auto paths = two_paths_diff_two(h1.graph, x1, y1, trace);
  const Path p1 = h1.lift(paths.shorter);
  const Path p2 = h1.lift(paths.longer);

  const Vertex x2 = local(h2, x), y2 = local(h2, y);
  const Graph h2g = h2.graph.has_edge(x2, y2) ? h2.graph.without_edge(x2, y2) : h2.graph;
  const auto bip = is_bipartite(h2g);
  if (bip.bipartite) {
    auto near = bondy_vince_search(h2g, detail::kFallbackGuard);
    ensure(near.has_value() && near->difference() == 2, "theorem 1.3: bipartite side has no near pair");
    hit(trace, "theorem1.3:two-cut-bipartite");
    return checked(g, CyclePairCertificate{h2.lift(near->first), h2.lift(near->second)}, "theorem 1.3");
  }
  const Cycle& o = *bip.odd_cycle;
  Path qa, qb;
  if (o.contains(x2) && o.contains(y2)) {
    qa = o.arc(x2, y2);
    qb = o.reversed().arc(x2, y2);
  } else if (o.contains(x2) || o.contains(y2)) {
    const Vertex on = o.contains(x2) ? x2 : y2;
    const Vertex off = on == x2 ? y2 : x2;
    std::vector<bool> allowed(idx(h2g.order()), true);
    allowed[idx(on)] = false;
    std::vector<Vertex> targets;
    for (Vertex w : o.vertices) {
      if (w != on) targets.push_back(w);
    }
    auto link = shortest_path_to(h2g, off, targets, allowed);
    ensure(link.has_value(), "theorem 1.3: terminal cannot reach the odd cycle");
    const Path back = link->reversed();
    qa = concat(o.arc(on, back.front()), back);
    qb = concat(o.reversed().arc(on, back.front()), back);
    if (on == y2) {
      qa = qa.reversed();
      qb = qb.reversed();
    }
  } else {
    const std::vector<Vertex> terms{x2, y2};
    const auto dp = disjoint_paths(h2g, terms, o.vertices, 2);
    ensure(dp.paths.has_value(), "theorem 1.3: no two disjoint links to the odd cycle");
    const Path& px = (*dp.paths)[0].front() == x2 ? (*dp.paths)[0] : (*dp.paths)[1];
    const Path& py = (*dp.paths)[0].front() == x2 ? (*dp.paths)[1] : (*dp.paths)[0];
    qa = concat(concat(px, o.arc(px.back(), py.back())), py.reversed());
    qb = concat(concat(px, o.reversed().arc(px.back(), py.back())), py.reversed());
  }
  const Path q = h2.lift(qa.length() % 2 == p1.length() % 2 ? qa : qb);
  ensure(q.length() % 2 == p1.length() % 2, "theorem 1.3: odd cycle gives no path of the needed parity");
  hit(trace, "theorem1.3:two-cut-odd");
  return checked(g, detail::make_pair(join_paths(p1, q.reversed()), join_paths(p2, q.reversed())), "theorem 1.3");
}

Result solve(const Graph& g, FinderTrace* trace) {
  const int n = g.order();
  ensure(n >= 1 && dense(n, g.size()), "theorem 1.3: reduced graph lost the density bound");
  if (n <= 5) {
    if (auto bf = find_consecutive_even_pair_bf(g)) return *bf;
    hit(trace, "theorem1.3:small");
    return make_witness(g);
  }

  const auto comps = components(g);
  if (comps.size() > 1) {
    for (const auto& comp : comps) {
      const auto sub = induced_subgraph(g, comp);
      if (2L * sub.graph.size() > 5L * (sub.graph.order() - 1)) {
        hit(trace, "theorem1.3:component");
        return lift(sub, must_be_pair(solve(sub.graph, trace), "theorem 1.3"));
      }
    }
    throw InternalInvariantError("theorem 1.3: no component carries surplus edges");
  }

  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) <= 2) {
      const std::vector<Vertex> gone{v};
      const auto rest = remove_vertices(g, gone);
      hit(trace, "theorem1.3:low-vertex");
      return lift(rest, must_be_pair(solve(rest.graph, trace), "theorem 1.3"));
    }
  }

  for (const Edge& e : g.edges()) {
    if (g.degree(e.u) + g.degree(e.v) <= 6) {
      const Vertex u = g.degree(e.u) <= g.degree(e.v) ? e.u : e.v;
      return reinsert(g, u, u == e.u ? e.v : e.u, trace);
    }
  }

  if (auto cut = connectivity_cut(g, 2)) {
    const Vertex c = cut->front();
    const std::vector<Vertex> gone{c};
    const auto rest = remove_vertices(g, gone);
    const auto parts = components(rest.graph);
    std::vector<Vertex> first{c}, second{c};
    for (Vertex w : parts[0]) first.push_back(rest.original(w));
    for (std::size_t i = 1; i < parts.size(); ++i) {
      for (Vertex w : parts[i]) second.push_back(rest.original(w));
    }
    bool all_witnesses = true;
    for (auto* vs : {&first, &second}) {
      std::sort(vs->begin(), vs->end());
      const auto sub = induced_subgraph(g, *vs);
      if (!dense(sub.graph.order(), sub.graph.size())) {
        all_witnesses = false;
        continue;
      }
      const auto r = solve(sub.graph, trace);
      if (const auto* cp = std::get_if<CyclePairCertificate>(&r)) {
        hit(trace, "theorem1.3:cut-vertex");
        return lift(sub, *cp);
      }
    }
    ensure(all_witnesses, "theorem 1.3: cut-vertex side below the density bound");
    hit(trace, "theorem1.3:cut-vertex-witness");
    return make_witness(g);
  }

  if (auto cut = connectivity_cut(g, 3)) {
    return two_cut(g, (*cut)[0], (*cut)[1], trace);
  }
  hit(trace, "theorem1.3:three-connected");
  return three_connected_pair(g, trace);
}

}  // namespace

std::optional<std::string> k5_witness_defect(const Graph& g, const K5BlockWitness& w) {
  if (is_k1(g)) return std::nullopt;
  if (!is_connected(g)) return "graph is not connected";
  const auto dec = blocks(g);
  if (dec.blocks.size() != w.decomposition.blocks.size() || w.block_is_k5.size() != dec.blocks.size()) {
    return "block list does not match the graph";
  }
  for (std::size_t i = 0; i < dec.blocks.size(); ++i) {
    if (dec.blocks[i].vertices != w.decomposition.blocks[i].vertices) return "block list does not match the graph";
    const bool k5 = dec.blocks[i].vertices.size() == 5 && dec.blocks[i].edges.size() == 10;
    if (!k5) return "block " + std::to_string(i) + " is not K5";
    if (!w.block_is_k5[i]) return "block " + std::to_string(i) + " is not flagged as K5";
  }
  if (g.order() % 4 != 1 || !w.order_is_one_mod_four) return "order is not 1 (mod 4)";
  if (2 * g.size() != 5 * (g.order() - 1)) return "edge count is not 5(n - 1)/2";
  return std::nullopt;
}

Outcome main_theorem(const Graph& g, FinderTrace* trace) {
  const int n = g.order();
  if (n == 0) return HypothesisFailureReport{"nonempty", "the graph has no vertices"};
  if (!dense(n, g.size())) {
    return HypothesisFailureReport{"density-5(n-1)/2", "2e = " + std::to_string(2 * g.size()) +
                                                           " < 5(n - 1) = " + std::to_string(5 * (n - 1))};
  }
  auto r = solve(g, trace);
  if (auto* c = std::get_if<CyclePairCertificate>(&r)) return checked(g, *c, "theorem 1.3");
  return std::get<K5BlockWitness>(std::move(r));
}

Cycle cycle_two_mod_four(const Graph& g, FinderTrace* trace) {
  if (g.order() == 0 || 2L * g.size() < 5L * g.order()) {
    throw HypothesisFailure("density-5n/2", "2e = " + std::to_string(2 * g.size()) + " < 5n = " +
                                                std::to_string(5 * g.order()));
  }
  const auto outcome = main_theorem(g, trace);
  const auto* pair = std::get_if<CyclePairCertificate>(&outcome);
  ensure(pair != nullptr, "corollary: density 5n/2 admits no K5 block tree");
  return pair->shorter.length() % 4 == 2 ? pair->shorter : pair->longer;
}

}  // namespace evencycles
