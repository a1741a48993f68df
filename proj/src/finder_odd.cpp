// Two disjoint odd cycles, and the full 3-connected case analysis.

#include <algorithm>
#include <set>

#include "finder_internal.hpp"

namespace evencycles {

using detail::ensure;
using detail::hit;
using detail::idx;

namespace {

// All cycles of the given length, canonical and sorted.
std::vector<Cycle> cycles_of_length(const Graph& g, int len) {
  std::set<std::vector<Vertex>> found;
  std::vector<Vertex> stack;
  std::vector<bool> used(idx(g.order()), false);
  auto extend = [&](auto&& self, Vertex root, Vertex v) -> void {
    if (static_cast<int>(stack.size()) == len) {
      if (g.has_edge(v, root) && stack[1] < stack.back()) found.insert(stack);
      return;
    }
    for (Vertex w : g.neighbors(v)) {
      if (w <= root || used[idx(w)]) continue;
      used[idx(w)] = true;
      stack.push_back(w);
      self(self, root, w);
      stack.pop_back();
      used[idx(w)] = false;
    }
  };
  for (Vertex r = 0; r < g.order(); ++r) {
    stack = {r};
    used[idx(r)] = true;
    extend(extend, r, r);
    used[idx(r)] = false;
  }
  std::vector<Cycle> out;
  for (const auto& vs : found) out.push_back(Cycle{vs});
  return out;
}

Cycle lift_even(const Subgraph& sub, const Graph& h, const char* what) {
  auto even = find_even_cycle(h);
  ensure(even.has_value(), what);
  return sub.lift(*even).canonical();
}

// Theta on an odd cycle and one outside vertex w with two neighbours a, b on it.
ThetaGraph ear_theta(const Cycle& c, Vertex a, Vertex w, Vertex b) {
  ThetaGraph t;
  t.ends = {a, b};
  t.paths[0] = c.arc(a, b);
  t.paths[1] = c.reversed().arc(a, b);
  t.paths[2] = Path{{a, w, b}};
  return t;
}

std::vector<Vertex> neighbors_in(const Graph& g, Vertex v, const Cycle& c) {
  std::vector<Vertex> out;
  for (Vertex w : g.neighbors(v)) {
    if (c.contains(w)) out.push_back(w);
  }
  return out;
}

// The odd and the even path of cycle c between a and b.
std::pair<Path, Path> odd_even_arcs(const Cycle& c, Vertex a, Vertex b) {
  Path one = c.arc(a, b);
  Path two = c.reversed().arc(a, b);
  if (one.length() % 2 == 0) std::swap(one, two);
  return {one, two};
}

struct CubicLadder {
  const Graph& g;
  std::vector<Vertex> mate;  // the unique neighbour across
  FinderTrace* trace;

  Vertex m(Vertex v) const { return mate[idx(v)]; }

  // Four-cycle p q q' p' for an edge pq with q'p' an edge.
  Cycle square(Vertex p, Vertex q) const { return Cycle{{p, q, m(q), m(p)}}.canonical(); }

  // Cycle through edge pq and the odd path of the other cycle between p' and q'.
  Cycle through_odd(const Cycle& y, Vertex p, Vertex q) const {
    const Path o = odd_even_arcs(y, m(p), m(q)).first;
    std::vector<Vertex> vs = o.vertices;
    vs.push_back(q);
    vs.push_back(p);
    return Cycle{vs}.canonical();
  }

  // The ladder for edges of x: C4 + C6 or a smaller odd cycle with a disjoint theta.
  std::optional<CyclePairCertificate> run(const Cycle& x, const Cycle& y) const {
    const int n = x.length();
    std::vector<int> odd_len;
    for (int i = 0; i < n; ++i) {
      const Vertex p = x.vertices[idx(i)];
      const Vertex q = x.vertices[idx((i + 1) % n)];
      odd_len.push_back(odd_even_arcs(y, m(p), m(q)).first.length());
    }
    auto edge = [&](int i) { return std::pair{x.vertices[idx(i)], x.vertices[idx((i + 1) % n)]}; };
    if (std::all_of(odd_len.begin(), odd_len.end(), [](int l) { return l == 1; })) {
      const auto [p, q] = edge(0);
      const Vertex r = x.vertices[idx(2 % n)];
      hit(trace, "lemma3.5:ladder-all-one");
      return detail::make_pair(square(p, q), Cycle{{p, q, r, m(r), m(q), m(p)}}.canonical());
    }
    for (int i = 0; i < n; ++i) {
      if (odd_len[idx(i)] < 5) continue;
      const auto [p, q] = edge(i);
      const auto [o, e] = odd_even_arcs(y, m(p), m(q));
      std::vector<Vertex> star = e.vertices;
      star.push_back(q);
      star.push_back(p);
      const Cycle d_star = Cycle{star}.canonical();
      std::vector<Vertex> rest;
      for (Vertex v : o.vertices) {
        if (v != m(p) && v != m(q)) rest.push_back(v);
      }
      for (Vertex v : x.vertices) {
        if (v != p && v != q) rest.push_back(v);
      }
      std::sort(rest.begin(), rest.end());
      const auto sub = induced_subgraph(g, rest);
      const Cycle even = lift_even(sub, sub.graph, "lemma 3.5: long odd arc without a theta beside it");
      hit(trace, "lemma3.5:ladder-long-arc");
      return detail::disjoint_odd_even_impl(g, d_star, even, trace);
    }
    const auto three = std::find(odd_len.begin(), odd_len.end(), 3);
    const auto one = std::find(odd_len.begin(), odd_len.end(), 1);
    if (three != odd_len.end() && one != odd_len.end()) {
      const auto [p3, q3] = edge(static_cast<int>(three - odd_len.begin()));
      const auto [p1, q1] = edge(static_cast<int>(one - odd_len.begin()));
      hit(trace, "lemma3.5:ladder-mixed");
      return detail::make_pair(square(p1, q1), through_odd(y, p3, q3));
    }
    return std::nullopt;
  }

  // Every edge on both sides has odd arc length 3: the C6 + C8 construction.
  std::optional<CyclePairCertificate> eight(const Cycle& x, const Cycle& y) const {
    const int n = x.length();
    for (int i = 0; i < n; ++i) {
      for (int flip = 0; flip < 2; ++flip) {
        Vertex u = x.vertices[idx(i)];
        Vertex v = x.vertices[idx((i + 1) % n)];
        if (flip == 1) std::swap(u, v);
        const Path dov = odd_even_arcs(y, m(u), m(v)).first;
        if (dov.length() != 3) continue;
        const Vertex a = dov.vertices[1];
        const Vertex b = dov.vertices[2];
        const Cycle six = Cycle{{u, m(u), a, b, m(v), v}}.canonical();
        const Path left = odd_even_arcs(x, u, m(a)).first;
        if (!left.contains(v)) {
          std::vector<Vertex> vs = left.vertices;
          vs.insert(vs.end(), {a, b, m(v), v});
          hit(trace, "lemma3.5:eight");
          return detail::make_pair(six, Cycle{vs}.canonical());
        }
        const Path right = odd_even_arcs(x, v, m(b)).first;
        if (!right.contains(u)) {
          std::vector<Vertex> vs = right.vertices;
          vs.insert(vs.end(), {b, a, m(u), u});
          hit(trace, "lemma3.5:eight");
          return detail::make_pair(six, Cycle{vs}.canonical());
        }
      }
    }
    return std::nullopt;
  }
};

CyclePairCertificate cubic_endgame(const Graph& g, const Cycle& b, const Cycle& d, FinderTrace* trace) {
  CubicLadder ladder{g, std::vector<Vertex>(idx(g.order()), -1), trace};
  for (const Cycle* side : {&b, &d}) {
    const Cycle& other = side == &b ? d : b;
    for (Vertex v : side->vertices) {
      const auto across = neighbors_in(g, v, other);
      ensure(across.size() == 1, "lemma 3.5: expected a perfect matching between the two odd cycles");
      ladder.mate[idx(v)] = across.front();
    }
  }
  if (auto c = ladder.run(b, d)) return *c;
  if (auto c = ladder.run(d, b)) return *c;
  if (auto c = ladder.eight(b, d)) return *c;
  if (auto c = ladder.eight(d, b)) return *c;
  throw InternalInvariantError("lemma 3.5: cubic configuration admits no construction");
}

// Cyclic order of a block that is a cycle.
Cycle block_cycle(const Block& blk) {
  std::vector<Vertex> order{blk.vertices.front()};
  Vertex prev = -1;
  while (static_cast<int>(order.size()) < static_cast<int>(blk.vertices.size())) {
    const Vertex cur = order.back();
    for (const Edge& e : blk.edges) {
      const Vertex other = e.u == cur ? e.v : (e.v == cur ? e.u : -1);
      if (other >= 0 && other != prev && std::find(order.begin(), order.end(), other) == order.end()) {
        prev = cur;
        order.push_back(other);
        break;
      }
    }
    ensure(order.back() != cur, "lemma 3.5: end-block is not a cycle");
  }
  return Cycle{order};
}

CyclePairCertificate two_disjoint_odd_impl(const Graph& g, FinderTrace* trace) {
  std::optional<Cycle> b;
  std::optional<Cycle> d;
  for (int len = 3; len <= g.order() && !b; len += 2) {
    for (const Cycle& cand : cycles_of_length(g, len)) {
      const auto rest = remove_vertices(g, cand.vertices);
      if (auto odd = shortest_odd_cycle(rest.graph)) {
        b = cand;
        d = rest.lift(*odd).canonical();
        break;
      }
    }
  }
  if (!b) throw HypothesisFailure("two-disjoint-odd-cycles", "no two vertex-disjoint odd cycles");

  const auto rest = remove_vertices(g, b->vertices);
  if (auto even = find_even_cycle(rest.graph)) {
    hit(trace, "lemma3.5:even-in-remainder");
    return detail::disjoint_odd_even_impl(g, *b, rest.lift(*even).canonical(), trace);
  }

  if (rest.graph.order() > d->length()) {
    const auto dec = blocks(rest.graph);
    std::vector<Vertex> d_local;
    for (Vertex v : d->vertices) {
      d_local.push_back(static_cast<Vertex>(
          std::lower_bound(rest.to_original.begin(), rest.to_original.end(), v) - rest.to_original.begin()));
    }
    std::sort(d_local.begin(), d_local.end());
    for (std::size_t k = 0; k < dec.blocks.size(); ++k) {
      const Block& blk = dec.blocks[k];
      if (!dec.is_end_block(static_cast<int>(k))) continue;
      if (blk.vertices == d_local) continue;
      std::optional<ThetaGraph> theta;
      if (blk.vertices.size() <= 2) {
        Vertex v = -1;
        for (Vertex w : blk.vertices) {
          if (!dec.is_cut_vertex(w)) {
            v = rest.original(w);
            break;
          }
        }
        ensure(v >= 0, "lemma 3.5: end-block without a non-cut vertex");
        const auto nb = neighbors_in(g, v, *b);
        ensure(nb.size() >= 2, "lemma 3.5: end-block vertex with fewer than two neighbours on the cycle");
        theta = ThetaGraph{{nb[0], nb[1]}, {b->arc(nb[0], nb[1]), b->reversed().arc(nb[0], nb[1]),
                                             Path{{nb[0], v, nb[1]}}}};
        hit(trace, blk.vertices.size() == 1 ? "lemma3.5:end-block-k1" : "lemma3.5:end-block-k2");
      } else {
        const Cycle local = block_cycle(blk);
        Cycle ring;
        for (Vertex w : local.vertices) ring.vertices.push_back(rest.original(w));
        std::optional<Vertex> cut;
        for (Vertex w : blk.vertices) {
          if (dec.is_cut_vertex(w)) cut = rest.original(w);
        }
        struct Link {
          Vertex on_b, on_ring;
        };
        std::vector<Link> ls;
        for (Vertex r : ring.vertices) {
          if (cut && r == *cut) continue;
          for (Vertex w : neighbors_in(g, r, *b)) ls.push_back({w, r});
        }
        std::sort(ls.begin(), ls.end(), [](const Link& x, const Link& y) {
          return std::pair{x.on_ring, x.on_b} < std::pair{y.on_ring, y.on_b};
        });
        for (std::size_t i = 0; i < ls.size() && !theta; ++i) {
          for (std::size_t j = i + 1; j < ls.size() && !theta; ++j) {
            if (ls[i].on_b == ls[j].on_b || ls[i].on_ring == ls[j].on_ring) continue;
            Path p = ring.arc(ls[i].on_ring, ls[j].on_ring);
            if (cut && p.contains(*cut)) p = ring.reversed().arc(ls[i].on_ring, ls[j].on_ring);
            std::vector<Vertex> mid{ls[i].on_b};
            mid.insert(mid.end(), p.vertices.begin(), p.vertices.end());
            mid.push_back(ls[j].on_b);
            theta = ThetaGraph{{ls[i].on_b, ls[j].on_b},
                               {b->arc(ls[i].on_b, ls[j].on_b), b->reversed().arc(ls[i].on_b, ls[j].on_b),
                                Path{mid}}};
          }
        }
        ensure(theta.has_value(), "lemma 3.5: odd end-block without two independent edges to the cycle");
        hit(trace, "lemma3.5:end-block-odd");
      }
      ensure(!theta_defect(g, *theta), "lemma 3.5: invalid theta at an end-block");
      return detail::disjoint_odd_even_impl(g, *d, detail::theta_cycle(*theta), trace);
    }
    throw InternalInvariantError("lemma 3.5: remainder larger than the odd cycle but no other end-block");
  }

  for (const auto& [x, y] : {std::pair{&*b, &*d}, std::pair{&*d, &*b}}) {
    for (Vertex u : x->vertices) {
      const auto nb = neighbors_in(g, u, *y);
      if (nb.size() < 2) continue;
      const Cycle even = detail::theta_cycle(ear_theta(*y, nb[0], u, nb[1]));
      hit(trace, "lemma3.5:shared-vertex");
      return pair_from_shared_vertex(g, even, *x, u, trace);
    }
  }
  hit(trace, "lemma3.5:cubic");
  return cubic_endgame(g, *b, *d, trace);
}

// Cycle through the ordered vertices, canonicalized.
Cycle ring(std::initializer_list<Vertex> vs) { return Cycle{std::vector<Vertex>(vs)}.canonical(); }

CyclePairCertificate triangle_case(const Graph& g, const Cycle& d, const std::vector<Vertex>& f,
                                   const std::vector<std::vector<Vertex>>& comps, const detail::SpanningTree& tree,
                                   FinderTrace* trace) {
  auto leaves = [&]() {
    std::vector<Vertex> out;
    const auto in_f = detail::mask(g.order(), f);
    for (Vertex v : f) {
      int deg = 0;
      for (Vertex w : g.neighbors(v)) deg += in_f[idx(w)] ? 1 : 0;
      if (deg == 1) out.push_back(v);
    }
    return out;
  }();
  const Vertex u = f.size() == 1 ? f.front() : leaves.front();
  const auto nu = neighbors_in(g, u, d);
  ensure(nu.size() >= 2, "theorem 1.5: leaf with fewer than two neighbours on the triangle");
  auto third = [&](Vertex a, Vertex b) {
    for (Vertex v : d.vertices) {
      if (v != a && v != b) return v;
    }
    return Vertex{-1};
  };
  const Cycle square = ring({u, nu[0], third(nu[0], nu[1]), nu[1]});

  // Two independent edges from a pair of leaves into the triangle.
  auto independent = [&](Vertex l1, Vertex l2) {
    for (Vertex a : neighbors_in(g, l1, d)) {
      for (Vertex b : neighbors_in(g, l2, d)) {
        if (a != b) return std::pair{a, b};
      }
    }
    throw InternalInvariantError("theorem 1.5: no independent edges from two leaves to the triangle");
  };

  std::optional<Cycle> six;
  if (f.size() == 1) {
    std::vector<Vertex> singles;
    for (const auto& comp : comps) singles.push_back(comp.front());
    ensure(singles.size() >= 3, "theorem 1.5: fewer than three isolated vertices beside the triangle");
    for (int i = 0; i < 3; ++i) {
      for (Vertex v : d.vertices) ensure(g.has_edge(singles[idx(i)], v), "theorem 1.5: isolated vertex misses the triangle");
    }
    six = ring({singles[0], d.vertices[0], singles[1], d.vertices[1], singles[2], d.vertices[2]});
    hit(trace, "theorem1.5:triangle-k1");
  } else if (f.size() == 2) {
    Vertex extra = -1;
    for (const auto& comp : comps) {
      if (comp != f) {
        extra = comp.front();
        break;
      }
    }
    ensure(extra >= 0, "theorem 1.5: no second component beside an edge");
    std::vector<Vertex> keep{f[0], f[1], extra};
    keep.insert(keep.end(), d.vertices.begin(), d.vertices.end());
    std::sort(keep.begin(), keep.end());
    const auto sub = induced_subgraph(g, keep);
    const auto spectrum = cycle_spectrum(sub.graph);
    ensure(spectrum.has(6), "theorem 1.5: no 6-cycle on the six vertices");
    six = sub.lift(spectrum.representatives.at(6)).canonical();
    hit(trace, "theorem1.5:triangle-k2");
  } else if (f.size() <= 4) {
    const Vertex l1 = leaves[0];
    const Vertex l2 = leaves[1];
    const auto [a, b] = independent(l1, l2);
    const Path p = tree.path(l1, l2);
    std::vector<Vertex> vs = p.vertices;
    vs.push_back(b);
    if (p.length() == 2) vs.push_back(third(a, b));
    vs.push_back(a);
    ensure(static_cast<int>(vs.size()) == 6, "theorem 1.5: leaf path of unexpected length");
    six = Cycle{vs}.canonical();
    hit(trace, f.size() == 3 ? "theorem1.5:triangle-p3" : "theorem1.5:triangle-four");
  } else {
    throw InternalInvariantError("theorem 1.5: tree of order at least 5 beside a triangle");
  }
  return detail::make_pair(square, *six);
}

CyclePairCertificate long_odd_case(const Graph& g, const Cycle& d, const std::vector<Vertex>& f,
                                   const detail::SpanningTree& tree, FinderTrace* trace) {
  ensure(f.size() >= 2, "theorem 1.5: single vertex beside a shortest odd cycle of length at least 5");
  const auto in_f = detail::mask(g.order(), f);
  std::vector<Vertex> leaves;
  for (Vertex v : f) {
    int deg = 0;
    for (Vertex w : g.neighbors(v)) deg += in_f[idx(w)] ? 1 : 0;
    if (deg == 1) leaves.push_back(v);
  }
  const Vertex u = leaves.front();
  const auto nu = neighbors_in(g, u, d);
  ensure(nu.size() == 2, "theorem 1.5: leaf does not have exactly two neighbours on the odd cycle");
  Cycle ring_d = d;
  if (ring_d.arc(nu[0], nu[1]).length() != 2 && ring_d.arc(nu[1], nu[0]).length() != 2) {
    throw InternalInvariantError("theorem 1.5: leaf neighbours are not at distance two");
  }
  Vertex v1 = nu[0];
  Vertex v3 = nu[1];
  if (ring_d.arc(v1, v3).length() != 2) std::swap(v1, v3);
  const Path first = ring_d.arc(v1, v3);
  const Vertex v2 = first.vertices[1];
  const Cycle square = ring({v1, v2, v3, u});
  const Cycle back = ring_d.reversed();

  for (Vertex vi : ring_d.arc(v3, v1).vertices) {
    if (vi == v1 || vi == v3) continue;
    for (Vertex u1 : g.neighbors(vi)) {
      if (!in_f[idx(u1)]) continue;
      const Path home = tree.path(u1, u);
      auto close = [&](Vertex start, const Path& along) {
        Path a = concat(Path{{u, start}}, along);
        a = concat(a, Path{{vi, u1}});
        return join_paths(a, home).canonical();
      };
      const Cycle c1 = close(v3, ring_d.arc(v3, vi));
      const Cycle c1p = close(v1, ring_d.arc(v1, vi));
      const Cycle c2 = close(v1, back.arc(v1, vi));
      const Cycle c2p = close(v3, back.arc(v3, vi));
      hit(trace, "theorem1.5:long-cross-edge");
      if (c1.length() % 2 == 0) return detail::make_pair(c1, c1p);
      ensure(c2.length() % 2 == 0, "theorem 1.5: both cross-edge cycles are odd");
      return detail::make_pair(c2, c2p);
    }
  }

  ensure(leaves.size() >= 2, "theorem 1.5: tree with a single leaf");
  const Vertex w = leaves[1];
  const auto nw = neighbors_in(g, w, d);
  ensure(nw.size() == 2 && std::find(nw.begin(), nw.end(), v1) != nw.end() &&
             std::find(nw.begin(), nw.end(), v3) != nw.end(),
         "theorem 1.5: second leaf attaches elsewhere");
  if (f.size() == 2) {
    ensure(d.length() == 5, "theorem 1.5: edge beside the odd cycle forces length 5");
    std::vector<Vertex> vs{u};
    const Path around = back.arc(v1, v3);
    vs.insert(vs.end(), around.vertices.begin(), around.vertices.end());
    vs.push_back(w);
    hit(trace, "theorem1.5:long-k2");
    return detail::make_pair(square, Cycle{vs}.canonical());
  }
  if (f.size() == 3) {
    const Path p = tree.path(w, u);
    hit(trace, "theorem1.5:long-p3");
    return detail::make_pair(square, ring({u, v1, v2, v3, w, p.vertices[1]}));
  }
  throw InternalInvariantError("theorem 1.5: path of order at least 4 beside the odd cycle");
}

CyclePairCertificate three_connected_impl(const Graph& g, FinderTrace* trace) {
  if (is_bipartite(g).bipartite) {
    const auto near = bondy_vince_search(g, detail::kFallbackGuard);
    ensure(near.has_value() && near->difference() == 2, "theorem 1.5: bipartite graph without a near pair");
    hit(trace, "theorem1.5:bipartite");
    return detail::make_pair(near->first, near->second);
  }
  const Cycle d = *shortest_odd_cycle(g);
  const auto rest = remove_vertices(g, d.vertices);
  if (auto even = find_even_cycle(rest.graph)) {
    hit(trace, "theorem1.5:disjoint-even");
    return detail::disjoint_odd_even_impl(g, d, rest.lift(*even).canonical(), trace);
  }
  if (!is_bipartite(rest.graph).bipartite) {
    hit(trace, "theorem1.5:disjoint-odd");
    return two_disjoint_odd_impl(g, trace);
  }

  std::vector<std::vector<Vertex>> comps;
  for (const auto& comp : components(rest.graph)) {
    std::vector<Vertex> orig;
    for (Vertex v : comp) orig.push_back(rest.original(v));
    comps.push_back(std::move(orig));
  }
  const auto& f = *std::max_element(comps.begin(), comps.end(), [](const auto& a, const auto& b) {
    return a.size() < b.size();
  });
  const auto tree = detail::bfs_tree(g, f);
  const auto in_f = detail::mask(g.order(), f);

  std::vector<Vertex> d_sorted = detail::cycle_vertices_sorted(d);
  for (Vertex v : d_sorted) {
    std::vector<Vertex> nf;
    for (Vertex w : g.neighbors(v)) {
      if (in_f[idx(w)]) nf.push_back(w);
    }
    if (nf.size() < 3) continue;
    // Median of three tree vertices: the unique vertex on all three pairwise paths.
    const Path ab = tree.path(nf[0], nf[1]);
    const Path ac = tree.path(nf[0], nf[2]);
    const Path bc = tree.path(nf[1], nf[2]);
    Vertex med = -1;
    for (Vertex x : ab.vertices) {
      if (ac.contains(x) && bc.contains(x)) med = x;
    }
    ensure(med >= 0, "theorem 1.5: three tree vertices without a median");
    ThetaGraph t;
    t.ends = {v, med};
    for (std::size_t i = 0; i < 3; ++i) t.paths[i] = concat(Path{{v, nf[i]}}, tree.path(nf[i], med));
    ensure(!theta_defect(g, t), "theorem 1.5: invalid theta through a tree");
    hit(trace, "theorem1.5:tree-theta");
    return pair_from_shared_vertex(g, detail::theta_cycle(t), d, v, trace);
  }

  if (d.length() == 3) return triangle_case(g, d, f, comps, tree, trace);
  return long_odd_case(g, d, f, tree, trace);
}

}  // namespace

CyclePairCertificate pair_from_two_disjoint_odd(const Graph& g, FinderTrace* trace) {
  detail::require_three_connected(g, "lemma 3.5");
  return detail::checked(g, two_disjoint_odd_impl(g, trace), "lemma 3.5");
}

CyclePairCertificate three_connected_pair(const Graph& g, FinderTrace* trace) {
  if (g.order() < 6) throw HypothesisFailure("order-at-least-6", "graph has " + std::to_string(g.order()) + " vertices");
  detail::require_three_connected(g, "theorem 1.5");
  return detail::checked(g, three_connected_impl(g, trace), "theorem 1.5");
}

}  // namespace evencycles
