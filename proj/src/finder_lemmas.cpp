// Even-cycle stabilization, quasi-diagonal combination and the lemmas that build on them.

#include <algorithm>
#include <numeric>
#include <set>

#include "finder_internal.hpp"

namespace evencycles {

using detail::ensure;
using detail::hit;
using detail::idx;
using detail::bfs_tree;
using detail::cycle_less;
using detail::outside_neighbors;
using detail::require_cycle;
using detail::require_input;
using detail::require_three_connected;
using detail::as_cycle;
using detail::stabilize_impl;
using detail::disjoint_odd_even_impl;

namespace {

struct StabilizeState {
  std::vector<Vertex> f;  // component of g - V(C) containing the avoided subgraph
  bool connected = false;
  std::vector<std::vector<Vertex>> others;
};

StabilizeState analyse(const Graph& g, const Cycle& c, Vertex anchor) {
  const auto rest = remove_vertices(g, c.vertices);
  StabilizeState st;
  for (const auto& comp : components(rest.graph)) {
    std::vector<Vertex> orig;
    for (Vertex v : comp) orig.push_back(rest.original(v));
    if (std::find(orig.begin(), orig.end(), anchor) != orig.end()) {
      st.f = std::move(orig);
    } else {
      st.others.push_back(std::move(orig));
    }
  }
  st.connected = st.others.empty();
  return st;
}

// One exchange step when g - V(C) is disconnected.
Cycle separated_step(const Graph& g, const Cycle& c, const StabilizeState& st, FinderTrace* trace) {
  const auto& h = st.others.front();
  std::vector<Vertex> keep = h;
  keep.insert(keep.end(), c.vertices.begin(), c.vertices.end());
  std::sort(keep.begin(), keep.end());
  const auto sub = induced_subgraph(g, keep);
  auto to_sub = [&](Vertex v) {
    return static_cast<Vertex>(std::lower_bound(sub.to_original.begin(), sub.to_original.end(), v) -
                               sub.to_original.begin());
  };
  std::vector<Vertex> targets;
  for (Vertex v : c.vertices) targets.push_back(to_sub(v));
  const Vertex u = h.front();
  auto fan = fan_paths(sub.graph, to_sub(u), targets, 3);
  ensure(fan.has_value(), "stabilize: no 3-fan from a separated component onto the cycle");
  std::array<Path, 3> p;
  for (int i = 0; i < 3; ++i) p[static_cast<std::size_t>(i)] = sub.lift((*fan)[static_cast<std::size_t>(i)]);
  std::sort(p.begin(), p.end(), [&](const Path& a, const Path& b) { return c.position(a.back()) < c.position(b.back()); });
  const std::array<Vertex, 3> ends{p[0].back(), p[1].back(), p[2].back()};

  std::set<Vertex> f_neighbors;
  const auto on_c = detail::mask(g.order(), c.vertices);
  for (Vertex w : st.f) {
    for (Vertex x : g.neighbors(w)) {
      if (on_c[idx(x)]) f_neighbors.insert(x);
    }
  }

  std::vector<Cycle> candidates;
  for (std::size_t j = 0; j < 3; ++j) {
    const std::size_t j1 = (j + 1) % 3;
    const std::size_t j2 = (j + 2) % 3;
    const Path span = c.arc(ends[j], ends[j1]);
    const bool interior_hit = std::any_of(span.vertices.begin() + 1, span.vertices.end() - 1,
                                          [&](Vertex v) { return f_neighbors.contains(v); });
    if (!interior_hit) continue;
    ThetaGraph t;
    t.ends = {u, ends[j2]};
    t.paths[0] = p[j2];
    t.paths[1] = concat(p[j1], c.arc(ends[j1], ends[j2]));
    t.paths[2] = concat(p[j], c.arc(ends[j2], ends[j]).reversed());
    ensure(!theta_defect(g, t), "stabilize: invalid theta from a separated component");
    candidates.push_back(detail::theta_cycle(t));
  }
  if (!candidates.empty()) {
    hit(trace, "lemma3.1:theta");
  } else {
    for (std::size_t i = 0; i < 3; ++i) {
      const std::size_t i1 = (i + 1) % 3;
      const Cycle ci = join_paths(c.arc(ends[i], ends[i1]), concat(p[i1].reversed(), p[i]));
      if (ci.length() % 2 == 0) candidates.push_back(ci.canonical());
    }
    hit(trace, "lemma3.1:fan-cycle");
  }
  ensure(!candidates.empty(), "stabilize: no even cycle among the fan cycles");
  return *std::min_element(candidates.begin(), candidates.end(), cycle_less);
}

// Even cycles on a proper subset of V(C) built from chords; empty when the chord conditions hold.
std::vector<Cycle> chord_replacements(const Graph& g, const Cycle& c) {
  const auto ch = chords(g, c);
  const int len = c.length();
  bool violated = ch.size() >= 2;
  for (const Edge& e : ch) violated = violated || c.arc(e.u, e.v).length() % 2 == 1;
  if (!violated) return {};

  std::vector<Cycle> out;
  auto consider = [&](std::optional<Cycle> cand) {
    if (cand && cand->length() % 2 == 0 && cand->length() < len) out.push_back(*cand);
  };
  for (const Edge& e : ch) {
    consider(as_cycle(g, c.arc(e.u, e.v).vertices));
    consider(as_cycle(g, c.arc(e.v, e.u).vertices));
  }
  const Cycle back = c.reversed();
  for (std::size_t i = 0; i < ch.size(); ++i) {
    for (std::size_t j = i + 1; j < ch.size(); ++j) {
      for (auto [x1, y1] : {std::pair{ch[i].u, ch[i].v}, std::pair{ch[i].v, ch[i].u}}) {
        for (auto [x2, y2] : {std::pair{ch[j].u, ch[j].v}, std::pair{ch[j].v, ch[j].u}}) {
          for (const Cycle* first : {&c, &back}) {
            for (const Cycle* second : {&c, &back}) {
              const Path a = first->arc(y1, x2);
              const Path b = second->arc(y2, x1);
              std::vector<Vertex> vs = a.vertices;
              vs.insert(vs.end(), b.vertices.begin(), b.vertices.end());
              std::vector<Vertex> sorted = vs;
              std::sort(sorted.begin(), sorted.end());
              if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
              consider(as_cycle(g, std::move(vs)));
            }
          }
        }
      }
    }
  }
  ensure(!out.empty(), "stabilize: chord violation without a smaller even cycle");
  return out;
}

}  // namespace

Cycle detail::stabilize_impl(const Graph& g, std::span<const Vertex> avoid, Cycle c, FinderTrace* trace) {
  const Vertex anchor = *std::min_element(avoid.begin(), avoid.end());
  auto st = analyse(g, c, anchor);
  while (true) {
    Cycle next;
    if (!st.connected) {
      next = separated_step(g, c, st, trace);
    } else {
      if (c.length() < 6) break;
      const auto repl = chord_replacements(g, c);
      if (repl.empty()) break;
      hit(trace, "lemma3.1:chord");
      next = *std::min_element(repl.begin(), repl.end(), cycle_less);
    }
    auto next_st = analyse(g, next, anchor);
    const bool improved = next_st.f.size() > st.f.size() ||
                          (next_st.f.size() == st.f.size() && next.length() < c.length());
    ensure(improved, "stabilize: exchange step did not improve the measure");
    c = std::move(next);
    st = std::move(next_st);
  }
  if (auto d = stabilized_defect(g, avoid, c)) throw InternalInvariantError("stabilize: " + *d);
  return c.canonical();
}

namespace {

CyclePairCertificate lemma33_two_mod_four(const Graph& g, const Cycle& c, const std::vector<bool>& on_c,
                                          const std::vector<Vertex>& f, FinderTrace* trace) {
  const auto qd = quasi_diagonal(c);
  const auto ch = chords(g, c);
  const std::vector<Vertex>* q = &qd.components.front();
  if (!ch.empty()) {
    for (const auto& comp : qd.components) {
      if (std::find(comp.begin(), comp.end(), ch.front().u) == comp.end()) q = &comp;
    }
  }
  const int k = static_cast<int>(q->size());
  ensure(2 * k == c.length(), "lemma 3.3: auxiliary cycle of unexpected length");

  std::vector<Vertex> attach;
  for (Vertex ui : *q) {
    const auto out = outside_neighbors(g, ui, on_c);
    ensure(!out.empty(), "lemma 3.3: auxiliary vertex without a neighbour off the cycle");
    attach.push_back(out.front());
  }
  const auto tree = bfs_tree(g, f);

  std::vector<Cycle> short_side, long_side;
  int sum = 0;
  int walk = 0;
  for (int i = 0; i < k; ++i) {
    const Vertex ui = (*q)[idx(i)];
    const Vertex uj = (*q)[idx((i + 1) % k)];
    const Path qi = concat(concat(Path{{ui, attach[idx(i)]}}, tree.path(attach[idx(i)], attach[idx((i + 1) % k)])),
                           Path{{attach[idx((i + 1) % k)], uj}});
    const Path pi = c.arc(ui, uj);
    ensure(pi.length() == k - 1, "lemma 3.3: consecutive auxiliary vertices are not quasi-diagonal");
    short_side.push_back(join_paths(pi, qi.reversed()));
    long_side.push_back(join_paths(qi, c.arc(uj, ui)));
    sum += short_side.back().length();
    walk += qi.length();
  }
  // Each cycle edge lies on (k - 1) / 2 of the k arcs of length k - 1.
  ensure(sum == (k - 1) * c.length() / 2 + walk, "lemma 3.3: parity identity fails");
  ensure(sum % 2 == 0 && walk % 2 == 0, "lemma 3.3: closed tree walk or cycle sum is odd");
  if (trace != nullptr) trace->parity.push_back(ParityRecord{c.length(), k, sum, walk});
  for (int i = 0; i < k; ++i) {
    if (short_side[idx(i)].length() % 2 == 0) {
      hit(trace, "lemma3.3:two-mod-four");
      return detail::make_pair(short_side[idx(i)].canonical(), long_side[idx(i)].canonical());
    }
  }
  throw InternalInvariantError("lemma 3.3: no even cycle among the auxiliary cycles");
}

CyclePairCertificate lemma33_zero_mod_four(const Graph& g, const Cycle& c, const Cycle& d,
                                           const std::vector<bool>& on_c, const std::vector<Vertex>& f,
                                           FinderTrace* trace) {
  const auto fsub = induced_subgraph(g, f);
  auto to_f = [&](Vertex v) {
    return static_cast<Vertex>(std::lower_bound(f.begin(), f.end(), v) - f.begin());
  };
  const auto dec = blocks(fsub.graph);
  std::optional<std::size_t> b_index;
  for (std::size_t b = 0; b < dec.blocks.size(); ++b) {
    const auto& vs = dec.blocks[b].vertices;
    if (std::all_of(d.vertices.begin(), d.vertices.end(),
                    [&](Vertex v) { return std::binary_search(vs.begin(), vs.end(), to_f(v)); })) {
      b_index = b;
    }
  }
  ensure(b_index.has_value(), "lemma 3.3: odd cycle not inside one block of the remainder");
  const auto& block_edges = dec.blocks[*b_index].edges;

  // Branch label: component of F - E(B).
  std::vector<Vertex> uf(idx(fsub.graph.order()));
  std::iota(uf.begin(), uf.end(), 0);
  auto root = [&](Vertex v) {
    while (uf[idx(v)] != v) v = uf[idx(v)] = uf[idx(uf[idx(v)])];
    return v;
  };
  for (const Edge& e : fsub.graph.edges()) {
    if (std::binary_search(block_edges.begin(), block_edges.end(), e)) continue;
    uf[idx(root(e.u))] = root(e.v);
  }

  const auto qd = quasi_diagonal(c);
  for (int p = 0; p < c.length(); ++p) {
    const Vertex u1 = c.vertices[idx(p)];
    for (Vertex u2 : qd.neighbors[idx(p)]) {
      if (c.position(u2) < p) continue;
      bool split = false;
      for (Vertex w1 : outside_neighbors(g, u1, on_c)) {
        for (Vertex w2 : outside_neighbors(g, u2, on_c)) {
          split = split || root(to_f(w1)) != root(to_f(w2));
        }
      }
      if (!split) continue;
      std::vector<Vertex> keep = f;
      keep.push_back(u1);
      keep.push_back(u2);
      std::sort(keep.begin(), keep.end());
      const auto sub = induced_subgraph(g, keep);
      auto to_sub = [&](Vertex v) {
        return static_cast<Vertex>(std::lower_bound(keep.begin(), keep.end(), v) - keep.begin());
      };
      const std::vector<Vertex> a{to_sub(u1), to_sub(u2)};
      std::vector<Vertex> b;
      for (Vertex v : d.vertices) b.push_back(to_sub(v));
      const auto res = disjoint_paths(sub.graph, a, b, 2);
      ensure(res.paths.has_value(), "lemma 3.3: distinct branches but no two disjoint paths");
      const std::vector<Path> conn{sub.lift((*res.paths)[0]), sub.lift((*res.paths)[1])};
      hit(trace, "lemma3.3:zero-mod-four");
      return combine_quasi_diagonal(g, c, d, conn);
    }
  }
  throw InternalInvariantError("lemma 3.3: every quasi-diagonal pair attaches to a single branch");
}

}  // namespace

CyclePairCertificate detail::disjoint_odd_even_impl(const Graph& g, const Cycle& d, const std::optional<Cycle>& seed,
                                            FinderTrace* trace) {
  Cycle start;
  if (seed) {
    start = *seed;
  } else {
    const auto rest = remove_vertices(g, d.vertices);
    auto even = find_even_cycle(rest.graph);
    if (!even) throw HypothesisFailure("even-cycle-disjoint", "no even cycle avoids the odd cycle");
    start = rest.lift(*even);
  }
  const Cycle c = stabilize_impl(g, d.vertices, start, trace);
  const auto on_c = detail::mask(g.order(), c.vertices);
  const auto f = detail::all_but(g.order(), on_c);

  if (c.length() == 4) {
    const auto res = disjoint_paths(g, c.vertices, d.vertices, 3);
    ensure(res.paths.has_value(), "lemma 3.3: fewer than three disjoint paths between the cycles");
    const auto& ps = *res.paths;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i + 1; j < 3; ++j) {
        if (quasi_diagonal_pair(c, ps[i].front(), ps[j].front())) {
          hit(trace, "lemma3.3:four");
          const std::vector<Path> conn{ps[i], ps[j]};
          return combine_quasi_diagonal(g, c, d, conn);
        }
      }
    }
    throw InternalInvariantError("lemma 3.3: three endpoints on a 4-cycle with no adjacent pair");
  }
  if (c.length() % 4 == 2) return lemma33_two_mod_four(g, c, on_c, f, trace);
  return lemma33_zero_mod_four(g, c, d, on_c, f, trace);
}

QuasiDiagonalStructure quasi_diagonal(const Cycle& c) {
  const int len = c.length();
  require_input(len >= 4 && len % 2 == 0, "quasi_diagonal: needs an even cycle of length at least 4");
  QuasiDiagonalStructure out;
  out.host = c;
  const int step = len / 2 - 1;
  for (int p = 0; p < len; ++p) {
    out.neighbors.push_back({c.vertices[idx((p + step) % len)], c.vertices[idx((p + len - step) % len)]});
  }
  std::vector<bool> seen(idx(len), false);
  for (int p = 0; p < len; ++p) {
    if (seen[idx(p)]) continue;
    std::vector<Vertex> comp;
    for (int q = p; !seen[idx(q)]; q = (q + step) % len) {
      seen[idx(q)] = true;
      comp.push_back(c.vertices[idx(q)]);
    }
    out.components.push_back(std::move(comp));
  }
  return out;
}

bool quasi_diagonal_pair(const Cycle& c, Vertex u, Vertex v) {
  require_input(c.length() >= 4 && c.length() % 2 == 0, "quasi_diagonal_pair: needs an even cycle");
  const int d = c.arc(u, v).length();
  return d == c.length() / 2 - 1 || d == c.length() / 2 + 1;
}

std::optional<std::string> stabilized_defect(const Graph& g, std::span<const Vertex> avoid, const Cycle& c) {
  if (auto d = cycle_defect(g, c)) return "not a cycle: " + *d;
  if (c.length() % 2 != 0) return "odd cycle";
  for (Vertex v : avoid) {
    if (c.contains(v)) return "cycle meets the avoided subgraph at " + std::to_string(v);
  }
  if (!is_connected(remove_vertices(g, c.vertices).graph)) return "remainder is disconnected";
  if (c.length() < 6) return std::nullopt;
  const auto ch = chords(g, c);
  if (ch.size() > 1) return std::to_string(ch.size()) + " chords";
  if (ch.size() == 1 && c.arc(ch[0].u, ch[0].v).length() % 2 != 0) return "chord splits the cycle into odd arcs";
  return std::nullopt;
}

Cycle stabilize_even_cycle(const Graph& g, std::span<const Vertex> avoid, const std::optional<Cycle>& seed,
                           FinderTrace* trace) {
  require_input(!avoid.empty(), "stabilize: the avoided subgraph must be nonempty");
  for (Vertex v : avoid) require_input(g.contains(v), "stabilize: unknown vertex");
  std::vector<Vertex> av(avoid.begin(), avoid.end());
  std::sort(av.begin(), av.end());
  require_input(std::adjacent_find(av.begin(), av.end()) == av.end(), "stabilize: repeated vertex");
  require_input(is_connected(induced_subgraph(g, av).graph), "stabilize: avoided subgraph must be connected");
  require_three_connected(g, "stabilize");
  Cycle start;
  if (seed) {
    require_cycle(g, *seed, 0, "stabilize seed");
    for (Vertex v : av) require_input(!seed->contains(v), "stabilize: seed meets the avoided subgraph");
    start = *seed;
  } else {
    const auto rest = remove_vertices(g, av);
    auto even = find_even_cycle(rest.graph);
    if (!even) throw HypothesisFailure("even-cycle-avoiding-d", "no even cycle avoids the given subgraph");
    start = rest.lift(*even);
  }
  return stabilize_impl(g, av, start, trace);
}

CyclePairCertificate combine_quasi_diagonal(const Graph& g, const Cycle& b, const Cycle& d,
                                            std::span<const Path> connectors) {
  require_cycle(g, b, 0, "combine: first cycle");
  require_cycle(g, d, 1, "combine: second cycle");
  require_input(b.length() >= 4, "combine: even cycle too short");
  std::vector<Vertex> shared;
  for (Vertex v : b.vertices) {
    if (d.contains(v)) shared.push_back(v);
  }
  auto on_either = [&](Vertex v) { return b.contains(v) || d.contains(v); };
  // Orients a connector from b to d and checks that it only touches the cycles at its ends.
  auto orient = [&](Path p) {
    if (auto def = path_defect(g, p)) throw InputError("combine: connector " + *def);
    if (!b.contains(p.front())) p = p.reversed();
    require_input(b.contains(p.front()) && d.contains(p.back()), "combine: connector must run from b to d");
    for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i) {
      require_input(!on_either(p.vertices[i]), "combine: connector passes through a cycle");
    }
    return p;
  };

  Vertex s = -1;
  Vertex t = -1;
  std::array<Path, 2> q;
  if (connectors.size() == 2 && shared.empty()) {
    const Path p1 = orient(connectors[0]);
    const Path p2 = orient(connectors[1]);
    for (Vertex v : p1.vertices) require_input(!p2.contains(v), "combine: connectors are not disjoint");
    s = p1.front();
    t = p2.front();
    q[0] = concat(concat(p1, d.arc(p1.back(), p2.back())), p2.reversed());
    q[1] = concat(concat(p1, d.reversed().arc(p1.back(), p2.back())), p2.reversed());
  } else if (connectors.size() == 1 && shared.size() == 1) {
    const Vertex u = shared.front();
    const Path p = orient(connectors[0]);
    require_input(p.front() != u && p.back() != u, "combine: connector must avoid the shared vertex");
    s = p.front();
    t = u;
    q[0] = concat(p, d.arc(p.back(), u));
    q[1] = concat(p, d.reversed().arc(p.back(), u));
  } else {
    throw InputError("combine: attachment shape is neither two disjoint connectors nor one shared vertex");
  }
  require_input(quasi_diagonal_pair(b, s, t), "combine: attachment vertices are not quasi-diagonal");
  const int want = (b.length() / 2 - 1) % 2;
  const Path& chosen = q[0].length() % 2 == want ? q[0] : q[1];
  const Cycle one = join_paths(chosen, b.arc(t, s));
  const Cycle two = join_paths(chosen, b.reversed().arc(t, s));
  return detail::checked(g, detail::make_pair(one.canonical(), two.canonical()), "combine");
}

CyclePairCertificate pair_from_disjoint_odd_even(const Graph& g, const Cycle& d, const std::optional<Cycle>& seed,
                                                 FinderTrace* trace) {
  require_cycle(g, d, 1, "lemma 3.3 odd cycle");
  require_three_connected(g, "lemma 3.3");
  if (seed) {
    require_cycle(g, *seed, 0, "lemma 3.3 seed");
    for (Vertex v : d.vertices) require_input(!seed->contains(v), "lemma 3.3: seed meets the odd cycle");
  }
  return detail::checked(g, disjoint_odd_even_impl(g, d, seed, trace), "lemma 3.3");
}

CyclePairCertificate pair_from_shared_vertex(const Graph& g, const Cycle& b, const Cycle& d, Vertex u,
                                             FinderTrace* trace) {
  require_cycle(g, b, 0, "lemma 3.4 even cycle");
  require_cycle(g, d, 1, "lemma 3.4 odd cycle");
  std::vector<Vertex> shared;
  for (Vertex v : b.vertices) {
    if (d.contains(v)) shared.push_back(v);
  }
  require_input(shared.size() == 1 && shared.front() == u, "lemma 3.4: cycles must share exactly the given vertex");
  require_three_connected(g, "lemma 3.4");

  std::vector<Vertex> avoid;
  for (Vertex v : d.vertices) {
    if (v != u) avoid.push_back(v);
  }
  std::sort(avoid.begin(), avoid.end());
  const Cycle c = stabilize_impl(g, avoid, b, trace);
  if (!c.contains(u)) {
    hit(trace, "lemma3.4:disjoint");
    return detail::checked(g, disjoint_odd_even_impl(g, d, c, trace), "lemma 3.4");
  }

  const auto on_c = detail::mask(g.order(), c.vertices);
  const auto allowed = detail::mask(g.order(), detail::all_but(g.order(), on_c));
  const auto qd = quasi_diagonal(c);
  for (Vertex ui : qd.partners(u)) {
    const auto out = outside_neighbors(g, ui, on_c);
    if (out.empty()) continue;
    auto rest = shortest_path_to(g, out.front(), avoid, allowed);
    ensure(rest.has_value(), "lemma 3.4: remainder does not reach the odd cycle");
    hit(trace, "lemma3.4:quasi-diagonal");
    const std::vector<Path> conn{concat(Path{{ui, out.front()}}, *rest)};
    return combine_quasi_diagonal(g, c, d, conn);
  }

  const auto [u1, u2] = qd.partners(u);
  ensure(g.has_edge(u1, u2), "lemma 3.4: quasi-diagonal partners are not joined by a chord");
  ensure(c.length() >= 6, "lemma 3.4: 4-cycle with isolated partners contradicts 3-connectivity");
  const int pos = c.position(u);
  const int len = c.length();
  const Vertex u4 = c.vertices[idx((pos + len / 2) % len)];
  ensure(g.has_edge(u1, u4) && g.has_edge(u2, u4), "lemma 3.4: antipode is not a common neighbour");
  const Vertex u3 = std::min(c.vertices[idx((pos + 1) % len)], c.vertices[idx((pos + len - 1) % len)]);
  const auto out = outside_neighbors(g, u3, on_c);
  ensure(!out.empty(), "lemma 3.4: cycle neighbour of the shared vertex has no neighbour off the cycle");
  auto rest = shortest_path_to(g, out.front(), avoid, allowed);
  ensure(rest.has_value(), "lemma 3.4: remainder does not reach the odd cycle");
  const Vertex end = rest->back();
  ThetaGraph t;
  t.ends = {u, end};
  t.paths[0] = concat(Path{{u, u3, out.front()}}, *rest);
  t.paths[1] = d.arc(u, end);
  t.paths[2] = d.reversed().arc(u, end);
  ensure(!theta_defect(g, t), "lemma 3.4: invalid theta");
  const Cycle even = detail::theta_cycle(t);
  Cycle triangle{{u1, u2, u4}};
  hit(trace, "lemma3.4:chord");
  return detail::checked(g, disjoint_odd_even_impl(g, triangle.canonical(), even, trace), "lemma 3.4");
}

}  // namespace evencycles
