#include "evencycles/connectivity.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <string>

#include "evencycles/errors.hpp"

namespace evencycles {
namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

std::vector<bool> mask_of(int n, std::span<const Vertex> s) {
  std::vector<bool> m(static_cast<std::size_t>(n), false);
  for (Vertex v : s) {
    if (v < 0 || v >= n) throw InputError("unknown vertex id " + std::to_string(v));
    if (m[idx(v)]) throw InputError("repeated vertex id " + std::to_string(v));
    m[idx(v)] = true;
  }
  return m;
}

// Unit-capacity flow network over split vertices (v_in = 2v, v_out = 2v+1).
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : out_(static_cast<std::size_t>(nodes)) {}

  void add(int from, int to, int cap) {
    out_[static_cast<std::size_t>(from)].push_back(static_cast<int>(to_.size()));
    to_.push_back(to);
    cap_.push_back(cap);
    orig_.push_back(cap);
    out_[static_cast<std::size_t>(to)].push_back(static_cast<int>(to_.size()));
    to_.push_back(from);
    cap_.push_back(0);
    orig_.push_back(0);
  }

  // One BFS augmentation of a single unit; false when the sink is unreachable.
  bool augment(int source, int sink) {
    std::vector<int> via(out_.size(), -1);
    std::vector<bool> seen(out_.size(), false);
    std::queue<int> q;
    q.push(source);
    seen[static_cast<std::size_t>(source)] = true;
    while (!q.empty() && !seen[static_cast<std::size_t>(sink)]) {
      const int x = q.front();
      q.pop();
      for (int e : out_[static_cast<std::size_t>(x)]) {
        const int y = to_[static_cast<std::size_t>(e)];
        if (cap_[static_cast<std::size_t>(e)] > 0 && !seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = true;
          via[static_cast<std::size_t>(y)] = e;
          q.push(y);
        }
      }
    }
    if (!seen[static_cast<std::size_t>(sink)]) return false;
    for (int y = sink; y != source;) {
      const int e = via[static_cast<std::size_t>(y)];
      cap_[static_cast<std::size_t>(e)] -= 1;
      cap_[static_cast<std::size_t>(e ^ 1)] += 1;
      y = to_[static_cast<std::size_t>(e ^ 1)];
    }
    return true;
  }

  std::vector<bool> residual_reach(int source) const {
    std::vector<bool> seen(out_.size(), false);
    std::queue<int> q;
    q.push(source);
    seen[static_cast<std::size_t>(source)] = true;
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      for (int e : out_[static_cast<std::size_t>(x)]) {
        const int y = to_[static_cast<std::size_t>(e)];
        if (cap_[static_cast<std::size_t>(e)] > 0 && !seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = true;
          q.push(y);
        }
      }
    }
    return seen;
  }

  // Follows one unit of flow from `start` to `sink`, consuming it; returns the split-node trail.
  std::vector<int> take_unit(int start, int sink) {
    std::vector<int> trail{start};
    int x = start;
    while (x != sink) {
      bool moved = false;
      for (int e : out_[static_cast<std::size_t>(x)]) {
        const auto ue = static_cast<std::size_t>(e);
        if (orig_[ue] > 0 && orig_[ue] - cap_[ue] > 0) {
          cap_[ue] += 1;  // consume
          x = to_[ue];
          trail.push_back(x);
          moved = true;
          break;
        }
      }
      if (!moved) throw InternalInvariantError("flow decomposition got stuck");
    }
    return trail;
  }

 private:
  std::vector<int> to_;
  std::vector<int> cap_;
  std::vector<int> orig_;
  std::vector<std::vector<int>> out_;
};

Path trail_to_path(const std::vector<int>& trail, int n) {
  Path p;
  for (int node : trail) {
    if (node < 2 * n && node % 2 == 0) p.vertices.push_back(node / 2);
  }
  return p;
}

// Simple cycle closed by the non-tree edge (u, w) of a BFS tree.
Cycle tree_cycle(Vertex u, Vertex w, const std::vector<int>& parent, const std::vector<int>& depth) {
  std::vector<Vertex> left{u};
  std::vector<Vertex> right{w};
  Vertex a = u;
  Vertex b = w;
  while (depth[idx(a)] > depth[idx(b)]) left.push_back(a = parent[idx(a)]);
  while (depth[idx(b)] > depth[idx(a)]) right.push_back(b = parent[idx(b)]);
  while (a != b) {
    left.push_back(a = parent[idx(a)]);
    right.push_back(b = parent[idx(b)]);
  }
  right.pop_back();  // lca already in left
  Cycle c{left};
  c.vertices.insert(c.vertices.begin(), right.rbegin(), right.rend());
  return c;
}

bool cycle_less(const Cycle& a, const Cycle& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return a.canonical().vertices < b.canonical().vertices;
}

}  // namespace

Path Subgraph::lift(const Path& p) const {
  Path out;
  for (Vertex v : p.vertices) out.vertices.push_back(original(v));
  return out;
}

Cycle Subgraph::lift(const Cycle& c) const {
  Cycle out;
  for (Vertex v : c.vertices) out.vertices.push_back(original(v));
  return out;
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  const auto keep = mask_of(g.order(), s);
  Subgraph out;
  std::vector<Vertex> to_new(idx(g.order()), -1);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (keep[idx(v)]) {
      to_new[idx(v)] = static_cast<Vertex>(out.to_original.size());
      out.to_original.push_back(v);
    }
  }
  std::vector<Edge> es;
  for (const Edge& e : g.edges()) {
    if (keep[idx(e.u)] && keep[idx(e.v)]) es.emplace_back(to_new[idx(e.u)], to_new[idx(e.v)]);
  }
  out.graph = Graph(static_cast<int>(out.to_original.size()), es);
  return out;
}

Subgraph remove_vertices(const Graph& g, std::span<const Vertex> s) {
  const auto drop = mask_of(g.order(), s);
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!drop[idx(v)]) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

Contraction contract(const Graph& g, std::span<const Vertex> s) {
  if (s.empty()) throw InputError("contract: empty vertex set");
  const auto in_s = mask_of(g.order(), s);
  Contraction out;
  ContractionRecord& rec = out.record;
  rec.to_contracted.assign(idx(g.order()), -1);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!in_s[idx(v)]) {
      rec.to_contracted[idx(v)] = static_cast<Vertex>(rec.to_original.size());
      rec.to_original.push_back(v);
    } else {
      rec.preimage.push_back(v);
    }
  }
  rec.contracted = static_cast<Vertex>(rec.to_original.size());
  rec.to_original.push_back(-1);
  for (Vertex v : rec.preimage) rec.to_contracted[idx(v)] = rec.contracted;
  rec.realizers.assign(rec.to_original.size(), {});

  std::vector<Edge> es;
  for (const Edge& e : g.edges()) {
    const bool su = in_s[idx(e.u)];
    const bool sv = in_s[idx(e.v)];
    if (su && sv) continue;
    if (!su && !sv) {
      es.emplace_back(rec.to_contracted[idx(e.u)], rec.to_contracted[idx(e.v)]);
      continue;
    }
    const Vertex outside = su ? e.v : e.u;
    const Vertex inside = su ? e.u : e.v;
    auto& list = rec.realizers[idx(rec.to_contracted[idx(outside)])];
    if (list.empty()) es.emplace_back(rec.to_contracted[idx(outside)], rec.contracted);
    list.push_back(inside);
  }
  for (auto& list : rec.realizers) std::sort(list.begin(), list.end());
  out.graph = Graph(static_cast<int>(rec.to_original.size()), es);
  return out;
}

LiftedPath lift_path(const ContractionRecord& rec, const Path& p) {
  LiftedPath out;
  if (p.vertices.empty()) return out;
  const Vertex s = rec.contracted;
  for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i) {
    if (p.vertices[i] == s) throw InputError("lift_path: contracted vertex visited internally");
  }
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    const Vertex v = p.vertices[i];
    if (v != s) {
      out.path.vertices.push_back(rec.to_original.at(idx(v)));
      continue;
    }
    Vertex chosen = rec.preimage.front();
    if (p.vertices.size() > 1) {
      const Vertex next = i == 0 ? p.vertices[1] : p.vertices[i - 1];
      const auto& list = rec.realizers.at(idx(next));
      if (list.empty()) throw InputError("lift_path: contracted edge has no realizer");
      chosen = list.front();
    }
    out.chosen_preimage = chosen;
    out.path.vertices.push_back(chosen);
  }
  return out;
}

bool BlockDecomposition::is_cut_vertex(Vertex v) const {
  return std::binary_search(cut_vertices.begin(), cut_vertices.end(), v);
}

int BlockDecomposition::cut_vertices_in(int b) const {
  int count = 0;
  for (Vertex v : blocks.at(static_cast<std::size_t>(b)).vertices) count += is_cut_vertex(v) ? 1 : 0;
  return count;
}

BlockDecomposition blocks(const Graph& g) {
  const int n = g.order();
  std::vector<int> disc(idx(n), 0);
  std::vector<int> low(idx(n), 0);
  std::vector<Edge> stack;
  std::vector<Block> found;
  int timer = 0;

  std::function<void(Vertex, Vertex)> dfs = [&](Vertex u, Vertex parent) {
    disc[idx(u)] = low[idx(u)] = ++timer;
    for (Vertex w : g.neighbors(u)) {
      if (disc[idx(w)] == 0) {
        stack.emplace_back(u, w);
        dfs(w, u);
        low[idx(u)] = std::min(low[idx(u)], low[idx(w)]);
        if (low[idx(w)] >= disc[idx(u)]) {
          Block b;
          const Edge stop(u, w);
          std::set<Vertex> vs;
          while (true) {
            const Edge e = stack.back();
            stack.pop_back();
            b.edges.push_back(e);
            vs.insert(e.u);
            vs.insert(e.v);
            if (e == stop) break;
          }
          b.vertices.assign(vs.begin(), vs.end());
          std::sort(b.edges.begin(), b.edges.end());
          found.push_back(std::move(b));
        }
      } else if (w != parent && disc[idx(w)] < disc[idx(u)]) {
        stack.emplace_back(u, w);
        low[idx(u)] = std::min(low[idx(u)], disc[idx(w)]);
      }
    }
  };

  for (Vertex v = 0; v < n; ++v) {
    if (disc[idx(v)] != 0) continue;
    if (g.degree(v) == 0) {
      disc[idx(v)] = ++timer;
      found.push_back(Block{{v}, {}});
      continue;
    }
    dfs(v, -1);
  }

  std::sort(found.begin(), found.end(), [](const Block& a, const Block& b) { return a.vertices < b.vertices; });
  BlockDecomposition out;
  out.blocks = std::move(found);
  out.blocks_of.assign(idx(n), {});
  for (std::size_t b = 0; b < out.blocks.size(); ++b) {
    for (Vertex v : out.blocks[b].vertices) out.blocks_of[idx(v)].push_back(static_cast<int>(b));
  }
  for (Vertex v = 0; v < n; ++v) {
    if (out.blocks_of[idx(v)].size() > 1) out.cut_vertices.push_back(v);
  }
  return out;
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> seen(idx(g.order()), false);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[idx(s)]) continue;
    std::vector<Vertex> comp{s};
    seen[idx(s)] = true;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : g.neighbors(comp[i])) {
        if (!seen[idx(w)]) {
          seen[idx(w)] = true;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

std::optional<std::vector<Vertex>> connectivity_cut(const Graph& g, int k) {
  if (k < 1 || k > 3) throw InputError("connectivity_cut supports k in {1,2,3}");
  if (!is_connected(g)) throw InputError("connectivity_cut: graph is disconnected");
  if (k == 1) return std::nullopt;
  const auto bd = blocks(g);
  if (!bd.cut_vertices.empty()) return std::vector<Vertex>{bd.cut_vertices.front()};
  if (k == 2) return std::nullopt;
  const int n = g.order();
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (n - 2 < 2) continue;
      const std::array<Vertex, 2> pair{a, b};
      if (!is_connected(remove_vertices(g, pair).graph)) return std::vector<Vertex>{a, b};
    }
  }
  return std::nullopt;
}

bool is_two_connected(const Graph& g) {
  return g.order() >= 3 && is_connected(g) && !connectivity_cut(g, 2).has_value();
}

bool is_three_connected(const Graph& g) {
  return g.order() >= 4 && is_connected(g) && !connectivity_cut(g, 3).has_value();
}

DisjointPathsResult disjoint_paths(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b,
                                   int k) {
  const int n = g.order();
  const auto in_a = mask_of(n, a);
  const auto in_b = mask_of(n, b);
  for (Vertex v : a) {
    if (in_b[idx(v)]) throw InputError("disjoint_paths: source and sink sets intersect");
  }
  const int big = k + 1;
  const int source = 2 * n;
  const int sink = 2 * n + 1;
  FlowNetwork net(2 * n + 2);
  for (Vertex v = 0; v < n; ++v) {
    net.add(2 * v, 2 * v + 1, 1);
    if (in_a[idx(v)]) net.add(source, 2 * v, big);
    if (in_b[idx(v)]) net.add(2 * v + 1, sink, big);
  }
  for (Vertex u = 0; u < n; ++u) {
    if (in_b[idx(u)]) continue;
    for (Vertex w : g.neighbors(u)) {
      if (!in_a[idx(w)]) net.add(2 * u + 1, 2 * w, big);
    }
  }
  int flow = 0;
  while (flow < k && net.augment(source, sink)) ++flow;

  DisjointPathsResult out;
  if (flow == k) {
    std::vector<Path> paths;
    for (int i = 0; i < k; ++i) paths.push_back(trail_to_path(net.take_unit(source, sink), n));
    std::sort(paths.begin(), paths.end(), [](const Path& x, const Path& y) { return x.vertices < y.vertices; });
    out.paths = std::move(paths);
    return out;
  }
  // Re-solve with vertex weights so that, among the smallest separators, one using the fewest
  // vertices of a and b is reported.
  const int w = n + 1;
  const int inf = w * (k + 1);
  FlowNetwork cut(2 * n + 2);
  for (Vertex v = 0; v < n; ++v) {
    const bool terminal = in_a[idx(v)] || in_b[idx(v)];
    cut.add(2 * v, 2 * v + 1, terminal ? w + 1 : w);
    if (in_a[idx(v)]) cut.add(source, 2 * v, inf);
    if (in_b[idx(v)]) cut.add(2 * v + 1, sink, inf);
  }
  for (Vertex u = 0; u < n; ++u) {
    if (in_b[idx(u)]) continue;
    for (Vertex x : g.neighbors(u)) {
      if (!in_a[idx(x)]) cut.add(2 * u + 1, 2 * x, inf);
    }
  }
  while (cut.augment(source, sink)) {
  }
  const auto reach = cut.residual_reach(source);
  for (Vertex v = 0; v < n; ++v) {
    if (reach[idx(2 * v)] && !reach[idx(2 * v + 1)]) out.separator.push_back(v);
  }
  if (static_cast<int>(out.separator.size()) != flow) throw InternalInvariantError("separator size differs from flow");
  return out;
}

std::optional<std::vector<Path>> fan_paths(const Graph& g, Vertex center, std::span<const Vertex> targets,
                                           int k) {
  const int n = g.order();
  const auto is_target = mask_of(n, targets);
  if (!g.contains(center) || is_target[idx(center)]) throw InputError("fan_paths: bad center");
  const int big = k + 1;
  const int sink = 2 * n;
  FlowNetwork net(2 * n + 1);
  for (Vertex v = 0; v < n; ++v) {
    if (v != center) net.add(2 * v, 2 * v + 1, 1);
    if (is_target[idx(v)]) net.add(2 * v + 1, sink, big);
  }
  for (Vertex u = 0; u < n; ++u) {
    if (is_target[idx(u)]) continue;
    for (Vertex w : g.neighbors(u)) {
      if (w != center) net.add(2 * u + 1, 2 * w, u == center ? 1 : big);
    }
  }
  const int source = 2 * center + 1;
  int flow = 0;
  while (flow < k && net.augment(source, sink)) ++flow;
  if (flow < k) return std::nullopt;
  std::vector<Path> paths;
  for (int i = 0; i < k; ++i) {
    Path p = trail_to_path(net.take_unit(source, sink), n);
    p.vertices.insert(p.vertices.begin(), center);
    paths.push_back(std::move(p));
  }
  std::sort(paths.begin(), paths.end(), [](const Path& x, const Path& y) { return x.vertices < y.vertices; });
  return paths;
}

std::optional<Path> shortest_path_to(const Graph& g, Vertex from, std::span<const Vertex> targets,
                                     const std::vector<bool>& allowed) {
  const auto is_target = mask_of(g.order(), targets);
  if (is_target[idx(from)]) return Path{{from}};
  std::vector<int> parent(idx(g.order()), -2);
  parent[idx(from)] = -1;
  std::queue<Vertex> q;
  q.push(from);
  while (!q.empty()) {
    const Vertex x = q.front();
    q.pop();
    for (Vertex w : g.neighbors(x)) {
      if (parent[idx(w)] != -2) continue;
      if (is_target[idx(w)]) {
        Path p{{w}};
        for (Vertex y = x; y != -1; y = parent[idx(y)]) p.vertices.push_back(y);
        return p.reversed();
      }
      if (!allowed[idx(w)]) continue;
      parent[idx(w)] = x;
      q.push(w);
    }
  }
  return std::nullopt;
}

BipartiteResult is_bipartite(const Graph& g) {
  const int n = g.order();
  BipartiteResult out;
  std::vector<int> color(idx(n), -1);
  std::vector<int> parent(idx(n), -1);
  std::vector<int> depth(idx(n), 0);
  for (Vertex s = 0; s < n; ++s) {
    if (color[idx(s)] != -1) continue;
    color[idx(s)] = 0;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      const Vertex u = q.front();
      q.pop();
      for (Vertex w : g.neighbors(u)) {
        if (color[idx(w)] == -1) {
          color[idx(w)] = 1 - color[idx(u)];
          parent[idx(w)] = u;
          depth[idx(w)] = depth[idx(u)] + 1;
          q.push(w);
        } else if (color[idx(w)] == color[idx(u)]) {
          out.bipartite = false;
          out.odd_cycle = tree_cycle(u, w, parent, depth).canonical();
          return out;
        }
      }
    }
  }
  out.bipartite = true;
  out.coloring = std::move(color);
  return out;
}

std::optional<Cycle> shortest_odd_cycle(const Graph& g) {
  const int n = g.order();
  std::optional<Cycle> best;
  for (Vertex r = 0; r < n; ++r) {
    std::vector<int> depth(idx(n), -1);
    std::vector<int> parent(idx(n), -1);
    depth[idx(r)] = 0;
    std::queue<Vertex> q;
    q.push(r);
    while (!q.empty()) {
      const Vertex u = q.front();
      q.pop();
      for (Vertex w : g.neighbors(u)) {
        if (depth[idx(w)] == -1) {
          depth[idx(w)] = depth[idx(u)] + 1;
          parent[idx(w)] = u;
          q.push(w);
        }
      }
    }
    for (const Edge& e : g.edges()) {
      if (depth[idx(e.u)] < 0 || depth[idx(e.u)] != depth[idx(e.v)]) continue;
      if (best && 2 * depth[idx(e.u)] + 1 > best->length()) continue;
      Cycle c = tree_cycle(e.u, e.v, parent, depth).canonical();
      if (!best || cycle_less(c, *best)) best = std::move(c);
    }
  }
  if (best && !chords(g, *best).empty()) throw InternalInvariantError("shortest odd cycle has a chord");
  return best;
}

std::optional<std::string> theta_defect(const Graph& g, const ThetaGraph& t) {
  if (t.ends[0] == t.ends[1]) return "theta branch vertices coincide";
  int short_paths = 0;
  std::set<Vertex> interior;
  for (const Path& p : t.paths) {
    if (auto d = path_defect(g, p)) return "theta path: " + *d;
    if (p.front() != t.ends[0] || p.back() != t.ends[1]) return "theta path endpoints";
    if (p.length() == 1) ++short_paths;
    for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i) {
      if (!interior.insert(p.vertices[i]).second) return "theta paths share an internal vertex";
    }
  }
  if (short_paths > 1) return "theta has two paths of length 1";
  return std::nullopt;
}

Cycle theta_even_cycle(const ThetaGraph& t) {
  std::optional<Cycle> best;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const Path& a = t.paths[static_cast<std::size_t>(i)];
      const Path& b = t.paths[static_cast<std::size_t>(j)];
      if ((a.length() + b.length()) % 2 != 0) continue;
      Cycle c = join_paths(a, b.reversed()).canonical();
      if (!best || cycle_less(c, *best)) best = std::move(c);
    }
  }
  if (!best) throw InternalInvariantError("theta graph without an even cycle");
  return *best;
}

std::optional<Cycle> find_even_cycle(const Graph& g) {
  const auto bd = blocks(g);
  for (const Block& block : bd.blocks) {
    if (block.vertices.size() < 3) continue;
    const Subgraph sub = induced_subgraph(g, block.vertices);
    const Graph& h = sub.graph;
    const int n = h.order();

    // Any cycle of the block, from the first non-tree edge of a BFS tree.
    std::vector<int> depth(idx(n), -1);
    std::vector<int> parent(idx(n), -1);
    depth[0] = 0;
    std::queue<Vertex> q;
    q.push(0);
    std::optional<Cycle> base;
    while (!q.empty() && !base) {
      const Vertex u = q.front();
      q.pop();
      for (Vertex w : h.neighbors(u)) {
        if (depth[idx(w)] == -1) {
          depth[idx(w)] = depth[idx(u)] + 1;
          parent[idx(w)] = u;
          q.push(w);
        } else if (w != parent[idx(u)]) {
          base = tree_cycle(u, w, parent, depth);
          break;
        }
      }
    }
    if (!base) throw InternalInvariantError("2-connected block without a cycle");
    if (h.size() == n) {
      // The block is itself a cycle: BFS found it whole.
      if (base->length() % 2 == 0) return sub.lift(*base).canonical();
      continue;
    }
    const Cycle& k = *base;
    std::optional<ThetaGraph> theta;
    if (auto cs = chords(h, k); !cs.empty()) {
      const Vertex p = cs.front().u;
      const Vertex r = cs.front().v;
      theta = ThetaGraph{{p, r}, {Path{{p, r}}, k.arc(p, r), k.arc(r, p).reversed()}};
    } else {
      std::vector<bool> on_k(idx(n), false);
      for (Vertex v : k.vertices) on_k[idx(v)] = true;
      for (Vertex p : k.vertices) {
        for (Vertex w : h.neighbors(p)) {
          if (on_k[idx(w)] || theta) continue;
          std::vector<Vertex> targets;
          for (Vertex v : k.vertices) {
            if (v != p) targets.push_back(v);
          }
          std::vector<bool> allowed(idx(n), false);
          for (Vertex v = 0; v < n; ++v) allowed[idx(v)] = !on_k[idx(v)];
          auto rest = shortest_path_to(h, w, targets, allowed);
          if (!rest) throw InternalInvariantError("ear missing in a 2-connected block");
          const Vertex r = rest->back();
          Path ear = concat(Path{{p, w}}, *rest);
          theta = ThetaGraph{{p, r}, {ear, k.arc(p, r), k.arc(r, p).reversed()}};
        }
        if (theta) break;
      }
    }
    if (!theta) throw InternalInvariantError("block with surplus edges but no ear");
    return sub.lift(theta_even_cycle(*theta)).canonical();
  }
  return std::nullopt;
}

}  // namespace evencycles
