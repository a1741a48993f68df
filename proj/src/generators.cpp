#include "evencycles/generators.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "evencycles/connectivity.hpp"
#include "evencycles/errors.hpp"

namespace evencycles {
namespace {

constexpr int kMaxSmallOrder = 8;

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

void require_params(const GeneratorSpec& spec, std::size_t count) {
  require(spec.params.size() == count, family_tag(spec.family) + " expects " + std::to_string(count) + " parameter(s)");
}

// Least canonical code by depth-first search over vertex orders. At each position only the
// candidates with the smallest new column can lead to the minimum, and vertices that are twins
// of an already tried candidate yield identical subtrees.
class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : n_(g.order()) {
    for (Vertex v = 0; v < n_; ++v) {
      for (Vertex w : g.neighbors(v)) adj_[static_cast<std::size_t>(v)] |= 1U << w;
    }
    total_bits_ = n_ * (n_ - 1) / 2;
  }

  std::uint32_t run() {
    best_ = ~std::uint32_t{0};
    have_best_ = false;
    search(0, 0, 0);
    return have_best_ ? best_ : 0;
  }

 private:
  std::uint32_t column(int pos, Vertex v) const {
    std::uint32_t col = 0;
    for (int i = 0; i < pos; ++i) col = (col << 1) | ((adj_[static_cast<std::size_t>(order_[static_cast<std::size_t>(i)])] >> v) & 1U);
    return col;
  }

  bool twins(Vertex a, Vertex b) const {
    const std::uint32_t mask = ~((1U << a) | (1U << b));
    return (adj_[static_cast<std::size_t>(a)] & mask) == (adj_[static_cast<std::size_t>(b)] & mask);
  }

  void search(int pos, std::uint32_t used, std::uint32_t prefix) {
    if (pos == n_) {
      if (!have_best_ || prefix < best_) {
        best_ = prefix;
        have_best_ = true;
      }
      return;
    }
    const int bits_after = (pos + 1) * pos / 2;
    std::uint32_t min_col = ~std::uint32_t{0};
    for (Vertex v = 0; v < n_; ++v) {
      if (!((used >> v) & 1U)) min_col = std::min(min_col, column(pos, v));
    }
    const std::uint32_t next_prefix = (prefix << pos) | min_col;
    if (have_best_ && next_prefix > (best_ >> (total_bits_ - bits_after))) return;
    std::vector<Vertex> tried;
    for (Vertex v = 0; v < n_; ++v) {
      if ((used >> v) & 1U || column(pos, v) != min_col) continue;
      if (std::any_of(tried.begin(), tried.end(), [&](Vertex u) { return twins(u, v); })) continue;
      tried.push_back(v);
      order_[static_cast<std::size_t>(pos)] = v;
      search(pos + 1, used | (1U << v), next_prefix);
    }
  }

  int n_;
  int total_bits_ = 0;
  std::array<std::uint32_t, kMaxSmallOrder> adj_{};
  std::array<Vertex, kMaxSmallOrder> order_{};
  std::uint32_t best_ = 0;
  bool have_best_ = false;
};

bool passes(const Graph& g, const SmallGraphFilter& f) {
  const int n = g.order();
  if (f.density && 2 * g.size() < 5 * (n - 1)) return false;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) < f.min_degree) return false;
  }
  if (f.connected && !is_connected(g)) return false;
  if (f.three_connected && !is_three_connected(g)) return false;
  return true;
}

}  // namespace

Family parse_family(const std::string& tag) {
  static const std::array<std::pair<const char*, Family>, 9> table{{
      {"k5-block-tree", Family::K5BlockTree},
      {"complete", Family::Complete},
      {"complete-bipartite", Family::CompleteBipartite},
      {"theta", Family::Theta},
      {"cycle", Family::Cycle},
      {"wheel", Family::Wheel},
      {"prism", Family::Prism},
      {"petersen", Family::Petersen},
      {"enumerate-small", Family::EnumerateSmall},
  }};
  for (const auto& [name, family] : table) {
    if (tag == name) return family;
  }
  throw InputError("unknown generator family '" + tag + "'");
}

std::string family_tag(Family f) {
  switch (f) {
    case Family::K5BlockTree: return "k5-block-tree";
    case Family::Complete: return "complete";
    case Family::CompleteBipartite: return "complete-bipartite";
    case Family::Theta: return "theta";
    case Family::Cycle: return "cycle";
    case Family::Wheel: return "wheel";
    case Family::Prism: return "prism";
    case Family::Petersen: return "petersen";
    case Family::EnumerateSmall: return "enumerate-small";
  }
  return "unknown";
}

std::vector<Vertex> k5_block_tree_attachments(int blocks, std::uint64_t seed) {
  require(blocks >= 1, "k5-block-tree needs at least one block");
  std::vector<Vertex> out;
  std::uint64_t state = seed;
  for (int b = 1; b < blocks; ++b) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    const auto current_order = static_cast<std::uint64_t>(4 * b + 1);
    out.push_back(static_cast<Vertex>((state >> 33) % current_order));
  }
  return out;
}

Graph gen_k5_block_tree(int blocks, std::uint64_t seed) {
  const auto attachments = k5_block_tree_attachments(blocks, seed);
  std::vector<Edge> es;
  auto add_clique = [&](const std::array<Vertex, 5>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = i + 1; j < vs.size(); ++j) es.emplace_back(vs[i], vs[j]);
    }
  };
  add_clique({0, 1, 2, 3, 4});
  for (int b = 1; b < blocks; ++b) {
    const Vertex base = 4 * b + 1;
    add_clique({attachments[static_cast<std::size_t>(b - 1)], base, base + 1, base + 2, base + 3});
  }
  return Graph(4 * blocks + 1, es);
}

Graph gen_named(const GeneratorSpec& spec) {
  const auto& p = spec.params;
  std::vector<Edge> es;
  switch (spec.family) {
    case Family::K5BlockTree:
      require_params(spec, 1);
      return gen_k5_block_tree(p[0], spec.seed);
    case Family::Complete: {
      require_params(spec, 1);
      require(p[0] >= 1, "complete graph needs n >= 1");
      for (Vertex u = 0; u < p[0]; ++u) {
        for (Vertex v = u + 1; v < p[0]; ++v) es.emplace_back(u, v);
      }
      return Graph(p[0], es);
    }
    case Family::CompleteBipartite: {
      require_params(spec, 2);
      require(p[0] >= 1 && p[1] >= 1, "complete-bipartite needs both sides >= 1");
      for (Vertex u = 0; u < p[0]; ++u) {
        for (Vertex v = 0; v < p[1]; ++v) es.emplace_back(u, p[0] + v);
      }
      return Graph(p[0] + p[1], es);
    }
    case Family::Theta: {
      require_params(spec, 3);
      require(std::all_of(p.begin(), p.end(), [](int len) { return len >= 1; }), "theta path lengths must be >= 1");
      require(std::count(p.begin(), p.end(), 1) <= 1, "theta allows at most one path of length 1");
      Vertex next = 2;
      for (int len : p) {
        Vertex prev = 0;
        for (int i = 1; i < len; ++i) {
          es.emplace_back(prev, next);
          prev = next++;
        }
        es.emplace_back(prev, 1);
      }
      return Graph(next, es);
    }
    case Family::Cycle: {
      require_params(spec, 1);
      require(p[0] >= 3, "cycle needs n >= 3");
      for (Vertex v = 0; v < p[0]; ++v) es.emplace_back(v, (v + 1) % p[0]);
      return Graph(p[0], es);
    }
    case Family::Wheel: {
      require_params(spec, 1);
      require(p[0] >= 3, "wheel needs a rim of at least 3");
      for (Vertex v = 1; v <= p[0]; ++v) {
        es.emplace_back(0, v);
        es.emplace_back(v, v % p[0] + 1);
      }
      return Graph(p[0] + 1, es);
    }
    case Family::Prism: {
      require_params(spec, 1);
      require(p[0] >= 3, "prism needs k >= 3");
      const int k = p[0];
      for (Vertex v = 0; v < k; ++v) {
        es.emplace_back(v, (v + 1) % k);
        es.emplace_back(k + v, k + (v + 1) % k);
        es.emplace_back(v, k + v);
      }
      return Graph(2 * k, es);
    }
    case Family::Petersen: {
      require_params(spec, 0);
      for (Vertex v = 0; v < 5; ++v) {
        es.emplace_back(v, (v + 1) % 5);
        es.emplace_back(v, v + 5);
        es.emplace_back(5 + v, 5 + (v + 2) % 5);
      }
      return Graph(10, es);
    }
    case Family::EnumerateSmall:
      throw InputError("enumerate-small produces a stream; use enumerate_small");
  }
  throw InputError("unknown family");
}

std::uint32_t canonical_code(const Graph& g) {
  require(g.order() <= kMaxSmallOrder, "canonical_code supports n <= 8");
  if (g.order() <= 1) return 0;
  return Canonizer(g).run();
}

Graph graph_from_code(int n, std::uint32_t code) {
  require(n >= 0 && n <= kMaxSmallOrder, "graph_from_code supports n <= 8");
  const int total = n * (n - 1) / 2;
  std::vector<Edge> es;
  int bit = total - 1;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, --bit) {
      if ((code >> bit) & 1U) es.emplace_back(i, j);
    }
  }
  return Graph(n, es);
}

std::vector<Graph> enumerate_small(int n, const SmallGraphFilter& filter) {
  require(n >= 0, "enumerate_small needs n >= 0");
  require(n <= kMaxSmallOrder, "enumerate_small supports n <= 8; ingest larger corpora as graph6");
  std::set<std::uint32_t> level{0};
  for (int order = 2; order <= n; ++order) {
    std::set<std::uint32_t> next;
    for (std::uint32_t code : level) {
      const Graph base = graph_from_code(order - 1, code);
      const auto base_edges = base.edges();
      for (std::uint32_t subset = 0; subset < (1U << (order - 1)); ++subset) {
        auto es = base_edges;
        for (Vertex v = 0; v < order - 1; ++v) {
          if ((subset >> v) & 1U) es.emplace_back(v, order - 1);
        }
        next.insert(canonical_code(Graph(order, es)));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (std::uint32_t code : level) {
    Graph g = graph_from_code(n, code);
    if (passes(g, filter)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace evencycles
