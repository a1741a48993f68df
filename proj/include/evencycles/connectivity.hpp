#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "evencycles/graph.hpp"

namespace evencycles {

/// Result of restricting a graph to a vertex subset. `to_original[i]` is the id in the source
/// graph of vertex i in `graph`; new ids follow increasing original ids.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_original;

  Vertex original(Vertex v) const { return to_original.at(static_cast<std::size_t>(v)); }
  Path lift(const Path& p) const;
  Cycle lift(const Cycle& c) const;
};

/// Throws InputError on unknown or repeated ids.
Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> s);
/// g - s.
Subgraph remove_vertices(const Graph& g, std::span<const Vertex> s);

/// Bookkeeping for contracting a vertex set S of an original graph into one vertex s.
///
/// Surviving vertices keep their relative order and occupy ids 0..k-1; the contracted vertex
/// is id k. `realizers[w]` lists the vertices of S adjacent to contracted-graph vertex w.
struct ContractionRecord {
  std::vector<Vertex> to_contracted;  // indexed by original id
  std::vector<Vertex> to_original;    // indexed by contracted id; s maps to -1
  Vertex contracted = -1;
  std::vector<Vertex> preimage;       // S, sorted
  std::vector<std::vector<Vertex>> realizers;
};

struct Contraction {
  Graph graph;
  ContractionRecord record;
};

/// Throws InputError when s is empty.
Contraction contract(const Graph& g, std::span<const Vertex> s);

struct LiftedPath {
  Path path;
  std::optional<Vertex> chosen_preimage;
};

/// Maps a contracted-graph path back to the original graph. The contracted vertex may appear
/// only as an endpoint; its preimage is the smallest vertex of S adjacent to the next vertex.
LiftedPath lift_path(const ContractionRecord& rec, const Path& p);

struct Block {
  std::vector<Vertex> vertices;  // sorted
  std::vector<Edge> edges;       // sorted
};

struct BlockDecomposition {
  std::vector<Block> blocks;                     // sorted by vertex list
  std::vector<Vertex> cut_vertices;              // sorted
  std::vector<std::vector<int>> blocks_of;       // vertex -> indices of blocks containing it

  bool is_cut_vertex(Vertex v) const;
  /// Number of cut vertices of the graph that lie in block b.
  int cut_vertices_in(int b) const;
  bool is_end_block(int b) const { return cut_vertices_in(b) <= 1; }
};

BlockDecomposition blocks(const Graph& g);

/// Connected components as sorted vertex lists, ordered by smallest vertex.
std::vector<std::vector<Vertex>> components(const Graph& g);
bool is_connected(const Graph& g);

/// For connected g and k in {1,2,3}: a vertex cut of size < k, or nullopt. A nullopt certifies
/// k-connectivity whenever order() > k. Prefers the smallest cut, then lexicographically least.
std::optional<std::vector<Vertex>> connectivity_cut(const Graph& g, int k);

bool is_two_connected(const Graph& g);
bool is_three_connected(const Graph& g);

struct DisjointPathsResult {
  std::optional<std::vector<Path>> paths;  // k paths from a to b, when they exist
  std::vector<Vertex> separator;           // size < k, when they do not
};

/// Vertex-disjoint a-b paths with no internal vertex in a or b (Menger, unit vertex capacities).
DisjointPathsResult disjoint_paths(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b,
                                   int k);

/// k paths from `center` to distinct vertices of `targets`, disjoint except at `center`, whose
/// internal vertices avoid `targets`. nullopt if no such fan exists.
std::optional<std::vector<Path>> fan_paths(const Graph& g, Vertex center, std::span<const Vertex> targets,
                                           int k);

/// Shortest path from `from` to any vertex of `targets` using only vertices allowed by the
/// mask (targets need not be allowed). Internal vertices avoid `targets`.
std::optional<Path> shortest_path_to(const Graph& g, Vertex from, std::span<const Vertex> targets,
                                     const std::vector<bool>& allowed);

struct BipartiteResult {
  bool bipartite = false;
  std::vector<int> coloring;       // 0/1 per vertex when bipartite
  std::optional<Cycle> odd_cycle;  // witness otherwise
};

BipartiteResult is_bipartite(const Graph& g);

/// A shortest odd cycle, lexicographically least canonical form among them; nullopt if bipartite.
std::optional<Cycle> shortest_odd_cycle(const Graph& g);

/// Three internally disjoint paths between two branch vertices, all oriented from `ends[0]`.
struct ThetaGraph {
  std::array<Vertex, 2> ends{};
  std::array<Path, 3> paths;
};

std::optional<std::string> theta_defect(const Graph& g, const ThetaGraph& t);

/// Shortest even cycle among the three cycles of the theta, ties by canonical vertex sequence.
Cycle theta_even_cycle(const ThetaGraph& t);

/// Some even cycle of g, found from a theta inside a 2-connected block; nullopt if none exists.
std::optional<Cycle> find_even_cycle(const Graph& g);

}  // namespace evencycles
