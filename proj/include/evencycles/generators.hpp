#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "evencycles/graph.hpp"

namespace evencycles {

enum class Family {
  K5BlockTree,
  Complete,
  CompleteBipartite,
  Theta,
  Cycle,
  Wheel,
  Prism,
  Petersen,
  EnumerateSmall,
};

/// Parameters per family:
///   k5-block-tree: {blocks}        complete: {n}         complete-bipartite: {a, b}
///   theta: {a, b, c} path lengths  cycle: {n}            wheel: {rim}
///   prism: {k} (C_k x K2)          petersen: {}          enumerate-small: not a single graph
struct GeneratorSpec {
  Family family = Family::Complete;
  std::vector<int> params;
  std::uint64_t seed = 0;  // attachment-shape seed for block trees
};

/// Parses "k5-block-tree", "complete", ... Throws InputError on unknown tags.
Family parse_family(const std::string& tag);
std::string family_tag(Family f);

/// Block i (i >= 1) attaches at vertex attachments[i-1]; see k5_block_tree_attachments.
Graph gen_k5_block_tree(int blocks, std::uint64_t seed = 0);
/// The attachment vertices chosen by the shape seed, one per block after the first.
std::vector<Vertex> k5_block_tree_attachments(int blocks, std::uint64_t seed = 0);

Graph gen_named(const GeneratorSpec& spec);

struct SmallGraphFilter {
  bool connected = false;
  int min_degree = 0;
  bool three_connected = false;
  bool density = false;  // 2e >= 5(n - 1)
};

/// One representative per isomorphism class on n <= 8 vertices, in increasing canonical code
/// order, each relabelled to its canonical form.
std::vector<Graph> enumerate_small(int n, const SmallGraphFilter& filter = {});

/// Canonical code: the lexicographically least upper-triangle adjacency bit string (columns
/// j = 1..n-1, rows i < j; the first bit is the most significant) over all vertex
/// permutations. Requires n <= 8.
std::uint32_t canonical_code(const Graph& g);
Graph graph_from_code(int n, std::uint32_t code);

}  // namespace evencycles
