#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "evencycles/connectivity.hpp"
#include "evencycles/graph.hpp"
#include "evencycles/oracle.hpp"

namespace evencycles {

/// Every block of the graph is K5 (a single vertex counts as the empty block tree).
struct K5BlockWitness {
  BlockDecomposition decomposition;
  std::vector<bool> block_is_k5;  // order 5 and size 10, per block
  bool order_is_one_mod_four = false;
};

struct HypothesisFailureReport {
  std::string hypothesis;
  std::string detail;
};

using Outcome = std::variant<CyclePairCertificate, K5BlockWitness, HypothesisFailureReport>;

std::optional<std::string> k5_witness_defect(const Graph& g, const K5BlockWitness& w);

/// Auxiliary graph on the positions of an even cycle joining vertices at arc distance
/// length/2 - 1 or length/2 + 1.
struct QuasiDiagonalStructure {
  Cycle host;
  std::vector<std::array<Vertex, 2>> neighbors;  // by cycle position, in host vertex ids
  std::vector<std::vector<Vertex>> components;   // each listed in auxiliary-cycle order

  const std::array<Vertex, 2>& partners(Vertex v) const {
    return neighbors.at(static_cast<std::size_t>(host.position(v)));
  }
};

/// Throws InputError for odd cycles or cycles shorter than 4.
QuasiDiagonalStructure quasi_diagonal(const Cycle& c);
bool quasi_diagonal_pair(const Cycle& c, Vertex u, Vertex v);

/// Per-invocation record of the parity identity in the length = 2 (mod 4) branch.
struct ParityRecord {
  int cycle_length = 0;   // length of the stabilized even cycle
  int k = 0;              // cycle_length / 2, the number of auxiliary-cycle vertices used
  int sum_of_cycles = 0;  // sum of the k candidate cycle lengths
  int walk_length = 0;    // closed tree walk through the k attachment vertices
};

/// Optional instrumentation: which construction branches fired and the parity records.
struct FinderTrace {
  std::map<std::string, int> branches;
  std::vector<ParityRecord> parity;

  void hit(const std::string& branch) { ++branches[branch]; }
};

/// Failure description for the three stabilization postconditions, nullopt when all hold.
/// Chord conditions are only imposed on cycles of length at least 6: on four vertices two
/// crossing chords cannot be removed (K4).
std::optional<std::string> stabilized_defect(const Graph& g, std::span<const Vertex> avoid, const Cycle& c);

/// An even cycle C in g - avoid with g - V(C) connected, at most one chord, and any chord
/// splitting C into two even arcs. `avoid` must induce a connected subgraph and g must be
/// 3-connected. Throws HypothesisFailure if g - avoid has no even cycle.
Cycle stabilize_even_cycle(const Graph& g, std::span<const Vertex> avoid,
                           const std::optional<Cycle>& seed = std::nullopt, FinderTrace* trace = nullptr);

/// Joins an even cycle b and an odd cycle d through quasi-diagonal attachments. Either two
/// disjoint b-d connectors with quasi-diagonal b-ends (b, d disjoint), or one connector from
/// b - u to d - u whose b-end is quasi-diagonal with u (b and d share exactly u).
CyclePairCertificate combine_quasi_diagonal(const Graph& g, const Cycle& b, const Cycle& d,
                                            std::span<const Path> connectors);

/// g 3-connected, d an odd cycle with an even cycle in g - V(d).
CyclePairCertificate pair_from_disjoint_odd_even(const Graph& g, const Cycle& d,
                                                 const std::optional<Cycle>& seed = std::nullopt,
                                                 FinderTrace* trace = nullptr);

/// g 3-connected, b even, d odd, V(b) and V(d) meet exactly in u.
CyclePairCertificate pair_from_shared_vertex(const Graph& g, const Cycle& b, const Cycle& d, Vertex u,
                                             FinderTrace* trace = nullptr);

/// g 3-connected with two disjoint odd cycles.
CyclePairCertificate pair_from_two_disjoint_odd(const Graph& g, FinderTrace* trace = nullptr);

/// g 3-connected of order at least 6. Throws HypothesisFailure otherwise.
CyclePairCertificate three_connected_pair(const Graph& g, FinderTrace* trace = nullptr);

/// Checks the hypotheses of the two-paths theorem for terminals x, y; nullopt when they hold.
std::optional<HypothesisFailureReport> two_paths_hypotheses(const Graph& g, Vertex x, Vertex y);

/// Two x-y paths in g - xy whose lengths differ by two. Throws HypothesisFailure when
/// two_paths_hypotheses fails.
PathPairCertificate two_paths_diff_two(const Graph& g, Vertex x, Vertex y, FinderTrace* trace = nullptr);

/// Two cycles of consecutive even lengths when 2e >= 5(n - 1), or a K5 block witness, or a
/// hypothesis-failure report when the density condition fails.
Outcome main_theorem(const Graph& g, FinderTrace* trace = nullptr);

/// A cycle of length 2 (mod 4) when 2e >= 5n. Throws HypothesisFailure otherwise.
Cycle cycle_two_mod_four(const Graph& g, FinderTrace* trace = nullptr);

}  // namespace evencycles
