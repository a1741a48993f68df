#pragma once

#include <map>
#include <optional>
#include <string>

#include "evencycles/graph.hpp"

namespace evencycles {

inline constexpr int kDefaultGuard = 14;

/// Two cycles of consecutive even lengths; `shorter` has length 2m, `longer` 2m + 2.
struct CyclePairCertificate {
  Cycle shorter;
  Cycle longer;

  bool operator==(const CyclePairCertificate&) const = default;
};

/// Two x-y paths avoiding the edge xy, with longer.length() == shorter.length() + 2.
struct PathPairCertificate {
  Vertex x = 0;
  Vertex y = 0;
  Path shorter;
  Path longer;

  bool operator==(const PathPairCertificate&) const = default;
};

struct SpectrumReport {
  int order = 0;
  int size = 0;
  int guard = kDefaultGuard;
  std::map<int, Cycle> representatives;  // length -> some cycle of that length

  bool has(int length) const { return representatives.contains(length); }
};

/// Exact set of cycle lengths. Throws GuardExceeded when g.order() > guard.
SpectrumReport cycle_spectrum(const Graph& g, int guard = kDefaultGuard);

/// Certificate with the smallest 2m such that 2m and 2m+2 are both cycle lengths.
std::optional<CyclePairCertificate> find_consecutive_even_pair_bf(const Graph& g, int guard = kDefaultGuard);

/// Lengths of simple x-y paths in g (including the edge xy if present), with representatives.
std::map<int, Path> xy_path_lengths(const Graph& g, Vertex x, Vertex y, int guard = kDefaultGuard);

struct NearPair {
  Cycle first;   // shorter
  Cycle second;  // longer by 1 or 2
  int difference() const { return second.length() - first.length(); }
};

/// Two cycles whose lengths differ by one or two. Preference: an even/even pair differing by
/// two (smallest first), then any pair differing by two, then by one.
std::optional<NearPair> bondy_vince_search(const Graph& g, int guard = kDefaultGuard);

/// Shortest cycle whose length is congruent to `residue` modulo `modulus`.
std::optional<Cycle> cycle_mod_residue(const Graph& g, int residue, int modulus, int guard = kDefaultGuard);

struct ValidationResult {
  bool ok = true;
  std::string diagnosis;  // names the violated invariant when !ok

  explicit operator bool() const { return ok; }
};

ValidationResult validate(const CyclePairCertificate& cert, const Graph& g);
ValidationResult validate(const PathPairCertificate& cert, const Graph& g);

}  // namespace evencycles
