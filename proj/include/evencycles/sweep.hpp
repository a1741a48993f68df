#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "evencycles/graph.hpp"

namespace evencycles {

struct SweepRecord {
  std::size_t index = 0;
  std::string graph6;
  int n = 0;
  int e = 0;
  bool density_ok = false;   // 2e >= 5(n - 1)
  std::string connectivity;  // disconnected, 1-connected, 2-connected or 3-connected
  std::string outcome;       // certificate, k5-witness, hypothesis-failure, guard-exceeded, internal-error
  int len1 = 0;              // certificate lengths, 0 when there is no certificate
  int len2 = 0;
  bool oracle_checked = false;
  bool oracle_agree = true;
  double wall_ms = 0;
  std::string detail;  // error text, not part of the CSV
};

struct SweepOptions {
  int jobs = 1;
  bool check_oracle = false;
  int oracle_guard = 14;
};

/// Corpus spec: "enumerate:<n>" or "enumerate:<lo>-<hi>", optionally followed by
/// ":<filter>[,<filter>...]" with filters connected, mindeg=<d>, 3-connected, density.
/// Returns nullopt when the spec is not an enumeration spec.
std::optional<std::vector<Graph>> enumeration_corpus(const std::string& spec);

SweepRecord sweep_one(const Graph& g, std::size_t index, const SweepOptions& options);

/// Runs every graph through main_theorem on a worker pool; records come back in input order.
std::vector<SweepRecord> run_sweep(const std::vector<Graph>& corpus, const SweepOptions& options);

/// Column order: index, graph6, n, e, density_ok, connectivity, outcome, len1, len2,
/// oracle_checked, oracle_agree, wall_ms.
void write_csv(std::ostream& out, const std::vector<SweepRecord>& records);

struct SweepSummary {
  std::size_t graphs = 0;
  std::size_t certificates = 0;
  std::size_t witnesses = 0;
  std::size_t hypothesis_failures = 0;
  std::size_t errors = 0;
  std::size_t disagreements = 0;
};

SweepSummary summarize(const std::vector<SweepRecord>& records);
std::string summary_line(const SweepSummary& s);

}  // namespace evencycles
