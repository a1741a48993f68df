#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "evencycles/finder.hpp"
#include "evencycles/graph.hpp"
#include "evencycles/oracle.hpp"

namespace evencycles {

/// graph6: size header then the upper triangle packed six bits per byte, column by column.
/// A single trailing newline is tolerated; anything else after the data is an error.
Graph decode_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

/// One "u v" pair per line, 0-based. '#' starts a comment. An optional "n <count>" line must
/// come before the first edge; otherwise the order is the largest id plus one.
Graph decode_edge_list(std::string_view text);
/// Header line followed by the sorted edges.
std::string encode_edge_list(const Graph& g);

enum class GraphFormat { Auto, Graph6, Edges };

GraphFormat parse_format(const std::string& tag);
std::string format_tag(GraphFormat f);

/// Auto picks graph6 when the first non-blank, non-comment line is a single token that is not
/// a number.
GraphFormat detect_format(std::string_view text);
Graph read_graph(std::string_view text, GraphFormat format);

/// graph6 corpus: one graph per non-blank line.
std::vector<Graph> decode_graph6_lines(std::string_view text);

// Certificate documents.

struct GraphSummary {
  int n = 0;
  int e = 0;
  std::string format;
};

struct CycleDocument {
  Cycle cycle;
};

using Document = std::variant<CyclePairCertificate, PathPairCertificate, K5BlockWitness, HypothesisFailureReport,
                              CycleDocument>;

nlohmann::json to_json(const Document& doc, const GraphSummary& graph);
nlohmann::json to_json(const Outcome& outcome, const GraphSummary& graph);

/// Inverse of to_json. Throws InputError on schema violations.
Document document_from_json(const nlohmann::json& j);

/// Re-checks a parsed document against g: certificates through validate, witnesses through
/// k5_witness_defect, single cycles through cycle_defect. Failure reports are accepted as-is.
ValidationResult validate_document(const Document& doc, const Graph& g);

std::string document_kind(const Document& doc);

}  // namespace evencycles
