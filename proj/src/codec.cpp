#include "evencycles/codec.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <set>
#include <sstream>

#include "evencycles/errors.hpp"

namespace evencycles {

namespace {

using nlohmann::json;

constexpr int kSmallOrderLimit = 62;
constexpr std::int64_t kMediumOrderLimit = 258047;

std::string_view strip_line_end(std::string_view s) {
  if (!s.empty() && s.back() == '\n') s.remove_suffix(1);
  if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
  return s;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    lines.push_back(text.substr(0, nl));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<long long> parse_int(std::string_view s) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::vector<Vertex> ids_of(const json& arr, const char* what) {
  if (!arr.is_array()) throw InputError(std::string("certificate: ") + what + " must be an array");
  std::vector<Vertex> out;
  for (const auto& v : arr) {
    if (!v.is_number_integer()) throw InputError(std::string("certificate: ") + what + " holds a non-integer id");
    out.push_back(v.get<Vertex>());
  }
  return out;
}

const json& field(const json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("certificate: missing field \"") + key + "\"");
  return j.at(key);
}

json graph_json(const GraphSummary& g) { return json{{"n", g.n}, {"e", g.e}, {"format", g.format}}; }

}  // namespace

Graph decode_graph6(std::string_view text) {
  text = strip_line_end(text);
  for (char ch : text) {
    const auto b = static_cast<unsigned char>(ch);
    if (b < 63 || b > 126) throw InputError("graph6: byte " + std::to_string(b) + " outside 63..126");
  }
  if (text.empty()) throw InputError("graph6: empty input");
  std::size_t pos = 0;
  auto take = [&](int count) {
    std::int64_t v = 0;
    for (int i = 0; i < count; ++i) {
      if (pos >= text.size()) throw InputError("graph6: truncated size header");
      v = (v << 6) | (static_cast<unsigned char>(text[pos++]) - 63);
    }
    return v;
  };
  std::int64_t n = 0;
  if (text[0] != '~') {
    n = take(1);
  } else if (text.size() > 1 && text[1] != '~') {
    pos = 1;
    n = take(3);
  } else {
    pos = 2;
    n = take(6);
  }
  if (n > kMediumOrderLimit) throw InputError("graph6: order " + std::to_string(n) + " is too large");
  const std::int64_t bits = n * (n - 1) / 2;
  const std::int64_t need = (bits + 5) / 6;
  const auto have = static_cast<std::int64_t>(text.size() - pos);
  if (have < need) throw InputError("graph6: data shorter than the size header requires");
  if (have > need) throw InputError("graph6: trailing bytes after the adjacency data");

  std::vector<Edge> edges;
  std::int64_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = static_cast<unsigned char>(text[pos + static_cast<std::size_t>(k / 6)]) - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  for (; k < need * 6; ++k) {
    const int byte = static_cast<unsigned char>(text[pos + static_cast<std::size_t>(k / 6)]) - 63;
    if ((byte >> (5 - k % 6)) & 1) throw InputError("graph6: nonzero padding bits");
  }
  return Graph(static_cast<int>(n), edges);
}

std::string encode_graph6(const Graph& g) {
  const std::int64_t n = g.order();
  if (n > kMediumOrderLimit) throw InputError("graph6: order too large to encode");
  std::string out;
  if (n <= kSmallOrderLimit) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph decode_edge_list(std::string_view text) {
  std::optional<long long> declared;
  std::vector<Edge> edges;
  std::set<std::pair<long long, long long>> seen;
  long long max_id = -1;
  int line_no = 0;
  for (std::string_view line : split_lines(text)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto toks = tokens(trim(line));
    if (toks.empty()) continue;
    const std::string where = "edge list line " + std::to_string(line_no) + ": ";
    if (toks[0] == "n") {
      if (toks.size() != 2) throw InputError(where + "header must be \"n <count>\"");
      if (declared) throw InputError(where + "repeated order header");
      if (!edges.empty()) throw InputError(where + "order header after the first edge");
      declared = parse_int(toks[1]);
      if (!declared || *declared < 0) throw InputError(where + "order must be a non-negative integer");
      continue;
    }
    if (toks.size() != 2) throw InputError(where + "expected two vertex ids");
    const auto u = parse_int(toks[0]);
    const auto v = parse_int(toks[1]);
    if (!u || !v) throw InputError(where + "vertex ids must be integers");
    if (*u < 0 || *v < 0) throw InputError(where + "negative vertex id");
    if (*u == *v) throw InputError(where + "self-loop at " + std::to_string(*u));
    if (declared && (*u >= *declared || *v >= *declared)) throw InputError(where + "vertex id exceeds the order");
    if (std::max(*u, *v) > kMediumOrderLimit) throw InputError(where + "vertex id too large");
    if (!seen.insert({std::min(*u, *v), std::max(*u, *v)}).second) {
      throw InputError(where + "duplicate edge " + std::to_string(*u) + " " + std::to_string(*v));
    }
    max_id = std::max({max_id, *u, *v});
    edges.emplace_back(static_cast<Vertex>(*u), static_cast<Vertex>(*v));
  }
  const long long n = declared ? *declared : max_id + 1;
  return Graph(static_cast<int>(n), edges);
}

std::string encode_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.order() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

GraphFormat parse_format(const std::string& tag) {
  if (tag == "auto") return GraphFormat::Auto;
  if (tag == "graph6") return GraphFormat::Graph6;
  if (tag == "edges") return GraphFormat::Edges;
  throw InputError("unknown graph format \"" + tag + "\" (expected auto, graph6 or edges)");
}

std::string format_tag(GraphFormat f) {
  switch (f) {
    case GraphFormat::Auto:
      return "auto";
    case GraphFormat::Graph6:
      return "graph6";
    case GraphFormat::Edges:
      return "edges";
  }
  return "auto";
}

GraphFormat detect_format(std::string_view text) {
  for (std::string_view line : split_lines(text)) {
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto toks = tokens(trim(line));
    if (toks.empty()) continue;
    if (toks.size() == 1 && !parse_int(toks[0])) return GraphFormat::Graph6;
    return GraphFormat::Edges;
  }
  return GraphFormat::Edges;
}

Graph read_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::Auto) format = detect_format(text);
  if (format == GraphFormat::Edges) return decode_edge_list(text);
  const auto graphs = decode_graph6_lines(text);
  if (graphs.size() != 1) throw InputError("graph6 input must hold exactly one graph");
  return graphs.front();
}

std::vector<Graph> decode_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  int line_no = 0;
  for (std::string_view line : split_lines(text)) {
    ++line_no;
    line = strip_line_end(line);
    if (trim(line).empty()) continue;
    try {
      out.push_back(decode_graph6(line));
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

std::string document_kind(const Document& doc) {
  switch (doc.index()) {
    case 0:
      return "cycle-pair";
    case 1:
      return "path-pair";
    case 2:
      return "k5-witness";
    case 3:
      return "hypothesis-failure";
    default:
      return "cycle";
  }
}

json to_json(const Document& doc, const GraphSummary& graph) {
  json j{{"kind", document_kind(doc)}};
  if (const auto* c = std::get_if<CyclePairCertificate>(&doc)) {
    j["cycles"] = {c->shorter.vertices, c->longer.vertices};
    j["lengths"] = {c->shorter.length(), c->longer.length()};
  } else if (const auto* p = std::get_if<PathPairCertificate>(&doc)) {
    j["x"] = p->x;
    j["y"] = p->y;
    j["paths"] = {p->shorter.vertices, p->longer.vertices};
    j["lengths"] = {p->shorter.length(), p->longer.length()};
  } else if (const auto* w = std::get_if<K5BlockWitness>(&doc)) {
    json blocks = json::array();
    for (const Block& b : w->decomposition.blocks) blocks.push_back(b.vertices);
    j["blocks"] = blocks;
    j["cut_vertices"] = w->decomposition.cut_vertices;
    j["block_is_k5"] = w->block_is_k5;
    j["order_is_one_mod_four"] = w->order_is_one_mod_four;
  } else if (const auto* h = std::get_if<HypothesisFailureReport>(&doc)) {
    j["hypothesis"] = h->hypothesis;
    j["detail"] = h->detail;
  } else {
    const auto& cyc = std::get<CycleDocument>(doc).cycle;
    j["cycles"] = {cyc.vertices};
    j["lengths"] = {cyc.length()};
  }
  j["graph"] = graph_json(graph);
  return j;
}

json to_json(const Outcome& outcome, const GraphSummary& graph) {
  return std::visit([&](const auto& v) { return to_json(Document{v}, graph); }, outcome);
}

Document document_from_json(const json& j) {
  if (!j.is_object()) throw InputError("certificate: document must be a JSON object");
  const auto& kind_field = field(j, "kind");
  if (!kind_field.is_string()) throw InputError("certificate: kind must be a string");
  const std::string kind = kind_field.get<std::string>();
  auto sequences = [&](const char* key, std::size_t count) {
    const auto& arr = field(j, key);
    if (!arr.is_array() || arr.size() != count) {
      throw InputError(std::string("certificate: \"") + key + "\" must hold " + std::to_string(count) + " entries");
    }
    std::vector<std::vector<Vertex>> out;
    for (const auto& s : arr) out.push_back(ids_of(s, key));
    return out;
  };
  auto check_lengths = [&](const std::vector<int>& actual) {
    if (!j.contains("lengths")) return;
    const auto& l = j.at("lengths");
    if (!l.is_array() || l.size() != actual.size()) throw InputError("certificate: lengths do not match the sequences");
    for (std::size_t i = 0; i < actual.size(); ++i) {
      if (!l[i].is_number_integer() || l[i].get<int>() != actual[i]) {
        throw InputError("certificate: recorded length differs from the sequence length");
      }
    }
  };

  if (kind == "cycle-pair") {
    const auto s = sequences("cycles", 2);
    CyclePairCertificate c{Cycle{s[0]}, Cycle{s[1]}};
    check_lengths({c.shorter.length(), c.longer.length()});
    return c;
  }
  if (kind == "path-pair") {
    const auto s = sequences("paths", 2);
    const auto& x = field(j, "x");
    const auto& y = field(j, "y");
    if (!x.is_number_integer() || !y.is_number_integer()) throw InputError("certificate: terminals must be integers");
    PathPairCertificate p{x.get<Vertex>(), y.get<Vertex>(), Path{s[0]}, Path{s[1]}};
    check_lengths({p.shorter.length(), p.longer.length()});
    return p;
  }
  if (kind == "k5-witness") {
    K5BlockWitness w;
    const auto& blocks = field(j, "blocks");
    if (!blocks.is_array()) throw InputError("certificate: blocks must be an array");
    for (const auto& b : blocks) w.decomposition.blocks.push_back(Block{ids_of(b, "blocks"), {}});
    w.decomposition.cut_vertices = ids_of(field(j, "cut_vertices"), "cut_vertices");
    const auto& flags = field(j, "block_is_k5");
    if (!flags.is_array()) throw InputError("certificate: block_is_k5 must be an array");
    for (const auto& f : flags) {
      if (!f.is_boolean()) throw InputError("certificate: block_is_k5 holds a non-boolean");
      w.block_is_k5.push_back(f.get<bool>());
    }
    const auto& mod = field(j, "order_is_one_mod_four");
    if (!mod.is_boolean()) throw InputError("certificate: order_is_one_mod_four must be a boolean");
    w.order_is_one_mod_four = mod.get<bool>();
    return w;
  }
  if (kind == "hypothesis-failure") {
    const auto& h = field(j, "hypothesis");
    const auto& d = field(j, "detail");
    if (!h.is_string() || !d.is_string()) throw InputError("certificate: failure report fields must be strings");
    return HypothesisFailureReport{h.get<std::string>(), d.get<std::string>()};
  }
  if (kind == "cycle") {
    const auto s = sequences("cycles", 1);
    CycleDocument c{Cycle{s[0]}};
    check_lengths({c.cycle.length()});
    return c;
  }
  throw InputError("certificate: unknown kind \"" + kind + "\"");
}

ValidationResult validate_document(const Document& doc, const Graph& g) {
  if (const auto* c = std::get_if<CyclePairCertificate>(&doc)) return validate(*c, g);
  if (const auto* p = std::get_if<PathPairCertificate>(&doc)) return validate(*p, g);
  if (const auto* w = std::get_if<K5BlockWitness>(&doc)) {
    if (auto d = k5_witness_defect(g, *w)) return {false, "k5-witness: " + *d};
    return {};
  }
  if (const auto* cyc = std::get_if<CycleDocument>(&doc)) {
    if (auto d = cycle_defect(g, cyc->cycle)) return {false, "cycle-invalid: " + *d};
    return {};
  }
  return {};
}

}  // namespace evencycles
