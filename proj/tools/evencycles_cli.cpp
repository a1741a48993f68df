// Command-line front end: find, paths, spectrum, modcheck, gen, sweep, validate.
//
// Exit codes: 0 success, 1 hypothesis failure, 2 input error (including oracle guard
// refusals), 3 internal invariant error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "evencycles/codec.hpp"
#include "evencycles/errors.hpp"
#include "evencycles/finder.hpp"
#include "evencycles/generators.hpp"
#include "evencycles/oracle.hpp"
#include "evencycles/sweep.hpp"

namespace ec = evencycles;

namespace {

constexpr int kOk = 0;
constexpr int kHypothesis = 1;
constexpr int kInput = 2;
constexpr int kInternal = 3;

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ec::InputError("cannot open \"" + path + "\"");
  return {std::istreambuf_iterator<char>(in), {}};
}

struct Loaded {
  ec::Graph graph;
  ec::GraphSummary summary;
};

Loaded load(const std::string& path, const std::string& format_tag) {
  const std::string text = slurp(path);
  auto format = ec::parse_format(format_tag);
  if (format == ec::GraphFormat::Auto) format = ec::detect_format(text);
  ec::Graph g = ec::read_graph(text, format);
  return {g, {g.order(), g.size(), ec::format_tag(format)}};
}

std::string join(const std::vector<ec::Vertex>& vs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << vs[i];
  return out.str();
}

void print_document(const ec::Document& doc, const ec::GraphSummary& summary, bool as_json) {
  if (as_json) {
    std::cout << ec::to_json(doc, summary).dump() << '\n';
    return;
  }
  std::cout << "graph: n=" << summary.n << " e=" << summary.e << '\n';
  std::cout << "outcome: " << ec::document_kind(doc) << '\n';
  if (const auto* c = std::get_if<ec::CyclePairCertificate>(&doc)) {
    std::cout << "lengths: " << c->shorter.length() << ' ' << c->longer.length() << '\n';
    std::cout << "cycle: " << join(c->shorter.vertices) << '\n';
    std::cout << "cycle: " << join(c->longer.vertices) << '\n';
  } else if (const auto* p = std::get_if<ec::PathPairCertificate>(&doc)) {
    std::cout << "terminals: " << p->x << ' ' << p->y << '\n';
    std::cout << "lengths: " << p->shorter.length() << ' ' << p->longer.length() << '\n';
    std::cout << "path: " << join(p->shorter.vertices) << '\n';
    std::cout << "path: " << join(p->longer.vertices) << '\n';
  } else if (const auto* w = std::get_if<ec::K5BlockWitness>(&doc)) {
    std::cout << "blocks: " << w->decomposition.blocks.size() << '\n';
    for (const auto& b : w->decomposition.blocks) std::cout << "block: " << join(b.vertices) << '\n';
    std::cout << "cut vertices: " << join(w->decomposition.cut_vertices) << '\n';
  } else if (const auto* h = std::get_if<ec::HypothesisFailureReport>(&doc)) {
    std::cout << "hypothesis: " << h->hypothesis << '\n';
    std::cout << "detail: " << h->detail << '\n';
  } else {
    const auto& c = std::get<ec::CycleDocument>(doc).cycle;
    std::cout << "length: " << c.length() << '\n';
    std::cout << "cycle: " << join(c.vertices) << '\n';
  }
}

// Maps library exceptions onto the exit-code contract.
template <class F>
int guarded(F&& body) {
  try {
    return body();
  } catch (const ec::HypothesisFailure& e) {
    std::cerr << "hypothesis failure: " << e.what() << '\n';
    return kHypothesis;
  } catch (const ec::InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const ec::GuardExceeded& e) {
    std::cerr << "guard exceeded: " << e.what() << '\n';
    return kInput;
  } catch (const ec::InternalInvariantError& e) {
    std::cerr << "internal invariant error: " << e.what() << '\n';
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Consecutive even cycle lengths: certifying finder, oracle and sweep harness", "evencycles"};
  app.require_subcommand(1);

  std::string file;
  std::string format = "auto";
  bool as_json = false;

  auto* find = app.add_subcommand("find", "Two cycles of consecutive even lengths, or a K5 block witness");
  std::string mode = "main";
  find->add_option("file", file, "Graph file ('-' for stdin)")->required();
  find->add_option("--format", format, "auto, graph6 or edges")->capture_default_str();
  find->add_option("--mode", mode, "main, three-connected or two-mod-four")->capture_default_str();
  find->add_flag("--json", as_json, "Emit the JSON certificate");

  auto* paths = app.add_subcommand("paths", "Two x-y paths avoiding the edge xy with lengths differing by two");
  int x = -1;
  int y = -1;
  paths->add_option("file", file, "Graph file ('-' for stdin)")->required();
  paths->add_option("--x", x, "First terminal")->required();
  paths->add_option("--y", y, "Second terminal")->required();
  paths->add_option("--format", format, "auto, graph6 or edges")->capture_default_str();
  paths->add_flag("--json", as_json, "Emit the JSON certificate");

  auto* spectrum = app.add_subcommand("spectrum", "Exact cycle-length spectrum (exhaustive)");
  int guard = ec::kDefaultGuard;
  spectrum->add_option("file", file, "Graph file ('-' for stdin)")->required();
  spectrum->add_option("--guard", guard, "Largest order the exhaustive search accepts")->capture_default_str();
  spectrum->add_option("--format", format, "auto, graph6 or edges")->capture_default_str();
  spectrum->add_flag("--json", as_json, "Emit JSON");

  auto* modcheck = app.add_subcommand("modcheck", "Shortest cycle with length = residue (mod modulus)");
  int residue = 0;
  int modulus = 4;
  modcheck->add_option("file", file, "Graph file ('-' for stdin)")->required();
  modcheck->add_option("--residue", residue, "Residue r")->required();
  modcheck->add_option("--modulus", modulus, "Modulus m")->required();
  modcheck->add_option("--guard", guard, "Largest order the exhaustive search accepts")->capture_default_str();
  modcheck->add_option("--format", format, "auto, graph6 or edges")->capture_default_str();
  modcheck->add_flag("--json", as_json, "Emit JSON");

  auto* gen = app.add_subcommand("gen", "Generate a named graph or a small-graph enumeration");
  std::string family;
  std::vector<int> params;
  std::uint64_t seed = 0;
  std::string out_path;
  std::string out_format = "edges";
  std::string filter;
  gen->add_option("family", family,
                  "k5-block-tree, complete, complete-bipartite, theta, cycle, wheel, prism, petersen, "
                  "enumerate-small")
      ->required();
  gen->add_option("params", params, "Family parameters");
  gen->add_option("--seed", seed, "Attachment-shape seed for block trees")->capture_default_str();
  gen->add_option("--out", out_path, "Output file (default stdout)");
  gen->add_option("--format", out_format, "graph6 or edges (enumerations are always graph6)")
      ->capture_default_str();
  gen->add_option("--filter", filter, "Enumeration filters: connected, mindeg=<d>, 3-connected, density");

  auto* sweep = app.add_subcommand("sweep", "Run the finder over a corpus, optionally against the oracle");
  std::string corpus;
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::string csv_path;
  bool check_oracle = false;
  sweep->add_option("corpus", corpus, "graph6 file, or enumerate:<n|lo-hi>[:filters]")->required();
  sweep->add_option("--jobs", jobs, "Worker threads")->capture_default_str();
  sweep->add_option("--csv", csv_path, "CSV output file (default stdout)");
  sweep->add_flag("--check-oracle", check_oracle, "Cross-check every outcome against the exhaustive oracle");
  sweep->add_option("--guard", guard, "Oracle guard")->capture_default_str();

  auto* check = app.add_subcommand("validate", "Re-validate a JSON certificate against a graph");
  std::string cert_path;
  check->add_option("file", file, "Graph file ('-' for stdin)")->required();
  check->add_option("--cert", cert_path, "Certificate JSON file")->required();
  check->add_option("--format", format, "auto, graph6 or edges")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  if (find->parsed()) {
    return guarded([&] {
      const auto [g, summary] = load(file, format);
      if (mode == "main") {
        const ec::Outcome outcome = ec::main_theorem(g);
        std::visit([&](const auto& v) { print_document(ec::Document{v}, summary, as_json); }, outcome);
        return std::holds_alternative<ec::HypothesisFailureReport>(outcome) ? kHypothesis : kOk;
      }
      if (mode == "three-connected") {
        print_document(ec::Document{ec::three_connected_pair(g)}, summary, as_json);
        return kOk;
      }
      if (mode == "two-mod-four") {
        print_document(ec::Document{ec::CycleDocument{ec::cycle_two_mod_four(g)}}, summary, as_json);
        return kOk;
      }
      throw ec::InputError("unknown mode \"" + mode + "\"");
    });
  }

  if (paths->parsed()) {
    return guarded([&] {
      const auto [g, summary] = load(file, format);
      print_document(ec::Document{ec::two_paths_diff_two(g, x, y)}, summary, as_json);
      return kOk;
    });
  }

  if (spectrum->parsed()) {
    return guarded([&] {
      const auto [g, summary] = load(file, format);
      const auto report = ec::cycle_spectrum(g, guard);
      if (as_json) {
        nlohmann::json j{{"kind", "spectrum"}, {"guard", guard}};
        nlohmann::json lengths = nlohmann::json::array();
        nlohmann::json cycles = nlohmann::json::array();
        for (const auto& [len, c] : report.representatives) {
          lengths.push_back(len);
          cycles.push_back(c.vertices);
        }
        j["lengths"] = lengths;
        j["cycles"] = cycles;
        j["graph"] = {{"n", summary.n}, {"e", summary.e}, {"format", summary.format}};
        std::cout << j.dump() << '\n';
      } else {
        std::cout << "graph: n=" << summary.n << " e=" << summary.e << '\n';
        std::cout << "lengths:";
        for (const auto& [len, c] : report.representatives) std::cout << ' ' << len;
        std::cout << '\n';
        for (const auto& [len, c] : report.representatives) std::cout << len << ": " << join(c.vertices) << '\n';
      }
      return kOk;
    });
  }

  if (modcheck->parsed()) {
    return guarded([&] {
      const auto [g, summary] = load(file, format);
      const auto c = ec::cycle_mod_residue(g, residue, modulus, guard);
      if (as_json) {
        if (c) {
          std::cout << ec::to_json(ec::Document{ec::CycleDocument{*c}}, summary).dump() << '\n';
        } else {
          nlohmann::json j{{"kind", "none"},
                           {"residue", residue},
                           {"modulus", modulus},
                           {"graph", {{"n", summary.n}, {"e", summary.e}, {"format", summary.format}}}};
          std::cout << j.dump() << '\n';
        }
      } else if (c) {
        std::cout << "cycle of length " << c->length() << " = " << residue << " (mod " << modulus
                  << "): " << join(c->vertices) << '\n';
      } else {
        std::cout << "no cycle of length " << residue << " (mod " << modulus << ")\n";
      }
      return kOk;
    });
  }

  if (gen->parsed()) {
    return guarded([&] {
      std::ostringstream out;
      const ec::Family fam = ec::parse_family(family);
      if (fam == ec::Family::EnumerateSmall) {
        if (params.size() != 1) throw ec::InputError("enumerate-small takes one parameter n");
        std::string spec = "enumerate:" + std::to_string(params[0]);
        if (!filter.empty()) spec += ":" + filter;
        const auto graphs = ec::enumeration_corpus(spec);
        for (const auto& g : *graphs) out << ec::encode_graph6(g) << '\n';
      } else {
        const ec::Graph g = ec::gen_named({fam, params, seed});
        const auto fmt = ec::parse_format(out_format);
        if (fmt == ec::GraphFormat::Graph6) {
          out << ec::encode_graph6(g) << '\n';
        } else {
          out << "# " << ec::family_tag(fam);
          for (int p : params) out << ' ' << p;
          if (fam == ec::Family::K5BlockTree) {
            out << " seed=" << seed << " attachments=";
            const auto at = ec::k5_block_tree_attachments(params.at(0), seed);
            for (std::size_t i = 0; i < at.size(); ++i) out << (i ? "," : "") << at[i];
          }
          out << '\n' << ec::encode_edge_list(g);
        }
      }
      if (out_path.empty()) {
        std::cout << out.str();
      } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw ec::InputError("cannot write \"" + out_path + "\"");
        f << out.str();
      }
      return kOk;
    });
  }

  if (sweep->parsed()) {
    return guarded([&] {
      std::vector<ec::Graph> graphs;
      if (auto enumerated = ec::enumeration_corpus(corpus)) {
        graphs = std::move(*enumerated);
      } else {
        graphs = ec::decode_graph6_lines(slurp(corpus));
      }
      ec::SweepOptions options{jobs, check_oracle, guard};
      const auto records = ec::run_sweep(graphs, options);
      const auto summary = ec::summarize(records);
      if (csv_path.empty()) {
        ec::write_csv(std::cout, records);
        std::cerr << ec::summary_line(summary) << '\n';
      } else {
        std::ofstream f(csv_path, std::ios::binary);
        if (!f) throw ec::InputError("cannot write \"" + csv_path + "\"");
        ec::write_csv(f, records);
        std::cout << ec::summary_line(summary) << '\n';
      }
      for (const auto& r : records) {
        if (!r.detail.empty() && r.outcome != "hypothesis-failure") {
          std::cerr << "graph " << r.index << " (" << r.graph6 << "): " << r.detail << '\n';
        }
      }
      return summary.disagreements == 0 && summary.errors == 0 ? kOk : kInternal;
    });
  }

  if (check->parsed()) {
    return guarded([&] {
      const auto [g, summary] = load(file, format);
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(slurp(cert_path));
      } catch (const nlohmann::json::parse_error& e) {
        throw ec::InputError(std::string("certificate is not valid JSON: ") + e.what());
      }
      const auto doc = ec::document_from_json(j);
      const auto result = ec::validate_document(doc, g);
      std::cout << (result.ok ? "valid" : "invalid: " + result.diagnosis) << '\n';
      return result.ok ? kOk : kInput;
    });
  }
  return kInput;
}
