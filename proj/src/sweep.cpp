#include "evencycles/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <thread>

#include "evencycles/codec.hpp"
#include "evencycles/connectivity.hpp"
#include "evencycles/errors.hpp"
#include "evencycles/finder.hpp"
#include "evencycles/generators.hpp"
#include "evencycles/oracle.hpp"

namespace evencycles {

namespace {

int to_int(const std::string& s, const std::string& spec) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw InputError("corpus spec \"" + spec + "\": \"" + s + "\" is not an integer");
  }
  if (used != s.size()) throw InputError("corpus spec \"" + spec + "\": \"" + s + "\" is not an integer");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, sep)) out.push_back(part);
  return out;
}

std::string connectivity_class(const Graph& g) {
  if (!is_connected(g)) return "disconnected";
  if (is_three_connected(g)) return "3-connected";
  if (is_two_connected(g)) return "2-connected";
  return "1-connected";
}

// Independent check of one record against the exhaustive oracle.
void cross_check(const Graph& g, const Outcome& outcome, SweepRecord& r, int guard) {
  if (g.order() > guard) return;
  r.oracle_checked = true;
  const auto bf = find_consecutive_even_pair_bf(g, guard);
  if (const auto* c = std::get_if<CyclePairCertificate>(&outcome)) {
    const auto spectrum = cycle_spectrum(g, guard);
    r.oracle_agree = bf.has_value() && validate(*c, g) && spectrum.has(c->shorter.length()) &&
                     spectrum.has(c->longer.length());
  } else if (const auto* w = std::get_if<K5BlockWitness>(&outcome)) {
    r.oracle_agree = !bf.has_value() && !k5_witness_defect(g, *w);
  } else {
    r.oracle_agree = 2L * g.size() < 5L * (g.order() - 1) || g.order() == 0;
  }
}

}  // namespace

std::optional<std::vector<Graph>> enumeration_corpus(const std::string& spec) {
  const std::string prefix = "enumerate:";
  if (spec.rfind(prefix, 0) != 0) return std::nullopt;
  const auto parts = split(spec.substr(prefix.size()), ':');
  if (parts.empty() || parts.size() > 2) throw InputError("corpus spec \"" + spec + "\" is malformed");
  int lo = 0;
  int hi = 0;
  if (const auto dash = parts[0].find('-'); dash != std::string::npos) {
    lo = to_int(parts[0].substr(0, dash), spec);
    hi = to_int(parts[0].substr(dash + 1), spec);
  } else {
    lo = hi = to_int(parts[0], spec);
  }
  if (lo < 0 || hi < lo || hi > 8) throw InputError("corpus spec \"" + spec + "\": orders must satisfy 0 <= lo <= hi <= 8");
  SmallGraphFilter filter;
  if (parts.size() == 2) {
    for (const auto& f : split(parts[1], ',')) {
      if (f == "connected") {
        filter.connected = true;
      } else if (f == "3-connected") {
        filter.three_connected = true;
      } else if (f == "density") {
        filter.density = true;
      } else if (f.rfind("mindeg=", 0) == 0) {
        filter.min_degree = to_int(f.substr(7), spec);
      } else {
        throw InputError("corpus spec \"" + spec + "\": unknown filter \"" + f + "\"");
      }
    }
  }
  std::vector<Graph> out;
  for (int n = lo; n <= hi; ++n) {
    auto gs = enumerate_small(n, filter);
    out.insert(out.end(), std::make_move_iterator(gs.begin()), std::make_move_iterator(gs.end()));
  }
  return out;
}

SweepRecord sweep_one(const Graph& g, std::size_t index, const SweepOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  SweepRecord r;
  r.index = index;
  r.graph6 = encode_graph6(g);
  r.n = g.order();
  r.e = g.size();
  r.density_ok = g.order() > 0 && 2L * g.size() >= 5L * (g.order() - 1);
  r.connectivity = g.order() == 0 ? "empty" : connectivity_class(g);
  try {
    const Outcome outcome = main_theorem(g);
    if (const auto* c = std::get_if<CyclePairCertificate>(&outcome)) {
      r.outcome = "certificate";
      r.len1 = c->shorter.length();
      r.len2 = c->longer.length();
    } else if (std::holds_alternative<K5BlockWitness>(outcome)) {
      r.outcome = "k5-witness";
    } else {
      r.outcome = "hypothesis-failure";
      r.detail = std::get<HypothesisFailureReport>(outcome).hypothesis;
    }
    if (options.check_oracle) cross_check(g, outcome, r, options.oracle_guard);
  } catch (const GuardExceeded& e) {
    r.outcome = "guard-exceeded";
    r.detail = e.what();
  } catch (const std::exception& e) {
    r.outcome = "internal-error";
    r.oracle_agree = false;
    r.detail = e.what();
  }
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<SweepRecord> run_sweep(const std::vector<Graph>& corpus, const SweepOptions& options) {
  std::vector<SweepRecord> records(corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) records[i] = sweep_one(corpus[i], i, options);
  };
  const int jobs = std::max(1, std::min<int>(options.jobs, static_cast<int>(std::max<std::size_t>(corpus.size(), 1))));
  std::vector<std::jthread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  return records;
}

void write_csv(std::ostream& out, const std::vector<SweepRecord>& records) {
  out << "index,graph6,n,e,density_ok,connectivity,outcome,len1,len2,oracle_checked,oracle_agree,wall_ms\n";
  for (const auto& r : records) {
    // graph6 bytes lie in 63..126, so no field needs quoting.
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.3f", r.wall_ms);
    out << r.index << ',' << r.graph6 << ',' << r.n << ',' << r.e << ',' << (r.density_ok ? 1 : 0) << ','
        << r.connectivity << ',' << r.outcome << ',';
    if (r.outcome == "certificate") {
      out << r.len1 << ',' << r.len2;
    } else {
      out << ',';
    }
    out << ',' << (r.oracle_checked ? 1 : 0) << ',' << (r.oracle_agree ? 1 : 0) << ',' << ms << '\n';
  }
}

SweepSummary summarize(const std::vector<SweepRecord>& records) {
  SweepSummary s;
  s.graphs = records.size();
  for (const auto& r : records) {
    if (r.outcome == "certificate") ++s.certificates;
    if (r.outcome == "k5-witness") ++s.witnesses;
    if (r.outcome == "hypothesis-failure") ++s.hypothesis_failures;
    if (r.outcome == "internal-error" || r.outcome == "guard-exceeded") ++s.errors;
    if (!r.oracle_agree) ++s.disagreements;
  }
  return s;
}

std::string summary_line(const SweepSummary& s) {
  std::ostringstream out;
  out << "graphs: " << s.graphs << "  certificates: " << s.certificates << "  k5-witnesses: " << s.witnesses
      << "  hypothesis-failures: " << s.hypothesis_failures << "  errors: " << s.errors
      << "  disagreements: " << s.disagreements;
  return out.str();
}

}  // namespace evencycles
