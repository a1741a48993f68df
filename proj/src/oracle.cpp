#include "evencycles/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "evencycles/errors.hpp"

namespace evencycles {
namespace {

constexpr int kHardGuard = 26;  // memo tables are 2^n * n bits

void check_guard(const Graph& g, int guard) {
  if (guard > kHardGuard) throw InputError("guard above " + std::to_string(kHardGuard) + " is not supported");
  if (g.order() > guard) {
    throw GuardExceeded("order " + std::to_string(g.order()) + " exceeds oracle guard " + std::to_string(guard));
  }
}

// Visited-state memo for exhaustive simple-path search. The set of completions of a partial
// path depends only on (vertex set used, current endpoint), so each state is expanded once.
class StateMemo {
 public:
  explicit StateMemo(int n) : n_(n), bits_(((std::size_t{1} << n) * static_cast<std::size_t>(n) + 63) / 64, 0) {}

  // Returns true if the state was new.
  bool mark(std::uint32_t mask, Vertex v) {
    const std::size_t k = static_cast<std::size_t>(mask) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
    std::uint64_t& word = bits_[k / 64];
    const std::uint64_t bit = std::uint64_t{1} << (k % 64);
    if (word & bit) return false;
    word |= bit;
    return true;
  }

  void clear() { std::fill(bits_.begin(), bits_.end(), 0); }

 private:
  int n_;
  std::vector<std::uint64_t> bits_;
};

class CycleSearch {
 public:
  explicit CycleSearch(const Graph& g) : g_(g), memo_(g.order()) {}

  std::map<int, Cycle> run() {
    for (Vertex r = 0; r < g_.order(); ++r) {
      root_ = r;
      memo_.clear();
      stack_ = {r};
      extend(std::uint32_t{1} << r, r);
    }
    return found_;
  }

 private:
  void extend(std::uint32_t mask, Vertex v) {
    if (!memo_.mark(mask, v)) return;
    if (stack_.size() >= 3 && g_.has_edge(v, root_)) {
      const int len = static_cast<int>(stack_.size());
      if (!found_.contains(len)) found_.emplace(len, Cycle{stack_}.canonical());
    }
    for (Vertex w : g_.neighbors(v)) {
      // The root is the smallest vertex of every cycle it roots.
      if (w <= root_ || (mask >> w) & 1U) continue;
      stack_.push_back(w);
      extend(mask | (std::uint32_t{1} << w), w);
      stack_.pop_back();
    }
  }

  const Graph& g_;
  StateMemo memo_;
  Vertex root_ = 0;
  std::vector<Vertex> stack_;
  std::map<int, Cycle> found_;
};

class PathSearch {
 public:
  PathSearch(const Graph& g, Vertex target) : g_(g), target_(target), memo_(g.order()) {}

  std::map<int, Path> run(Vertex source) {
    stack_ = {source};
    extend(std::uint32_t{1} << source, source);
    return found_;
  }

 private:
  void extend(std::uint32_t mask, Vertex v) {
    if (v == target_) {
      const int len = static_cast<int>(stack_.size()) - 1;
      if (!found_.contains(len)) found_.emplace(len, Path{stack_});
      return;
    }
    if (!memo_.mark(mask, v)) return;
    for (Vertex w : g_.neighbors(v)) {
      if ((mask >> w) & 1U) continue;
      stack_.push_back(w);
      extend(mask | (std::uint32_t{1} << w), w);
      stack_.pop_back();
    }
  }

  const Graph& g_;
  Vertex target_;
  StateMemo memo_;
  std::vector<Vertex> stack_;
  std::map<int, Path> found_;
};

}  // namespace

SpectrumReport cycle_spectrum(const Graph& g, int guard) {
  check_guard(g, guard);
  SpectrumReport report;
  report.order = g.order();
  report.size = g.size();
  report.guard = guard;
  report.representatives = CycleSearch(g).run();
  return report;
}

std::optional<CyclePairCertificate> find_consecutive_even_pair_bf(const Graph& g, int guard) {
  const auto spectrum = cycle_spectrum(g, guard);
  for (const auto& [len, cycle] : spectrum.representatives) {
    if (len % 2 == 0 && spectrum.has(len + 2)) {
      return CyclePairCertificate{cycle, spectrum.representatives.at(len + 2)};
    }
  }
  return std::nullopt;
}

std::map<int, Path> xy_path_lengths(const Graph& g, Vertex x, Vertex y, int guard) {
  check_guard(g, guard);
  if (!g.contains(x) || !g.contains(y)) throw InputError("xy_path_lengths: unknown terminal");
  if (x == y) throw InputError("xy_path_lengths: terminals must differ");
  return PathSearch(g, y).run(x);
}

std::optional<NearPair> bondy_vince_search(const Graph& g, int guard) {
  const auto spectrum = cycle_spectrum(g, guard);
  const auto& reps = spectrum.representatives;
  auto pair_at = [&](int len, int diff) { return NearPair{reps.at(len), reps.at(len + diff)}; };
  for (const auto& [len, c] : reps) {
    if (len % 2 == 0 && spectrum.has(len + 2)) return pair_at(len, 2);
  }
  for (const auto& [len, c] : reps) {
    if (spectrum.has(len + 2)) return pair_at(len, 2);
  }
  for (const auto& [len, c] : reps) {
    if (spectrum.has(len + 1)) return pair_at(len, 1);
  }
  return std::nullopt;
}

std::optional<Cycle> cycle_mod_residue(const Graph& g, int residue, int modulus, int guard) {
  if (modulus <= 0 || residue < 0 || residue >= modulus) {
    throw InputError("cycle_mod_residue: need 0 <= residue < modulus");
  }
  const auto spectrum = cycle_spectrum(g, guard);
  for (const auto& [len, c] : spectrum.representatives) {
    if (len % modulus == residue) return c;
  }
  return std::nullopt;
}

ValidationResult validate(const CyclePairCertificate& cert, const Graph& g) {
  if (auto d = cycle_defect(g, cert.shorter)) return {false, "cycle-invalid: " + *d};
  if (auto d = cycle_defect(g, cert.longer)) return {false, "cycle-invalid: " + *d};
  if (cert.shorter.length() % 2 != 0 || cert.longer.length() % 2 != 0) {
    return {false, "parity: lengths " + std::to_string(cert.shorter.length()) + " and " +
                       std::to_string(cert.longer.length()) + " are not both even"};
  }
  if (cert.longer.length() - cert.shorter.length() != 2) {
    return {false, "difference: lengths " + std::to_string(cert.shorter.length()) + " and " +
                       std::to_string(cert.longer.length()) + " do not differ by 2"};
  }
  return {};
}

ValidationResult validate(const PathPairCertificate& cert, const Graph& g) {
  if (cert.x == cert.y) return {false, "terminals: x equals y"};
  for (const Path* p : {&cert.shorter, &cert.longer}) {
    if (auto d = path_defect(g, *p)) return {false, "path-invalid: " + *d};
    if (p->front() != cert.x || p->back() != cert.y) return {false, "endpoints: path does not run from x to y"};
    if (p->length() == 1) return {false, "uses-edge-xy: path is the edge xy"};
  }
  if (cert.longer.length() - cert.shorter.length() != 2) {
    return {false, "difference: lengths " + std::to_string(cert.shorter.length()) + " and " +
                       std::to_string(cert.longer.length()) + " do not differ by 2"};
  }
  return {};
}

}  // namespace evencycles
