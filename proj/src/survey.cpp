#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>

#include "unigraph/error.hpp"
#include "unigraph/membership.hpp"

namespace unigraph {

namespace {

struct PairIndex {
  int n;
  std::array<std::array<int, 8>, 8> bit{};
  std::vector<std::pair<int, int>> pairs;

  explicit PairIndex(int order) : n(order) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        bit[i][j] = bit[j][i] = static_cast<int>(pairs.size());
        pairs.emplace_back(i, j);
      }
  }
};

bool connected(const PairIndex& p, std::uint32_t mask) {
  std::array<std::uint32_t, 8> nb{};
  for (std::size_t b = 0; b < p.pairs.size(); ++b)
    if (mask >> b & 1u) {
      nb[p.pairs[b].first] |= 1u << p.pairs[b].second;
      nb[p.pairs[b].second] |= 1u << p.pairs[b].first;
    }
  std::uint32_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (int v = 0; v < p.n; ++v)
      if (frontier >> v & 1u) next |= nb[v];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (1u << p.n) - 1;
}

// Minimal code over relabelings that keep the nondecreasing degree order.
bool is_canonical(const PairIndex& p, std::uint32_t mask, const std::array<int, 8>& deg) {
  std::array<int, 8> perm{};
  for (int i = 0; i < p.n; ++i) perm[i] = i;
  std::vector<std::pair<int, int>> classes;
  for (int i = 0; i < p.n;) {
    int j = i;
    while (j < p.n && deg[j] == deg[i]) ++j;
    classes.emplace_back(i, j);
    i = j;
  }
  while (true) {
    std::uint32_t code = 0;
    for (std::size_t b = 0; b < p.pairs.size(); ++b)
      if (mask >> b & 1u) code |= 1u << p.bit[perm[p.pairs[b].first]][perm[p.pairs[b].second]];
    if (code < mask) return false;
    // Advance the product of per-class permutations.
    int c = static_cast<int>(classes.size()) - 1;
    for (; c >= 0; --c) {
      auto [lo, hi] = classes[c];
      if (std::next_permutation(perm.begin() + lo, perm.begin() + hi)) break;
    }
    if (c < 0) return true;
  }
}

}  // namespace

std::vector<Digraph> connected_graphs(int n) {
  if (n < 1 || n > 8) throw InputError("graph enumeration supports 1..8 vertices");
  if (n == 1) return {Digraph(1)};
  const PairIndex p(n);
  const int m = static_cast<int>(p.pairs.size());
  std::vector<Digraph> out;
  for (std::uint64_t raw = 0; raw < (std::uint64_t{1} << m); ++raw) {
    const auto mask = static_cast<std::uint32_t>(raw);
    if (std::popcount(mask) < n - 1) continue;
    std::array<int, 8> deg{};
    for (int b = 0; b < m; ++b)
      if (mask >> b & 1u) {
        ++deg[p.pairs[b].first];
        ++deg[p.pairs[b].second];
      }
    if (!std::is_sorted(deg.begin(), deg.begin() + n)) continue;
    if (!connected(p, mask) || !is_canonical(p, mask, deg)) continue;
    std::vector<std::pair<int, int>> edges;
    for (int b = 0; b < m; ++b)
      if (mask >> b & 1u) edges.push_back(p.pairs[b]);
    out.push_back(Digraph::from_edges(n, edges));
  }
  return out;
}

SurveyResult conjecture_survey(int max_n, const SolverConfig& cfg) {
  if (max_n < 2 || max_n > 8) throw InputError("survey needs 2 <= max_n <= 8");
  cfg.validate();
  SurveyResult s;
  for (int n = 2; n <= max_n; ++n)
    for (Digraph& g : connected_graphs(n)) {
      SurveyEntry e{std::move(g), Verdict::Undecided, Outcome::Undecided, std::nullopt, false};
      const CertifyResult c = certify(e.graph, cfg);
      e.battery = c.report.overall;
      e.outcome = c.outcome;
      if (c.certificate) e.certificate = c.certificate->kind;
      e.hamiltonian = hamiltonian_cycle(e.graph).has_value();
      switch (e.outcome) {
        case Outcome::Certified: ++s.certified; break;
        case Outcome::Excluded: ++s.excluded; break;
        case Outcome::Undecided: ++s.undecided; break;
      }
      if (e.hamiltonian) ++s.hamiltonian;
      if (e.outcome == Outcome::Certified && !e.hamiltonian) s.counterexample_candidates.push_back(e.graph);
      s.entries.push_back(std::move(e));
    }
  return s;
}

}  // namespace unigraph
