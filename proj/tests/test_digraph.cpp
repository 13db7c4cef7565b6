#include <doctest.h>

#include <algorithm>
#include <bit>
#include <set>

#include "oracles.hpp"
#include "unigraph/error.hpp"

using namespace unigraph;

namespace {

std::mt19937_64 rng_for(std::uint64_t s) { return std::mt19937_64(s); }

int vertex_connectivity_brute(const Digraph& d) {
  const int n = d.order();
  int best = n - 1;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int k = std::popcount(mask);
    if (k >= best || n - k < 2) continue;
    std::vector<int> keep;
    for (int v = 0; v < n; ++v)
      if (!(mask >> v & 1u)) keep.push_back(v);
    if (weak_component_count(d.induced(keep)) > 1) best = k;
  }
  return best;
}

int edge_connectivity_brute(const Digraph& d) {
  const int n = d.order();
  int best = 1 << 20;
  for (std::uint32_t s = 1; s + 1 < (1u << n); ++s) {
    int cut = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (d.has_arc(u, v) && ((s >> u & 1u) != (s >> v & 1u))) ++cut;
    best = std::min(best, cut);
  }
  return best;
}

bool is_automorphism(const Digraph& d, const std::vector<int>& p) {
  for (int i = 0; i < d.order(); ++i)
    for (int j = 0; j < d.order(); ++j)
      if (d.has_arc(i, j) != d.has_arc(p[i], p[j])) return false;
  return true;
}

}  // namespace

TEST_CASE("construction validates the pattern") {
  Pattern bad(2, 2);
  bad << 0, 2, 1, 0;
  CHECK_THROWS_AS(Digraph{bad}, InputError);
  CHECK_THROWS_AS(Digraph{Pattern(2, 3)}, InputError);
  const Digraph k2 = Digraph::from_edges(2, {{0, 1}});
  CHECK(k2.is_symmetric());
  CHECK_FALSE(k2.has_loops());
  CHECK(k2.arc_count() == 2);
  CHECK(k2.relabeled({1, 0}) == k2);
}

TEST_CASE("named families") {
  CHECK(cycle_graph(5).regular_degree() == 2);
  CHECK(directed_cycle(5).regular_degree() == 1);
  CHECK(complete_graph(4).arc_count() == 12);
  CHECK(hypercube_graph(4).regular_degree() == 4);
  CHECK(hypercube_graph(3, true).regular_degree() == 4);
  CHECK(star_graph(3) == claw());
  CHECK(lambda_graph().is_symmetric());
  CHECK(claw_counterexample().is_symmetric());
  CHECK(claw_counterexample().arc_count() == 16);
}

TEST_CASE("structure report matches removal oracle") {
  auto rng = rng_for(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const Digraph d = oracle::random_digraph(rng, n, 0.15 + 0.1 * (trial % 4));
    const StructureReport r = structure_report(d);
    const int base = oracle::weak_components_without(d, -1, -1, -1);
    CHECK(static_cast<int>(r.weak_components.size()) == base);

    std::set<Arc> directed;
    std::set<std::pair<int, int>> bridges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        const bool a = d.has_arc(u, v), b = d.has_arc(v, u);
        if (!(a || b) || oracle::weak_components_without(d, -1, u, v) == base) continue;
        if (a && b) bridges.insert({u, v});
        else directed.insert(a ? Arc{u, v} : Arc{v, u});
      }
    CHECK(std::set<Arc>(r.directed_bridges.begin(), r.directed_bridges.end()) == directed);
    CHECK(std::set<std::pair<int, int>>(r.bridges.begin(), r.bridges.end()) == bridges);

    VertexSet cuts;
    for (int v = 0; v < n; ++v)
      if (oracle::weak_components_without(d, v, -1, -1) > base) cuts.push_back(v);
    CHECK(r.cut_vertices == cuts);

    const auto dist = oracle::floyd_warshall(d);
    for (const auto& comp : r.strong_components)
      for (int u : comp)
        for (int w : comp) CHECK(dist[u][w] < (1 << 28));
    int total = 0;
    for (const auto& comp : r.strong_components) total += static_cast<int>(comp.size());
    CHECK(total == n);
  }
}

TEST_CASE("quadrangularity against pairwise counting") {
  auto rng = rng_for(12);
  for (int trial = 0; trial < 200; ++trial) {
    const Digraph d = oracle::random_digraph(rng, 2 + static_cast<int>(rng() % 6), 0.4);
    const int n = d.order();
    int expected = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        int out = 0, in = 0;
        for (int w = 0; w < n; ++w) {
          out += d.has_arc(u, w) && d.has_arc(v, w);
          in += d.has_arc(w, u) && d.has_arc(w, v);
        }
        expected += (out == 1) + (in == 1);
      }
    const auto v = quadrangularity_violations(d);
    CHECK(static_cast<int>(v.size()) == expected);
    for (const auto& q : v) {
      CHECK(q.u != q.v);
      if (q.side == Side::Out) CHECK((d.has_arc(q.u, q.common) && d.has_arc(q.v, q.common)));
      else CHECK((d.has_arc(q.common, q.u) && d.has_arc(q.common, q.v)));
    }
  }
  CHECK(quadrangularity_violations(complete_graph(4)).empty());
  CHECK_FALSE(quadrangularity_violations(path_graph(3)).empty());
}

TEST_CASE("diameter against Floyd-Warshall") {
  auto rng = rng_for(13);
  for (int trial = 0; trial < 200; ++trial) {
    const Digraph d = oracle::random_digraph(rng, 1 + static_cast<int>(rng() % 7), 0.35);
    const auto dist = oracle::floyd_warshall(d);
    int worst = 0;
    for (const auto& row : dist)
      for (int x : row) worst = std::max(worst, x);
    const auto got = diameter(d);
    if (worst >= (1 << 28)) CHECK_FALSE(got.has_value());
    else CHECK(got == worst);
  }
  CHECK(diameter(directed_cycle(6)) == 5);
  CHECK(diameter(cycle_graph(6)) == 3);
}

TEST_CASE("term rank, cycle factor and 2-matchings") {
  auto rng = rng_for(14);
  for (int trial = 0; trial < 200; ++trial) {
    const Digraph d = oracle::random_digraph(rng, 1 + static_cast<int>(rng() % 7), 0.3);
    const int n = d.order();
    const Matching m = term_rank(d);
    CHECK(m.size == oracle::brute_term_rank(d));
    std::set<int> cols;
    for (int i = 0; i < n; ++i)
      if (m.row_to_col[i] >= 0) {
        CHECK(d.has_arc(i, m.row_to_col[i]));
        cols.insert(m.row_to_col[i]);
      }
    CHECK(static_cast<int>(cols.size()) == m.size);

    const auto f = cycle_factor(d);
    CHECK(f.has_value() == (m.size == n));
    if (f) {
      for (int i = 0; i < n; ++i) CHECK(d.has_arc(i, (*f)[i]));
      int covered = 0;
      for (const auto& c : cycle_decomposition(*f)) covered += static_cast<int>(c.size());
      CHECK(covered == n);
    }
  }
  for (int trial = 0; trial < 150; ++trial) {
    const Digraph g = oracle::random_graph(rng, 2 + static_cast<int>(rng() % 7), 0.4);
    const auto pm = perfect_two_matching(g);
    CHECK(pm.has_value() == (oracle::brute_term_rank(g) == g.order()));
    if (!pm) continue;
    for (int v = 0; v < g.order(); ++v) {
      const int deg = pm->out_degree(v);
      CHECK((deg == 1 || deg == 2));
      for (int w : pm->out_neighbors(v)) CHECK(g.has_arc(v, w));
    }
  }
}

TEST_CASE("Hall violations are exact and minimal") {
  auto rng = rng_for(15);
  for (int trial = 0; trial < 150; ++trial) {
    const Digraph g = oracle::random_graph(rng, 2 + static_cast<int>(rng() % 6), 0.35);
    const auto v = hall_violations(g);
    CHECK(v.empty() == oracle::hall_holds(g));
    for (const auto& s : v) {
      CHECK(violates_hall(g, s));
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        VertexSet t = s;
        t.erase(t.begin() + static_cast<long>(drop));
        if (!t.empty()) CHECK_FALSE(violates_hall(g, t));
      }
    }
  }
  const auto leaves = hall_violations(claw());
  REQUIRE_FALSE(leaves.empty());
  CHECK(leaves.front().size() == 2);
  CHECK(violates_hall(claw(), {1, 2, 3}));
  CHECK_THROWS_AS(hall_violations(complete_graph(17)), CapacityError);
}

TEST_CASE("connectivity numbers against brute force") {
  auto rng = rng_for(16);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Digraph g = oracle::random_graph(rng, 3 + static_cast<int>(rng() % 5), 0.55);
    if (weak_component_count(g) != 1) continue;
    ++checked;
    const Connectivity k = connectivity_numbers(g);
    CHECK(k.vertex == vertex_connectivity_brute(g));
    CHECK(k.edge == edge_connectivity_brute(g));
  }
  CHECK(checked > 50);
  const Connectivity c6 = connectivity_numbers(cycle_graph(6), std::pair{0, 3});
  CHECK(c6.vertex == 2);
  REQUIRE(c6.independent_paths.has_value());
  for (const auto& path : *c6.independent_paths) {
    CHECK(path.front() == 0);
    CHECK(path.back() == 3);
  }
}

TEST_CASE("bipartite matching and hamiltonicity") {
  auto rng = rng_for(17);
  for (int trial = 0; trial < 150; ++trial) {
    const Digraph g = oracle::random_graph(rng, 2 + static_cast<int>(rng() % 6), 0.45);
    const auto side = bipartition(g);
    if (side) {
      for (int u = 0; u < g.order(); ++u)
        for (int v : g.out_neighbors(u)) CHECK((*side)[u] != (*side)[v]);
      CHECK(2 * static_cast<int>(bipartite_matching(g, *side).size()) == oracle::brute_term_rank(g));
    }
    const auto h = hamiltonian_cycle(g);
    CHECK(h.has_value() == oracle::brute_hamiltonian(g));
    if (h) {
      for (std::size_t i = 0; i < h->size(); ++i) CHECK(g.has_arc((*h)[i], (*h)[(i + 1) % h->size()]));
    }
  }
  CHECK_FALSE(bipartition(cycle_graph(5)).has_value());
  CHECK(hamiltonian_cycle(claw_counterexample()).has_value());
  CHECK_FALSE(hamiltonian_cycle(claw()).has_value());
  CHECK_THROWS_AS(hamiltonian_cycle(complete_graph(13)), CapacityError);
}

TEST_CASE("automorphisms and isomorphism") {
  const auto c6 = automorphism_group(cycle_graph(6));
  CHECK(c6.elements.size() == 12);
  CHECK(c6.vertex_transitive);
  CHECK(c6.arc_transitive);
  for (const auto& p : c6.elements) CHECK(is_automorphism(cycle_graph(6), p));

  CHECK(automorphism_group(hypercube_graph(3)).elements.size() == 48);
  const auto star = automorphism_group(claw());
  CHECK(star.elements.size() == 6);
  CHECK_FALSE(star.vertex_transitive);
  CHECK_FALSE(star.arc_transitive);
  CHECK_FALSE(automorphism_group(path_graph(4)).vertex_transitive);

  auto rng = rng_for(18);
  for (int trial = 0; trial < 60; ++trial) {
    const Digraph d = oracle::random_digraph(rng, 2 + static_cast<int>(rng() % 7), 0.4);
    std::vector<int> perm(d.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Digraph e = d.relabeled(perm);
    const auto phi = find_isomorphism(d, e);
    REQUIRE(phi.has_value());
    CHECK(d.relabeled(*phi) == e);
  }
  CHECK_FALSE(find_isomorphism(path_graph(4), claw()).has_value());
}

TEST_CASE("induced subgraph search") {
  const auto hit = induced_subgraph_search(claw_counterexample(), claw());
  REQUIRE(hit.has_value());
  CHECK(claw_counterexample().induced(*hit) == claw());
  CHECK_FALSE(induced_subgraph_search(cycle_graph(5), claw()).has_value());
  CHECK(induced_subgraph_search(lambda_graph(), claw()).has_value() == false);
}
