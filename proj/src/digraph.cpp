#include "unigraph/digraph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <string>

#include "unigraph/error.hpp"
#include "matching_detail.hpp"

namespace unigraph {

// ---------------------------------------------------------------------------
// Digraph

Digraph::Digraph(int n) {
  if (n < 1) throw InputError("digraph needs at least one vertex, got " + std::to_string(n));
  adj_ = Pattern::Zero(n, n);
}

Digraph::Digraph(Pattern adjacency) : adj_(std::move(adjacency)) {
  if (adj_.rows() < 1 || adj_.rows() != adj_.cols())
    throw InputError("adjacency must be a non-empty square matrix");
  for (Eigen::Index i = 0; i < adj_.rows(); ++i)
    for (Eigen::Index j = 0; j < adj_.cols(); ++j)
      if (adj_(i, j) != 0 && adj_(i, j) != 1)
        throw InputError("adjacency entry (" + std::to_string(i) + "," + std::to_string(j) +
                         ") is not 0/1");
}

Digraph Digraph::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  const int n = static_cast<int>(rows.size());
  Pattern m = Pattern::Zero(n, n);
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) throw InputError("row length differs from row count");
    int j = 0;
    for (int x : row) m(i, j++) = x;
    ++i;
  }
  return Digraph(std::move(m));
}

Digraph Digraph::from_arcs(int n, const std::vector<Arc>& arcs) {
  Digraph d(n);
  for (const Arc& a : arcs) d.set_arc(a.tail, a.head);
  return d;
}

Digraph Digraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Digraph d(n);
  for (auto [u, v] : edges) {
    d.set_arc(u, v);
    d.set_arc(v, u);
  }
  return d;
}

void Digraph::set_arc(int tail, int head, bool present) {
  if (tail < 0 || head < 0 || tail >= order() || head >= order())
    throw InputError("arc (" + std::to_string(tail) + "," + std::to_string(head) +
                     ") out of range");
  adj_(tail, head) = present ? 1 : 0;
}

std::vector<int> Digraph::out_neighbors(int v) const {
  std::vector<int> out;
  for (int j = 0; j < order(); ++j)
    if (adj_(v, j)) out.push_back(j);
  return out;
}

std::vector<int> Digraph::in_neighbors(int v) const {
  std::vector<int> in;
  for (int i = 0; i < order(); ++i)
    if (adj_(i, v)) in.push_back(i);
  return in;
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> out;
  for (int i = 0; i < order(); ++i)
    for (int j = 0; j < order(); ++j)
      if (adj_(i, j)) out.push_back({i, j});
  return out;
}

std::optional<int> Digraph::regular_degree() const {
  const int d = out_degree(0);
  for (int v = 0; v < order(); ++v)
    if (out_degree(v) != d || in_degree(v) != d) return std::nullopt;
  return d;
}

Digraph Digraph::induced(const std::vector<int>& vertices) const {
  const int k = static_cast<int>(vertices.size());
  Pattern m(k, k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) m(a, b) = adj_(vertices[a], vertices[b]);
  return Digraph(std::move(m));
}

Digraph Digraph::without_arc(int tail, int head) const {
  Digraph d = *this;
  d.set_arc(tail, head, false);
  return d;
}

Digraph Digraph::without_vertex(int v) const {
  std::vector<int> keep;
  for (int u = 0; u < order(); ++u)
    if (u != v) keep.push_back(u);
  return induced(keep);
}

Digraph Digraph::relabeled(const std::vector<int>& perm) const {
  const int n = order();
  Pattern m = Pattern::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(perm[i], perm[j]) = adj_(i, j);
  return Digraph(std::move(m));
}

// ---------------------------------------------------------------------------
// Families

Digraph directed_cycle(int n) {
  Digraph d(n);
  for (int i = 0; i < n; ++i) d.set_arc(i, (i + 1) % n);
  return d;
}

Digraph directed_path(int n) {
  Digraph d(n);
  for (int i = 0; i + 1 < n; ++i) d.set_arc(i, i + 1);
  return d;
}

Digraph cycle_graph(int n) {
  Digraph d(n);
  for (int i = 0; i < n; ++i) {
    d.set_arc(i, (i + 1) % n);
    d.set_arc((i + 1) % n, i);
  }
  return d;
}

Digraph path_graph(int n) {
  Digraph d(n);
  for (int i = 0; i + 1 < n; ++i) {
    d.set_arc(i, i + 1);
    d.set_arc(i + 1, i);
  }
  return d;
}

Digraph complete_graph(int n) {
  Pattern m = Pattern::Ones(n, n);
  m.diagonal().setZero();
  return Digraph(std::move(m));
}

Digraph star_graph(int leaves) {
  Digraph d(leaves + 1);
  for (int v = 1; v <= leaves; ++v) {
    d.set_arc(0, v);
    d.set_arc(v, 0);
  }
  return d;
}

Digraph hypercube_graph(int k, bool loops) {
  if (k < 0 || k > 20) throw InputError("hypercube dimension out of range");
  const int n = 1 << k;
  Digraph d(n);
  for (int u = 0; u < n; ++u) {
    for (int b = 0; b < k; ++b) d.set_arc(u, u ^ (1 << b));
    if (loops) d.set_arc(u, u);
  }
  return d;
}

Digraph claw() { return star_graph(3); }

Digraph lambda_graph() {
  return Digraph::from_rows({{0, 1, 0, 0}, {1, 0, 1, 1}, {0, 1, 0, 1}, {0, 1, 1, 0}});
}

Digraph claw_counterexample() {
  return Digraph::from_rows({{0, 0, 0, 1, 1, 0},
                            {0, 0, 0, 1, 1, 1},
                            {0, 0, 0, 1, 1, 1},
                            {1, 1, 1, 0, 0, 0},
                            {1, 1, 1, 0, 0, 0},
                            {0, 1, 1, 0, 0, 0}});
}

// ---------------------------------------------------------------------------
// Neighbourhoods and components

namespace {

void check_vertices(const Digraph& d, const VertexSet& s) {
  for (int v : s)
    if (v < 0 || v >= d.order())
      throw InputError("vertex " + std::to_string(v) + " out of range for order " +
                       std::to_string(d.order()));
}

// Undirected simple adjacency lists, loops dropped.
std::vector<std::vector<int>> underlying(const Digraph& d) {
  const int n = d.order();
  std::vector<std::vector<int>> g(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && (d.has_arc(i, j) || d.has_arc(j, i))) g[i].push_back(j);
  return g;
}

std::vector<int> component_labels(const std::vector<std::vector<int>>& g, int& count) {
  const int n = static_cast<int>(g.size());
  std::vector<int> label(n, -1);
  count = 0;
  for (int s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    std::deque<int> queue{s};
    label[s] = count;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int w : g[u])
        if (label[w] < 0) {
          label[w] = count;
          queue.push_back(w);
        }
    }
    ++count;
  }
  return label;
}

std::vector<VertexSet> group_by_label(const std::vector<int>& label, int count) {
  std::vector<VertexSet> parts(count);
  for (int v = 0; v < static_cast<int>(label.size()); ++v) parts[label[v]].push_back(v);
  std::sort(parts.begin(), parts.end());
  return parts;
}

}  // namespace

VertexSet neighborhood(const Digraph& d, const VertexSet& s, Direction dir) {
  check_vertices(d, s);
  std::vector<char> mark(d.order(), 0);
  for (int v : s) {
    for (int u = 0; u < d.order(); ++u) {
      if ((dir == Direction::Out || dir == Direction::Both) && d.has_arc(v, u)) mark[u] = 1;
      if ((dir == Direction::In || dir == Direction::Both) && d.has_arc(u, v)) mark[u] = 1;
    }
  }
  VertexSet out;
  for (int u = 0; u < d.order(); ++u)
    if (mark[u]) out.push_back(u);
  return out;
}

int weak_component_count(const Digraph& d) {
  int count = 0;
  component_labels(underlying(d), count);
  return count;
}

std::vector<VertexSet> weak_components(const Digraph& d) {
  int count = 0;
  auto label = component_labels(underlying(d), count);
  return group_by_label(label, count);
}

std::vector<VertexSet> strong_components(const Digraph& d) {
  // Kosaraju: finishing order on D, then sweeps on the reverse.
  const int n = d.order();
  std::vector<std::vector<int>> out(n), in(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (d.has_arc(i, j)) {
        out[i].push_back(j);
        in[j].push_back(i);
      }
  std::vector<int> order;
  std::vector<char> seen(n, 0);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::pair<int, std::size_t>> stack{{s, 0}};
    seen[s] = 1;
    while (!stack.empty()) {
      auto& [u, idx] = stack.back();
      if (idx < out[u].size()) {
        const int w = out[u][idx++];
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back({w, 0});
        }
      } else {
        order.push_back(u);
        stack.pop_back();
      }
    }
  }
  std::vector<int> label(n, -1);
  int count = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (label[*it] >= 0) continue;
    std::vector<int> stack{*it};
    label[*it] = count;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int w : in[u])
        if (label[w] < 0) {
          label[w] = count;
          stack.push_back(w);
        }
    }
    ++count;
  }
  return group_by_label(label, count);
}

bool is_strongly_connected(const Digraph& d) { return strong_components(d).size() == 1; }

StructureReport structure_report(const Digraph& d) {
  const int n = d.order();
  StructureReport r;
  r.weak_components = weak_components(d);
  r.strong_components = strong_components(d);
  r.is_symmetric = d.is_symmetric();

  // Lowlink DFS on the underlying simple graph; bridges there are exactly the
  // pairs whose removal (one arc or both) disconnects.
  const auto g = underlying(d);
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<char> cut(n, 0);
  std::vector<std::pair<int, int>> simple_bridges;
  int timer = 0;
  for (int root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    int root_children = 0;
    std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      auto& [u, idx] = stack.back();
      if (idx < g[u].size()) {
        const int w = g[u][idx++];
        if (disc[w] < 0) {
          parent[w] = u;
          if (u == root) ++root_children;
          disc[w] = low[w] = timer++;
          stack.push_back({w, 0});
        } else if (w != parent[u]) {
          low[u] = std::min(low[u], disc[w]);
        }
      } else {
        const int child = u;
        stack.pop_back();
        if (stack.empty()) break;
        const int p = stack.back().first;
        low[p] = std::min(low[p], low[child]);
        if (low[child] > disc[p]) simple_bridges.emplace_back(std::min(p, child), std::max(p, child));
        if (p != root && low[child] >= disc[p]) cut[p] = 1;
      }
    }
    if (root_children > 1) cut[root] = 1;
  }
  std::sort(simple_bridges.begin(), simple_bridges.end());
  for (auto [u, v] : simple_bridges) {
    const bool uv = d.has_arc(u, v), vu = d.has_arc(v, u);
    if (uv && vu)
      r.bridges.emplace_back(u, v);
    else
      r.directed_bridges.push_back(uv ? Arc{u, v} : Arc{v, u});
  }
  std::sort(r.directed_bridges.begin(), r.directed_bridges.end());
  for (int v = 0; v < n; ++v)
    if (cut[v]) r.cut_vertices.push_back(v);
  return r;
}

// ---------------------------------------------------------------------------
// Quadrangularity and distances

std::vector<QuadViolation> quadrangularity_violations(const Digraph& d) {
  const Pattern& a = d.adjacency();
  const Pattern common_out = a * a.transpose();
  const Pattern common_in = a.transpose() * a;
  std::vector<QuadViolation> out;
  const int n = d.order();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (common_in(u, v) == 1) {
        int w = 0;
        while (!(a(w, u) && a(w, v))) ++w;
        out.push_back({u, v, Side::In, w});
      }
      if (common_out(u, v) == 1) {
        int w = 0;
        while (!(a(u, w) && a(v, w))) ++w;
        out.push_back({u, v, Side::Out, w});
      }
    }
  return out;
}

std::optional<int> diameter(const Digraph& d) {
  const int n = d.order();
  const auto out = [&] {
    std::vector<std::vector<int>> o(n);
    for (int v = 0; v < n; ++v) o[v] = d.out_neighbors(v);
    return o;
  }();
  int best = 0;
  std::vector<int> dist(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    std::deque<int> queue{s};
    int reached = 1;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int w : out[u])
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          best = std::max(best, dist[w]);
          ++reached;
          queue.push_back(w);
        }
    }
    if (reached < n) return std::nullopt;
  }
  return best;
}

// ---------------------------------------------------------------------------
// Matchings and factors

Matching term_rank(const Digraph& d) {
  const int n = d.order();
  std::vector<std::vector<int>> rows(n);
  for (int i = 0; i < n; ++i) rows[i] = d.out_neighbors(i);
  auto m = detail::hopcroft_karp(n, n, rows);
  return {m.size, std::move(m.left_to_right)};
}

std::optional<std::vector<int>> cycle_factor(const Digraph& d) {
  Matching m = term_rank(d);
  if (m.size != d.order()) return std::nullopt;
  return std::move(m.row_to_col);
}

std::vector<std::vector<int>> cycle_decomposition(const std::vector<int>& perm) {
  std::vector<std::vector<int>> cycles;
  std::vector<char> seen(perm.size(), 0);
  for (int s = 0; s < static_cast<int>(perm.size()); ++s) {
    if (seen[s]) continue;
    std::vector<int> cyc;
    for (int v = s; !seen[v]; v = perm[v]) {
      seen[v] = 1;
      cyc.push_back(v);
    }
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

std::optional<Digraph> perfect_two_matching(const Digraph& d) {
  if (!d.is_symmetric()) throw InputError("perfect 2-matching needs a symmetric digraph");
  if (d.has_loops()) throw InputError("perfect 2-matching needs a loop-free graph");
  auto perm = cycle_factor(d);
  if (!perm) return std::nullopt;
  Digraph out(d.order());
  for (int i = 0; i < d.order(); ++i) {
    out.set_arc(i, (*perm)[i]);
    out.set_arc((*perm)[i], i);
  }
  return out;
}

bool violates_hall(const Digraph& d, const VertexSet& s) {
  return s.size() > neighborhood(d, s, Direction::Out).size();
}

std::vector<VertexSet> hall_violations(const Digraph& d, int max_n) {
  if (!d.is_symmetric()) throw InputError("Hall condition is checked on graphs only");
  const int n = d.order();
  if (n > max_n || n > 24)
    throw CapacityError("Hall enumeration limited to " + std::to_string(max_n) +
                        " vertices, got " + std::to_string(n));
  std::vector<std::uint32_t> nbr(n, 0);
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w)
      if (d.has_arc(v, w)) nbr[v] |= 1u << w;

  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  std::vector<char> viol(static_cast<std::size_t>(full) + 1, 0);
  std::vector<std::uint32_t> hood(static_cast<std::size_t>(full) + 1, 0);
  for (std::uint32_t s = 1; s <= full; ++s) {
    const int low = std::countr_zero(s);
    hood[s] = hood[s & (s - 1)] | nbr[low];
    viol[s] = std::popcount(s) > std::popcount(hood[s]);
  }
  // below[s]: some nonempty subset of s (including s) violates.
  std::vector<char> below(static_cast<std::size_t>(full) + 1, 0);
  std::vector<VertexSet> minimal;
  for (std::uint32_t s = 1; s <= full; ++s) {
    bool proper = false;
    for (std::uint32_t rest = s; rest; rest &= rest - 1) {
      const std::uint32_t sub = s & ~(rest & -rest);
      if (sub && below[sub]) {
        proper = true;
        break;
      }
    }
    below[s] = proper || viol[s];
    if (viol[s] && !proper) {
      VertexSet set;
      for (int v = 0; v < n; ++v)
        if (s >> v & 1u) set.push_back(v);
      minimal.push_back(std::move(set));
    }
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

std::optional<std::vector<int>> bipartition(const Digraph& d) {
  if (d.has_loops()) return std::nullopt;
  const auto g = underlying(d);
  const int n = d.order();
  std::vector<int> side(n, -1);
  for (int s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int w : g[u]) {
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

std::vector<std::pair<int, int>> bipartite_matching(const Digraph& d, const std::vector<int>& side) {
  std::vector<int> left, right, index(d.order());
  for (int v = 0; v < d.order(); ++v) {
    auto& part = side[v] == 0 ? left : right;
    index[v] = static_cast<int>(part.size());
    part.push_back(v);
  }
  std::vector<std::vector<int>> adj(left.size());
  for (std::size_t a = 0; a < left.size(); ++a)
    for (int w : d.out_neighbors(left[a]))
      if (side[w] == 1) adj[a].push_back(index[w]);
  auto m = detail::hopcroft_karp(static_cast<int>(left.size()), static_cast<int>(right.size()), adj);
  std::vector<std::pair<int, int>> edges;
  for (std::size_t a = 0; a < left.size(); ++a)
    if (m.left_to_right[a] >= 0) edges.emplace_back(left[a], right[m.left_to_right[a]]);
  return edges;
}

// ---------------------------------------------------------------------------
// Connectivity via unit-capacity max flow

namespace {

class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : head_(nodes, -1) {}

  void add(int from, int to, int cap) {
    edges_.push_back({to, head_[from], cap, cap});
    head_[from] = static_cast<int>(edges_.size()) - 1;
    edges_.push_back({from, head_[to], 0, 0});
    head_[to] = static_cast<int>(edges_.size()) - 1;
  }

  int max_flow(int s, int t, int cap_at = std::numeric_limits<int>::max()) {
    int flow = 0;
    const int nodes = static_cast<int>(head_.size());
    while (flow < cap_at) {
      std::vector<int> via(nodes, -1);
      std::deque<int> queue{s};
      std::vector<char> seen(nodes, 0);
      seen[s] = 1;
      while (!queue.empty() && !seen[t]) {
        const int u = queue.front();
        queue.pop_front();
        for (int e = head_[u]; e >= 0; e = edges_[e].next)
          if (edges_[e].residual > 0 && !seen[edges_[e].to]) {
            seen[edges_[e].to] = 1;
            via[edges_[e].to] = e;
            queue.push_back(edges_[e].to);
          }
      }
      if (!seen[t]) break;
      for (int v = t; v != s; v = edges_[via[v] ^ 1].to) {
        edges_[via[v]].residual -= 1;
        edges_[via[v] ^ 1].residual += 1;
      }
      ++flow;
    }
    return flow;
  }

  /// Follows one unit of flow from s to t, consuming it.
  std::vector<int> take_path(int s, int t) {
    std::vector<int> nodes{s};
    int u = s;
    while (u != t) {
      int e = head_[u];
      while (!(e % 2 == 0 && edges_[e].capacity - edges_[e].residual > 0)) e = edges_[e].next;
      edges_[e].residual += 1;
      u = edges_[e].to;
      nodes.push_back(u);
    }
    return nodes;
  }

 private:
  struct Edge {
    int to;
    int next;
    int residual;
    int capacity;
  };
  std::vector<int> head_;
  std::vector<Edge> edges_;
};

constexpr int kBig = 1 << 20;

// Vertex v splits into 2v (in) and 2v+1 (out); endpoints are not capped.
FlowNetwork split_network(const Digraph& d, int s, int t) {
  const int n = d.order();
  FlowNetwork net(2 * n);
  for (int v = 0; v < n; ++v) net.add(2 * v, 2 * v + 1, (v == s || v == t) ? kBig : 1);
  for (int u = 0; u < n; ++u)
    for (int w = 0; w < n; ++w)
      if (u != w && d.has_arc(u, w)) net.add(2 * u + 1, 2 * w, 1);
  return net;
}

}  // namespace

Connectivity connectivity_numbers(const Digraph& d, std::optional<std::pair<int, int>> pair) {
  const int n = d.order();
  if (!d.is_symmetric()) throw InputError("connectivity numbers need a symmetric digraph");
  if (n < 3) throw InputError("connectivity numbers need at least 3 vertices");
  if (weak_component_count(d) != 1) throw InputError("connectivity numbers need a connected graph");

  Connectivity c;
  c.vertex = n - 1;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (d.has_arc(u, v)) continue;
      auto net = split_network(d, u, v);
      c.vertex = std::min(c.vertex, net.max_flow(2 * u + 1, 2 * v, c.vertex));
    }

  c.edge = std::numeric_limits<int>::max();
  for (int t = 1; t < n; ++t) {
    FlowNetwork net(n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (a != b && d.has_arc(a, b)) net.add(a, b, 1);
    c.edge = std::min(c.edge, net.max_flow(0, t));
  }

  if (pair) {
    auto [s, t] = *pair;
    if (s < 0 || t < 0 || s >= n || t >= n || s == t) throw InputError("invalid vertex pair");
    auto net = split_network(d, s, t);
    if (net.max_flow(2 * s + 1, 2 * t, 2) == 2) {
      std::array<std::vector<int>, 2> paths;
      for (auto& p : paths) {
        // Nodes alternate out/in halves; keep one index per vertex.
        auto nodes = net.take_path(2 * s + 1, 2 * t);
        p.push_back(s);
        for (std::size_t k = 1; k < nodes.size(); ++k)
          if (nodes[k] % 2 == 0) p.push_back(nodes[k] / 2);
      }
      c.independent_paths = std::move(paths);
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// Hamiltonicity

std::optional<std::vector<int>> hamiltonian_cycle(const Digraph& d, int limit_n) {
  const int n = d.order();
  if (n > limit_n)
    throw CapacityError("hamiltonian search limited to " + std::to_string(limit_n) +
                        " vertices, got " + std::to_string(n));
  if (n == 1) return d.has_arc(0, 0) ? std::optional<std::vector<int>>{{0}} : std::nullopt;
  for (int v = 0; v < n; ++v) {
    bool in = false, out = false;
    for (int w = 0; w < n; ++w) {
      if (w == v) continue;
      in |= d.has_arc(w, v);
      out |= d.has_arc(v, w);
    }
    if (!in || !out) return std::nullopt;
  }
  std::vector<int> path{0};
  std::vector<char> used(n, 0);
  used[0] = 1;
  std::function<bool()> extend = [&]() -> bool {
    const int u = path.back();
    if (static_cast<int>(path.size()) == n) return d.has_arc(u, 0);
    for (int w = 1; w < n; ++w) {
      if (used[w] || !d.has_arc(u, w)) continue;
      used[w] = 1;
      path.push_back(w);
      if (extend()) return true;
      path.pop_back();
      used[w] = 0;
    }
    return false;
  };
  if (extend()) return path;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Isomorphism backtracking

namespace {

// Visits every isomorphism from -> to until the callback returns false.
void for_each_isomorphism(const Digraph& from, const Digraph& to,
                          const std::function<bool(const std::vector<int>&)>& visit) {
  const int n = from.order();
  if (to.order() != n || from.arc_count() != to.arc_count()) return;
  auto profile = [](const Digraph& g, int v) {
    return std::array<int, 3>{g.in_degree(v), g.out_degree(v), g.has_arc(v, v) ? 1 : 0};
  };
  // Assign in BFS order over the underlying graph so constraints bite early.
  std::vector<int> order;
  {
    const auto g = underlying(from);
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
      if (seen[s]) continue;
      std::deque<int> queue{s};
      seen[s] = 1;
      while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        order.push_back(u);
        for (int w : g[u])
          if (!seen[w]) {
            seen[w] = 1;
            queue.push_back(w);
          }
      }
    }
  }
  std::vector<std::array<int, 3>> pf(n), pt(n);
  for (int v = 0; v < n; ++v) {
    pf[v] = profile(from, v);
    pt[v] = profile(to, v);
  }
  {
    auto a = pf, b = pt;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return;
  }
  std::vector<int> phi(n, -1);
  std::vector<char> used(n, 0);
  bool stop = false;
  std::function<void(int)> place = [&](int k) {
    if (stop) return;
    if (k == n) {
      if (!visit(phi)) stop = true;
      return;
    }
    const int v = order[k];
    for (int w = 0; w < n && !stop; ++w) {
      if (used[w] || pf[v] != pt[w]) continue;
      bool ok = true;
      for (int j = 0; j < k && ok; ++j) {
        const int u = order[j];
        ok = from.has_arc(u, v) == to.has_arc(phi[u], w) && from.has_arc(v, u) == to.has_arc(w, phi[u]);
      }
      if (!ok) continue;
      phi[v] = w;
      used[w] = 1;
      place(k + 1);
      used[w] = 0;
      phi[v] = -1;
    }
  };
  place(0);
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Digraph& from, const Digraph& to, int limit_n) {
  if (from.order() > limit_n)
    throw CapacityError("isomorphism search limited to " + std::to_string(limit_n) + " vertices");
  std::optional<std::vector<int>> found;
  for_each_isomorphism(from, to, [&](const std::vector<int>& phi) {
    found = phi;
    return false;
  });
  return found;
}

AutomorphismGroup automorphism_group(const Digraph& d, int limit_n) {
  if (d.order() > limit_n)
    throw CapacityError("automorphism search limited to " + std::to_string(limit_n) +
                        " vertices, got " + std::to_string(d.order()));
  AutomorphismGroup g;
  for_each_isomorphism(d, d, [&](const std::vector<int>& phi) {
    g.elements.push_back(phi);
    return true;
  });
  std::sort(g.elements.begin(), g.elements.end());

  std::set<int> vorbit;
  for (const auto& p : g.elements) vorbit.insert(p[0]);
  g.vertex_transitive = static_cast<int>(vorbit.size()) == d.order();

  const auto arcs = d.arcs();
  if (arcs.empty()) {
    g.arc_transitive = true;
  } else {
    std::set<Arc> aorbit;
    for (const auto& p : g.elements) aorbit.insert({p[arcs[0].tail], p[arcs[0].head]});
    g.arc_transitive = aorbit.size() == arcs.size();
  }
  return g;
}

std::optional<std::vector<int>> induced_subgraph_search(const Digraph& d, const Digraph& h) {
  const int n = d.order(), k = h.order();
  if (k > n) return std::nullopt;
  std::vector<int> phi(k, -1);
  std::vector<char> used(n, 0);
  std::function<bool(int)> place = [&](int i) -> bool {
    if (i == k) return true;
    for (int w = 0; w < n; ++w) {
      if (used[w] || h.has_arc(i, i) != d.has_arc(w, w)) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        ok = h.has_arc(j, i) == d.has_arc(phi[j], w) && h.has_arc(i, j) == d.has_arc(w, phi[j]);
      if (!ok) continue;
      phi[i] = w;
      used[w] = 1;
      if (place(i + 1)) return true;
      used[w] = 0;
    }
    return false;
  };
  if (place(0)) return phi;
  return std::nullopt;
}

}  // namespace unigraph
