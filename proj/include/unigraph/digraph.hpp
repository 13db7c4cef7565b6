#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace unigraph {

/// Dense 0/1 pattern. Row i marks the out-neighbours of vertex i.
using Pattern = Eigen::MatrixXi;

/// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<int>;

struct Arc {
  int tail;
  int head;
  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Finite digraph on vertices 0..n-1 stored as its adjacency matrix.
/// Loops are allowed; parallel arcs are not (see Multidigraph).
class Digraph {
 public:
  explicit Digraph(int n);
  explicit Digraph(Pattern adjacency);

  static Digraph from_rows(std::initializer_list<std::initializer_list<int>> rows);
  static Digraph from_arcs(int n, const std::vector<Arc>& arcs);
  /// Adds both arcs of every listed pair.
  static Digraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const noexcept { return static_cast<int>(adj_.rows()); }
  const Pattern& adjacency() const noexcept { return adj_; }

  bool has_arc(int tail, int head) const { return adj_(tail, head) != 0; }
  void set_arc(int tail, int head, bool present = true);

  int out_degree(int v) const { return adj_.row(v).sum(); }
  int in_degree(int v) const { return adj_.col(v).sum(); }
  int arc_count() const { return adj_.sum(); }
  std::vector<int> out_neighbors(int v) const;
  std::vector<int> in_neighbors(int v) const;
  std::vector<Arc> arcs() const;

  bool is_symmetric() const { return adj_ == adj_.transpose(); }
  bool has_loops() const { return adj_.diagonal().any(); }
  /// Every vertex has in- and out-degree d; returns d.
  std::optional<int> regular_degree() const;

  Digraph induced(const std::vector<int>& vertices) const;
  Digraph without_arc(int tail, int head) const;
  Digraph without_vertex(int v) const;
  /// Relabels vertex v as perm[v].
  Digraph relabeled(const std::vector<int>& perm) const;

  friend bool operator==(const Digraph& a, const Digraph& b) { return a.adj_ == b.adj_; }

 private:
  Pattern adj_;
};

// Named families used throughout tests, fixtures, and the survey.
Digraph directed_cycle(int n);
Digraph directed_path(int n);
Digraph cycle_graph(int n);
Digraph path_graph(int n);
Digraph complete_graph(int n);
Digraph star_graph(int leaves);
Digraph hypercube_graph(int k, bool loops = false);
/// K_{1,3} with the centre at vertex 0.
Digraph claw();
/// Pendant vertex attached to a triangle.
Digraph lambda_graph();
/// Bipartite 6-vertex graph that supports a unitary, contains an induced
/// claw, and is hamiltonian.
Digraph claw_counterexample();

enum class Direction { In, Out, Both };

VertexSet neighborhood(const Digraph& d, const VertexSet& s, Direction dir);

struct StructureReport {
  std::vector<VertexSet> weak_components;
  std::vector<VertexSet> strong_components;
  std::vector<Arc> directed_bridges;
  /// Edges {u, v} with u < v and both arcs present.
  std::vector<std::pair<int, int>> bridges;
  VertexSet cut_vertices;
  bool is_symmetric = false;
};

int weak_component_count(const Digraph& d);
std::vector<VertexSet> weak_components(const Digraph& d);
std::vector<VertexSet> strong_components(const Digraph& d);
bool is_strongly_connected(const Digraph& d);
StructureReport structure_report(const Digraph& d);

enum class Side { In, Out };

struct QuadViolation {
  int u;
  int v;
  Side side;
  int common;  ///< the single common neighbour
};

std::vector<QuadViolation> quadrangularity_violations(const Digraph& d);

/// Longest shortest dipath; nullopt when some ordered pair is unreachable.
std::optional<int> diameter(const Digraph& d);

struct Matching {
  int size = 0;
  /// row_to_col[i] = j when (i, j) is matched, -1 otherwise.
  std::vector<int> row_to_col;
};

Matching term_rank(const Digraph& d);

/// perm[i] = j with arc (i, j); every vertex appears once as a head.
std::optional<std::vector<int>> cycle_factor(const Digraph& d);
std::vector<std::vector<int>> cycle_decomposition(const std::vector<int>& perm);

/// Spanning subgraph of disjoint edges and cycles. Requires a loop-free graph.
std::optional<Digraph> perfect_two_matching(const Digraph& d);

inline constexpr int kHallLimit = 16;
/// Inclusion-minimal S with |S| > |N(S)|. Requires a graph.
std::vector<VertexSet> hall_violations(const Digraph& d, int max_n = kHallLimit);
bool violates_hall(const Digraph& d, const VertexSet& s);

struct Connectivity {
  int vertex = 0;
  int edge = 0;
  /// Two internally disjoint paths for the requested pair, when they exist.
  std::optional<std::array<std::vector<int>, 2>> independent_paths;
};

Connectivity connectivity_numbers(const Digraph& d,
                                  std::optional<std::pair<int, int>> pair = std::nullopt);

/// 2-colouring of a loop-free graph, or nullopt when an odd cycle exists.
std::optional<std::vector<int>> bipartition(const Digraph& d);
/// Maximum matching of a bipartite graph as a list of edges.
std::vector<std::pair<int, int>> bipartite_matching(const Digraph& d, const std::vector<int>& side);

inline constexpr int kHamiltonLimit = 12;
/// Vertex sequence of a spanning dicycle starting at 0; the closing arc is implied.
std::optional<std::vector<int>> hamiltonian_cycle(const Digraph& d, int limit_n = kHamiltonLimit);

inline constexpr int kAutomorphismLimit = 10;

struct AutomorphismGroup {
  /// Each element maps vertex v to perm[v].
  std::vector<std::vector<int>> elements;
  bool vertex_transitive = false;
  bool arc_transitive = false;
};

AutomorphismGroup automorphism_group(const Digraph& d, int limit_n = kAutomorphismLimit);

/// A bijection phi with a -> b arc iff phi[a] -> phi[b] arc in `to`.
std::optional<std::vector<int>> find_isomorphism(const Digraph& from, const Digraph& to,
                                                 int limit_n = 64);

/// Injective map from H's vertices into D realising H as an induced subdigraph.
std::optional<std::vector<int>> induced_subgraph_search(const Digraph& d, const Digraph& h);

}  // namespace unigraph
