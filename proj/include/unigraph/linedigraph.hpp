#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "unigraph/digraph.hpp"

namespace unigraph {

/// Arc multiplicities; entry (i, j) counts parallel arcs i -> j.
class Multidigraph {
 public:
  explicit Multidigraph(Eigen::MatrixXi multiplicity);
  explicit Multidigraph(const Digraph& d) : Multidigraph(d.adjacency()) {}

  int order() const noexcept { return static_cast<int>(mult_.rows()); }
  int multiplicity(int tail, int head) const { return mult_(tail, head); }
  int arc_count() const { return mult_.sum(); }
  const Eigen::MatrixXi& multiplicities() const noexcept { return mult_; }

  friend bool operator==(const Multidigraph& a, const Multidigraph& b) { return a.mult_ == b.mult_; }

 private:
  Eigen::MatrixXi mult_;
};

struct LineDigraph {
  Digraph digraph;
  /// Base arc (tail, head) carried by each line-digraph vertex.
  std::vector<Arc> arc_of_vertex;
};

/// Vertices are the base arcs in row-major order, copies kept adjacent;
/// arc a -> b iff head(a) == tail(b).
LineDigraph line_digraph(const Multidigraph& base);

enum class Axis { Rows, Columns };

/// Two rows (or columns) of M(D) that are neither identical nor orthogonal.
struct RichardsWitness {
  Axis axis;
  int first;
  int second;
};

struct Recognition {
  std::optional<Multidigraph> base;
  /// For accepted input: the base arc realised by each vertex of D.
  std::vector<Arc> arc_of_vertex;
  std::optional<RichardsWitness> witness;

  bool accepted() const noexcept { return base.has_value(); }
};

/// First pair violating the identical-or-orthogonal rule, rows checked before columns.
std::optional<RichardsWitness> richards_violation(const Digraph& d);

/// Recovers a base multidigraph when rows and columns are pairwise identical
/// or orthogonal. Base vertices are the independent full blocks ordered by
/// their smallest row index, then one shared sink (for zero rows) and one
/// shared source (for zero columns) when needed.
Recognition recognize_line_digraph(const Digraph& d);

struct Block {
  std::vector<int> rows;
  std::vector<int> cols;
};

struct BlockDecomposition {
  std::vector<Block> blocks;
};

/// Maximal all-ones blocks covering every nonzero entry. Throws InputError
/// naming the offending pair when the identical-or-orthogonal rule fails.
BlockDecomposition independent_full_submatrices(const Digraph& d);

/// Richards rule holds, no zero rows or columns, and every block is square.
/// This is the shape that a block-diagonal DFT assembly turns into a unitary.
bool has_square_full_blocks(const Digraph& d);

}  // namespace unigraph
