#include "unigraph/linedigraph.hpp"

#include <string>

#include "unigraph/error.hpp"

namespace unigraph {

Multidigraph::Multidigraph(Eigen::MatrixXi multiplicity) : mult_(std::move(multiplicity)) {
  if (mult_.rows() < 1 || mult_.rows() != mult_.cols())
    throw InputError("multiplicity matrix must be non-empty and square");
  if ((mult_.array() < 0).any()) throw InputError("arc multiplicities must be nonnegative");
}

LineDigraph line_digraph(const Multidigraph& base) {
  const int n = base.order();
  if (base.arc_count() == 0) throw InputError("line digraph of an arcless multidigraph");
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int c = 0; c < base.multiplicity(i, j); ++c) arcs.push_back({i, j});
  const int m = static_cast<int>(arcs.size());
  Pattern adj = Pattern::Zero(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) adj(a, b) = arcs[a].head == arcs[b].tail ? 1 : 0;
  return {Digraph(std::move(adj)), std::move(arcs)};
}

namespace {

// Gram matrix g of the rows of a: rows i, j identical iff g(i,j) = g(i,i) = g(j,j);
// orthogonal iff g(i,j) = 0.
std::optional<std::pair<int, int>> first_bad_pair(const Pattern& a) {
  const Pattern g = a * a.transpose();
  for (int i = 0; i < g.rows(); ++i)
    for (int j = i + 1; j < g.rows(); ++j) {
      const int dot = g(i, j);
      if (dot == 0) continue;
      if (dot == g(i, i) && dot == g(j, j)) continue;
      return std::pair{i, j};
    }
  return std::nullopt;
}

// Blocks from row classes; the caller has already checked the Richards rule.
std::vector<Block> blocks_of(const Pattern& a) {
  const int n = static_cast<int>(a.rows());
  std::vector<Block> blocks;
  std::vector<char> placed(n, 0);
  for (int i = 0; i < n; ++i) {
    if (placed[i] || a.row(i).sum() == 0) continue;
    Block b;
    for (int j = i; j < n; ++j)
      if (!placed[j] && a.row(j) == a.row(i)) {
        placed[j] = 1;
        b.rows.push_back(j);
      }
    for (int c = 0; c < n; ++c)
      if (a(i, c)) b.cols.push_back(c);
    blocks.push_back(std::move(b));
  }
  return blocks;
}

}  // namespace

std::optional<RichardsWitness> richards_violation(const Digraph& d) {
  if (auto p = first_bad_pair(d.adjacency())) return RichardsWitness{Axis::Rows, p->first, p->second};
  if (auto p = first_bad_pair(d.adjacency().transpose())) return RichardsWitness{Axis::Columns, p->first, p->second};
  return std::nullopt;
}

Recognition recognize_line_digraph(const Digraph& d) {
  Recognition r;
  if ((r.witness = richards_violation(d))) return r;

  const int n = d.order();
  const auto blocks = blocks_of(d.adjacency());
  std::vector<int> row_block(n, -1), col_block(n, -1);
  for (int b = 0; b < static_cast<int>(blocks.size()); ++b) {
    for (int v : blocks[b].rows) row_block[v] = b;
    for (int v : blocks[b].cols) col_block[v] = b;
  }
  int count = static_cast<int>(blocks.size());
  int sink = -1, source = -1;
  for (int v = 0; v < n; ++v) {
    if (row_block[v] < 0 && sink < 0) sink = count++;
  }
  for (int v = 0; v < n; ++v) {
    if (col_block[v] < 0 && source < 0) source = count++;
  }

  Eigen::MatrixXi mult = Eigen::MatrixXi::Zero(count, count);
  r.arc_of_vertex.resize(n);
  for (int v = 0; v < n; ++v) {
    const Arc a{col_block[v] >= 0 ? col_block[v] : source, row_block[v] >= 0 ? row_block[v] : sink};
    r.arc_of_vertex[v] = a;
    ++mult(a.tail, a.head);
  }
  r.base = Multidigraph(std::move(mult));
  return r;
}

BlockDecomposition independent_full_submatrices(const Digraph& d) {
  if (auto w = richards_violation(d)) {
    const char* what = w->axis == Axis::Rows ? "rows " : "columns ";
    throw InputError(std::string(what) + std::to_string(w->first) + " and " + std::to_string(w->second) +
                     " are neither identical nor orthogonal");
  }
  return {blocks_of(d.adjacency())};
}

bool has_square_full_blocks(const Digraph& d) {
  if (richards_violation(d)) return false;
  const Pattern& a = d.adjacency();
  if ((a.rowwise().sum().array() == 0).any() || (a.colwise().sum().array() == 0).any()) return false;
  for (const Block& b : blocks_of(a))
    if (b.rows.size() != b.cols.size()) return false;
  return true;
}

}  // namespace unigraph
