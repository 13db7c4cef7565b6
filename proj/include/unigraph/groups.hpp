#pragma once

#include <optional>
#include <string>
#include <vector>

#include "unigraph/digraph.hpp"
#include "unigraph/matrix.hpp"

namespace unigraph {

enum class GroupSource { Cyclic, Product, Dihedral, Symmetric, Table };

/// Finite group on element indices 0..order-1 with a full multiplication table.
class FiniteGroup {
 public:
  static FiniteGroup cyclic(int n);
  /// Z_{m1} x Z_{m2} x ...; element index is mixed radix, first factor most significant.
  static FiniteGroup product(const std::vector<int>& moduli);
  /// Order 2n; index a + n*b stands for r^a s^b.
  static FiniteGroup dihedral(int n);
  /// Permutations of {1..n} in lexicographic one-line order; (fg)(x) = f(g(x)).
  static FiniteGroup symmetric(int n);
  /// Validates closure, identity, inverses and associativity.
  static FiniteGroup from_table(std::vector<std::vector<int>> table);

  int order() const noexcept { return order_; }
  int identity() const noexcept { return identity_; }
  GroupSource source() const noexcept { return source_; }
  /// Factor moduli for cyclic and product groups, {n} for dihedral and symmetric.
  const std::vector<int>& parameters() const noexcept { return params_; }

  int mul(int a, int b) const {
    return table_.empty() ? compose(a, b) : table_[static_cast<std::size_t>(a) * order_ + b];
  }
  int inverse(int a) const { return inverse_[a]; }
  int power(int a, int k) const;
  int element_order(int a) const;
  bool is_abelian() const;

  /// Subgroup generated by the given elements, sorted.
  std::vector<int> generated(const std::vector<int>& elements) const;

  std::string name(int a) const;
  /// Accepts the notation produced by name(), "#k" for a raw index, and for
  /// S_n any product of 1-based cycles such as "(1 2)(3 4)".
  int parse_element(const std::string& text) const;

  /// Components of a product element (cyclic and product groups only).
  std::vector<int> components(int a) const;
  /// One-line image of a symmetric-group element, 0-based.
  const std::vector<int>& permutation(int a) const { return perms_.at(a); }

 private:
  FiniteGroup() = default;
  void finish();
  int compose(int a, int b) const;

  int order_ = 0;
  int identity_ = 0;
  GroupSource source_ = GroupSource::Table;
  std::vector<int> params_;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<std::vector<int>> perms_;
};

inline constexpr int kSymmetricDegreeCap = 7;

/// "Z:n", "Z2^k", "D:n", "S:n", "prod:Z:a,Z:b,...", or "table:<path>" with a
/// JSON {"order": n, "table": [[...]]} file.
FiniteGroup build_group(const std::string& spec);

/// Elements of S in the order given. Identity only allowed when loops are wanted.
struct GenSet {
  std::vector<int> elements;
};

GenSet make_genset(const FiniteGroup& g, std::vector<int> elements, bool allow_identity = false);
GenSet parse_genset(const FiniteGroup& g, const std::string& list, bool allow_identity = false);

/// Arcs (g, s g) for every g in G and s in S.
Digraph cayley_digraph(const FiniteGroup& g, const GenSet& s);

/// g -> s g as a permutation of element indices.
Permutation regular_representation(const FiniteGroup& g, int s);

/// T = s1 <s1^-1 s2>, a left coset of a cyclic subgroup containing {s1, s2}.
GenSet theorem1_generating_set(const FiniteGroup& g, int s1, int s2);

struct LineWitness {
  int x;                     ///< x in S^-1
  std::vector<int> subgroup; ///< x S, sorted
};

/// Searches x in S^-1 such that x S is a subgroup of order |S|.
std::optional<LineWitness> mansilla_serra_check(const FiniteGroup& g, const GenSet& s);

enum class Status { Pass, Fail, NotApplicable };

struct Condition {
  std::string name;
  Status status = Status::NotApplicable;
  /// Vertices, elements, or index pairs that witness the outcome.
  std::vector<int> witness;
  std::string detail;
};

using ConditionList = std::vector<Condition>;

/// Necessary conditions for X(G;S) to sit in a convex hull of complementary
/// permutations inside the unistochastic set.
ConditionList unistochastic_group_conditions(const FiniteGroup& g, const GenSet& s);

/// P(n, k): arrangements of k symbols from {1..n}, arcs shift left and append
/// a fresh symbol. Fixture for X(S_n; {(1..n), (1..n-1)}) as a line digraph.
Digraph arrangement_digraph(int n, int k);

const char* to_string(Status s);

}  // namespace unigraph
