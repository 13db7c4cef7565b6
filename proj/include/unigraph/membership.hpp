#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unigraph/digraph.hpp"
#include "unigraph/groups.hpp"
#include "unigraph/matrix.hpp"

namespace unigraph {

enum class Verdict { Excluded, Undecided };

struct ConditionReport {
  std::vector<Condition> conditions;
  Verdict overall = Verdict::Undecided;

  const Condition* find(const std::string& name) const;
};

/// Necessary conditions for D to be the digraph of a unitary matrix,
/// evaluated in a fixed order. Conditions 7-10 apply to graphs only.
ConditionReport necessary_battery(const Digraph& d);

enum class CertificateKind { Explicit, LineDigraphDft, Weighing, Numerical };

struct Certificate {
  CertificateKind kind = CertificateKind::Numerical;
  ComplexMatrix matrix;
  double residual = 0.0;
  bool support_match = false;
  /// Which construction produced the matrix, e.g. "hypercube k=3".
  std::string construction;
};

struct SolverConfig {
  double tol = kUnitaryTolerance;
  double min_magnitude = 1e-6;
  int max_iter = 10000;
  int restarts = 50;
  std::uint64_t seed = 0;
  /// Worker threads for restarts; the result never depends on this.
  int threads = 1;

  void validate() const;
};

enum class Outcome { Certified, Excluded, Undecided };

struct CertifyResult {
  Outcome outcome = Outcome::Undecided;
  ConditionReport report;
  std::optional<Certificate> certificate;
  std::string reason;
};

/// Battery, then block DFT for line digraphs with square blocks, then the
/// registered constructions, then alternating projections. Any constructed
/// matrix that fails verification raises InternalError.
CertifyResult certify(const Digraph& d, const SolverConfig& cfg = {});

/// True when residual <= tol and support(m, min_magnitude) equals D.
bool verify_certificate(const Digraph& d, const ComplexMatrix& m, double tol, double min_magnitude);

/// Unitary carrying the block DFT on every independent full submatrix.
/// Requires has_square_full_blocks(d).
ComplexMatrix block_dft_unitary(const Digraph& d);

/// Nearest unitary matrix (polar factor): scaled Newton iteration with an
/// SVD fallback. Returns nullopt when neither produces a finite result.
std::optional<ComplexMatrix> nearest_unitary(const ComplexMatrix& x);

/// Alternates nearest-unitary projection with zeroing of forbidden entries.
/// Restart r is seeded with seed ^ r; the lowest successful restart wins.
std::optional<ComplexMatrix> alternating_projection(const Digraph& target, const SolverConfig& cfg = {});

enum class SpernerMode { Uniform, Optimize };

struct SpernerResult {
  double value = 0.0;
  std::vector<double> distribution;
  /// Optimize mode returns a best-found lower bound, not a proven maximum.
  bool heuristic = false;
};

inline constexpr int kSpernerOptimizeLimit = 10;

/// Edge entropy (a+b) h(a/(a+b)) with h the binary entropy in bits.
double edge_entropy(double a, double b);

/// max over distributions of the minimum edge entropy over the edges of a graph.
SpernerResult sperner_capacity(const Digraph& d, SpernerMode mode, std::uint64_t seed = 0);

struct SurveyEntry {
  Digraph graph;
  Verdict battery = Verdict::Undecided;
  Outcome outcome = Outcome::Undecided;
  std::optional<CertificateKind> certificate;
  bool hamiltonian = false;
};

struct SurveyResult {
  std::vector<SurveyEntry> entries;
  int excluded = 0;
  int certified = 0;
  int undecided = 0;
  int hamiltonian = 0;
  /// Certified graphs without a hamiltonian cycle.
  std::vector<Digraph> counterexample_candidates;
};

/// Every connected loop-free graph on 2..max_n vertices up to isomorphism.
std::vector<Digraph> connected_graphs(int n);

/// Battery, certification and hamiltonicity for every connected graph with
/// at most max_n vertices. n = 2 counts K2 as hamiltonian through its 2-cycle.
SurveyResult conjecture_survey(int max_n, const SolverConfig& cfg = {});

const char* to_string(Verdict v);
const char* to_string(Outcome o);
const char* to_string(CertificateKind k);

}  // namespace unigraph
