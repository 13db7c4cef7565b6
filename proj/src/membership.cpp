#include "unigraph/membership.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "unigraph/error.hpp"
#include "unigraph/linedigraph.hpp"

namespace unigraph {

const Condition* ConditionReport::find(const std::string& name) const {
  for (const auto& c : conditions)
    if (c.name == name) return &c;
  return nullptr;
}

void SolverConfig::validate() const {
  if (!(tol > 0)) throw InputError("tolerance must be positive");
  if (!(min_magnitude > 0)) throw InputError("minimum magnitude must be positive");
  if (max_iter < 1) throw InputError("max_iter must be at least 1");
  if (restarts < 1) throw InputError("restarts must be at least 1");
  if (threads < 1) throw InputError("threads must be at least 1");
}

// ---------------------------------------------------------------------------
// Necessary conditions

namespace {

bool is_k2_component(const Digraph& d, const VertexSet& comp) {
  if (comp.size() != 2) return false;
  const int u = comp[0], v = comp[1];
  if (!d.has_arc(u, v) || !d.has_arc(v, u)) return false;
  return d.has_arc(u, u) == d.has_arc(v, v);
}

const VertexSet& component_of(const std::vector<VertexSet>& comps, int v) {
  for (const auto& c : comps)
    if (std::binary_search(c.begin(), c.end(), v)) return c;
  throw InternalError("vertex missing from component list");
}

std::vector<int> unmatched_rows(const Matching& m) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(m.row_to_col.size()); ++i)
    if (m.row_to_col[i] < 0) out.push_back(i);
  return out;
}

}  // namespace

ConditionReport necessary_battery(const Digraph& d) {
  ConditionReport rep;
  auto& out = rep.conditions;
  const int n = d.order();

  {
    Condition c{"quadrangular", Status::Pass, {}, "no pair shares exactly one in- or out-neighbour"};
    const auto v = quadrangularity_violations(d);
    if (!v.empty()) {
      c.status = Status::Fail;
      c.witness = {v[0].u, v[0].v, v[0].common};
      c.detail = std::string("vertices ") + std::to_string(v[0].u) + " and " + std::to_string(v[0].v) +
                 " share only " + (v[0].side == Side::In ? "in" : "out") + "-neighbour " +
                 std::to_string(v[0].common);
    }
    out.push_back(std::move(c));
  }

  const StructureReport sr = structure_report(d);
  {
    Condition c{"no_directed_bridges", Status::Pass, {}, "no arc disconnects on its own"};
    if (!sr.directed_bridges.empty()) {
      const Arc a = sr.directed_bridges[0];
      c.status = Status::Fail;
      c.witness = {a.tail, a.head};
      c.detail = "arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) + ") is a directed bridge";
    }
    out.push_back(std::move(c));
  }
  {
    Condition c{"bridges_in_k2_components", Status::Pass, {}, "every bridge lies in a K2 or K2+ component"};
    for (auto [u, v] : sr.bridges)
      if (!is_k2_component(d, component_of(sr.weak_components, u))) {
        c.status = Status::Fail;
        c.witness = {u, v};
        c.detail = "edge {" + std::to_string(u) + "," + std::to_string(v) + "} is a bridge";
        break;
      }
    out.push_back(std::move(c));
  }
  {
    Condition c{"cut_vertices_in_k2_components", Status::Pass, {}, "every cut-vertex lies in a K2 or K2+ component"};
    for (int v : sr.cut_vertices)
      if (!is_k2_component(d, component_of(sr.weak_components, v))) {
        c.status = Status::Fail;
        c.witness = {v};
        c.detail = "vertex " + std::to_string(v) + " is a cut-vertex";
        break;
      }
    out.push_back(std::move(c));
  }

  const Matching m = term_rank(d);
  {
    Condition c{"full_term_rank", Status::Pass, {m.size}, "term rank " + std::to_string(m.size)};
    if (m.size < n) {
      c.status = Status::Fail;
      c.witness = unmatched_rows(m);
      c.detail += " < " + std::to_string(n);
    }
    out.push_back(std::move(c));
  }
  {
    Condition c{"cycle_factor", Status::Pass, m.row_to_col, "permutation P with M(D) o P = P"};
    if (m.size < n) {
      c.status = Status::Fail;
      c.witness = unmatched_rows(m);
      c.detail = "rows without a partner in any cycle factor";
    }
    out.push_back(std::move(c));
  }

  const bool graph = d.is_symmetric();
  const std::string not_graph = "digraph is not symmetric";
  {
    Condition c{"perfect_two_matching", Status::NotApplicable, {}, not_graph};
    if (graph && d.has_loops()) c.detail = "graph has loops";
    if (graph && !d.has_loops()) {
      const auto pm = perfect_two_matching(d);
      c.status = pm ? Status::Pass : Status::Fail;
      c.detail = pm ? "spanning disjoint edges and cycles exist" : "no spanning disjoint edges and cycles";
      if (!pm) c.witness = unmatched_rows(m);
    }
    out.push_back(std::move(c));
  }
  {
    Condition c{"hall_condition", Status::NotApplicable, {}, not_graph};
    if (graph && n > kHallLimit) c.detail = "skipped above " + std::to_string(kHallLimit) + " vertices";
    if (graph && n <= kHallLimit) {
      const auto v = hall_violations(d);
      c.status = v.empty() ? Status::Pass : Status::Fail;
      c.detail = v.empty() ? "|S| <= |N(S)| for every S" : "|S| > |N(S)|";
      if (!v.empty()) c.witness = v[0];
    }
    out.push_back(std::move(c));
  }
  {
    Condition c{"two_connected", Status::NotApplicable, {}, not_graph};
    if (graph && (n < 3 || sr.weak_components.size() != 1)) c.detail = "needs a connected graph on >= 3 vertices";
    if (graph && n >= 3 && sr.weak_components.size() == 1) {
      const auto k = connectivity_numbers(d);
      c.witness = {k.vertex, k.edge};
      c.status = (k.vertex >= 2 && k.edge >= 2) ? Status::Pass : Status::Fail;
      c.detail = "vertex connectivity " + std::to_string(k.vertex) + ", edge connectivity " + std::to_string(k.edge);
    }
    out.push_back(std::move(c));
  }
  {
    Condition c{"bipartite_perfect_matching", Status::NotApplicable, {}, not_graph};
    if (graph) {
      const auto side = bipartition(d);
      if (!side) {
        c.detail = "graph is not bipartite";
      } else {
        const auto match = bipartite_matching(d, *side);
        const bool perfect = 2 * static_cast<int>(match.size()) == n;
        c.status = perfect ? Status::Pass : Status::Fail;
        c.detail = "maximum matching covers " + std::to_string(2 * match.size()) + " of " + std::to_string(n);
        std::vector<char> covered(n, 0);
        for (auto [a, b] : match) covered[a] = covered[b] = 1;
        for (int v = 0; v < n; ++v)
          if (perfect ? covered[v] : !covered[v]) c.witness.push_back(v);
      }
    }
    out.push_back(std::move(c));
  }

  rep.overall = std::any_of(out.begin(), out.end(), [](const Condition& c) { return c.status == Status::Fail; })
                    ? Verdict::Excluded
                    : Verdict::Undecided;
  return rep;
}

// ---------------------------------------------------------------------------
// Constructions

bool verify_certificate(const Digraph& d, const ComplexMatrix& m, double tol, double min_magnitude) {
  if (m.rows() != d.order() || m.cols() != d.order()) return false;
  if (!m.allFinite()) return false;
  if (!(unitarity_residual(m) <= tol)) return false;
  return support(m, min_magnitude) == d && support(m, 0.0) == d;
}

ComplexMatrix block_dft_unitary(const Digraph& d) {
  if (!has_square_full_blocks(d)) throw InputError("digraph has no square full-block structure");
  const int n = d.order();
  ComplexMatrix u = ComplexMatrix::Zero(n, n);
  for (const Block& b : independent_full_submatrices(d).blocks) {
    const int side = static_cast<int>(b.rows.size());
    const ComplexMatrix f = dft(side);
    for (int r = 0; r < side; ++r)
      for (int c = 0; c < side; ++c) u(b.rows[r], b.cols[c]) = f(r, c);
  }
  return u;
}

namespace {

// U transported along phi: (phi[i], phi[j]) carries u(i, j).
ComplexMatrix transport(const ComplexMatrix& u, const std::vector<int>& phi) {
  ComplexMatrix out(u.rows(), u.cols());
  for (Eigen::Index i = 0; i < u.rows(); ++i)
    for (Eigen::Index j = 0; j < u.cols(); ++j) out(phi[i], phi[j]) = u(i, j);
  return out;
}

ComplexMatrix claw_counterexample_unitary() {
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::Matrix3cd v;
  v << r, -r, 0,
      0.5, 0.5, r,
      0.5, 0.5, -r;
  ComplexMatrix u = ComplexMatrix::Zero(6, 6);
  u.topRightCorner(3, 3) = v;
  u.bottomLeftCorner(3, 3) = v.adjoint();
  return u;
}

std::optional<Certificate> registered_construction(const Digraph& d) {
  const int n = d.order();
  if (n == 2 && d.is_symmetric() && d.has_arc(0, 1)) {
    const bool loops = d.has_arc(0, 0), both = loops && d.has_arc(1, 1);
    if (!loops && !d.has_arc(1, 1)) {
      ComplexMatrix u(2, 2);
      u << 0, 1, 1, 0;
      return Certificate{CertificateKind::Explicit, u, 0.0, false, "K2 swap"};
    }
    if (both) return Certificate{CertificateKind::Explicit, dft(2), 0.0, false, "K2+ Hadamard"};
  }

  const int k = std::countr_zero(static_cast<unsigned>(n));
  if (n >= 4 && n <= 64 && (n & (n - 1)) == 0 && d.is_symmetric()) {
    const bool loops = d.has_loops();
    if (auto deg = d.regular_degree(); deg && *deg == k + (loops ? 1 : 0)) {
      if (auto phi = find_isomorphism(hypercube_graph(k, loops), d)) {
        const IntMatrix w = hypercube_weighing(k, loops);
        const double weight = loops ? k + 1 : k;
        const ComplexMatrix u = to_complex(w) / std::sqrt(weight);
        return Certificate{CertificateKind::Weighing, transport(u, *phi), 0.0, false,
                           "hypercube weighing k=" + std::to_string(k) + (loops ? " with loops" : "")};
      }
    }
  }

  if (n == 6 && d.arc_count() == claw_counterexample().arc_count()) {
    if (auto phi = find_isomorphism(claw_counterexample(), d))
      return Certificate{CertificateKind::Explicit, transport(claw_counterexample_unitary(), *phi), 0.0, false,
                         "bipartite embedding [[0,V],[V^H,0]]"};
  }
  return std::nullopt;
}

void seal(Certificate& c, const Digraph& d, const SolverConfig& cfg) {
  c.residual = unitarity_residual(c.matrix);
  c.support_match = verify_certificate(d, c.matrix, cfg.tol, cfg.min_magnitude);
}

}  // namespace

CertifyResult certify(const Digraph& d, const SolverConfig& cfg) {
  cfg.validate();
  CertifyResult result;
  result.report = necessary_battery(d);
  if (result.report.overall == Verdict::Excluded) {
    result.outcome = Outcome::Excluded;
    for (const auto& c : result.report.conditions)
      if (c.status == Status::Fail) {
        result.reason = c.name;
        break;
      }
    return result;
  }

  std::optional<Certificate> cert;
  if (has_square_full_blocks(d)) {
    cert = Certificate{CertificateKind::LineDigraphDft, block_dft_unitary(d), 0.0, false, "block DFT on full submatrices"};
  } else {
    cert = registered_construction(d);
  }
  if (cert) {
    seal(*cert, d, cfg);
    if (!cert->support_match)
      throw InternalError("construction '" + cert->construction + "' failed verification, residual " +
                          std::to_string(cert->residual));
  } else if (auto m = alternating_projection(d, cfg)) {
    cert = Certificate{CertificateKind::Numerical, std::move(*m), 0.0, false, "alternating projections"};
    seal(*cert, d, cfg);
    if (!cert->support_match) cert.reset();
  }

  if (cert) {
    result.outcome = Outcome::Certified;
    result.reason = cert->construction;
    result.certificate = std::move(cert);
  } else {
    result.outcome = Outcome::Undecided;
    result.reason = "no construction applies and the numerical search found no realisation";
  }
  return result;
}

const char* to_string(Verdict v) { return v == Verdict::Excluded ? "excluded" : "undecided"; }

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Certified: return "certified";
    case Outcome::Excluded: return "excluded";
    case Outcome::Undecided: return "undecided";
  }
  return "?";
}

const char* to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::Explicit: return "explicit";
    case CertificateKind::LineDigraphDft: return "line-digraph-dft";
    case CertificateKind::Weighing: return "weighing";
    case CertificateKind::Numerical: return "numerical";
  }
  return "?";
}

}  // namespace unigraph
