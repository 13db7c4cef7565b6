#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "unigraph/error.hpp"
#include "unigraph/membership.hpp"

namespace unigraph {

double edge_entropy(double a, double b) {
  const double s = a + b;
  if (!(s > 0)) return 0.0;
  auto term = [s](double x) { return x > 0 ? x * std::log2(s / x) : 0.0; };
  return term(a) + term(b);
}

namespace {

std::vector<std::pair<int, int>> edges_of(const Digraph& d) {
  if (!d.is_symmetric()) throw InputError("Sperner capacity needs a symmetric digraph");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < d.order(); ++i)
    for (int j = i + 1; j < d.order(); ++j)
      if (d.has_arc(i, j)) e.emplace_back(i, j);
  if (e.empty()) throw InputError("Sperner capacity of an edgeless graph");
  return e;
}

double min_entropy(const std::vector<std::pair<int, int>>& edges, const std::vector<double>& mu) {
  double best = std::numeric_limits<double>::infinity();
  for (auto [i, j] : edges) best = std::min(best, edge_entropy(mu[i], mu[j]));
  return best;
}

}  // namespace

SpernerResult sperner_capacity(const Digraph& d, SpernerMode mode, std::uint64_t seed) {
  const auto edges = edges_of(d);
  const int n = d.order();
  SpernerResult r;
  r.distribution.assign(n, 1.0 / n);
  r.value = min_entropy(edges, r.distribution);
  if (mode == SpernerMode::Uniform) return r;

  if (n > kSpernerOptimizeLimit)
    throw CapacityError("optimize mode supports at most " + std::to_string(kSpernerOptimizeLimit) + " vertices");
  r.heuristic = true;

  // Exponentiated-gradient ascent on a softmin of the edge entropies.
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> mu(n);
  double total = 0;
  for (double& x : mu) total += (x = 0.5 + expo(rng));
  for (double& x : mu) x /= total;

  double best = min_entropy(edges, mu);
  std::vector<double> best_mu = mu;
  std::vector<double> grad(n), weight(edges.size());
  const int iterations = 20000;
  for (int it = 0; it < iterations; ++it) {
    const double beta = 20.0 * std::pow(500.0, static_cast<double>(it) / iterations);
    const double eta = 0.05 / (1.0 + it / 2000.0);
    double lo = std::numeric_limits<double>::infinity();
    for (std::size_t e = 0; e < edges.size(); ++e) {
      weight[e] = edge_entropy(mu[edges[e].first], mu[edges[e].second]);
      lo = std::min(lo, weight[e]);
    }
    double z = 0;
    for (double& w : weight) z += (w = std::exp(-beta * (w - lo)));
    std::fill(grad.begin(), grad.end(), 0.0);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const auto [i, j] = edges[e];
      const double s = mu[i] + mu[j], w = weight[e] / z;
      grad[i] += w * std::log2(s / mu[i]);
      grad[j] += w * std::log2(s / mu[j]);
    }
    const double top = *std::max_element(grad.begin(), grad.end());
    total = 0;
    for (int v = 0; v < n; ++v) total += (mu[v] *= std::exp(eta * (grad[v] - top)));
    for (double& x : mu) x = std::max(x / total, 1e-300);

    const double value = min_entropy(edges, mu);
    if (value > best) {
      best = value;
      best_mu = mu;
    }
  }
  r.value = best;
  r.distribution = std::move(best_mu);
  return r;
}

}  // namespace unigraph
