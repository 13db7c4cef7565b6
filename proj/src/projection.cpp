#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

#include <Eigen/LU>
#include <Eigen/SVD>

#include "unigraph/membership.hpp"

namespace unigraph {

namespace {

std::optional<ComplexMatrix> svd_polar(const ComplexMatrix& x) {
  Eigen::JacobiSVD<ComplexMatrix> svd(x, Eigen::ComputeFullU | Eigen::ComputeFullV);
  ComplexMatrix u = svd.matrixU() * svd.matrixV().adjoint();
  if (!u.allFinite()) return std::nullopt;
  return u;
}

}  // namespace

std::optional<ComplexMatrix> nearest_unitary(const ComplexMatrix& x) {
  if (x.rows() != x.cols() || x.rows() == 0 || !x.allFinite()) return std::nullopt;
  ComplexMatrix y = x;
  bool scaling = true;
  for (int it = 0; it < 60; ++it) {
    Eigen::FullPivLU<ComplexMatrix> lu(y);
    if (!lu.isInvertible()) return svd_polar(x);
    const ComplexMatrix inv_h = lu.inverse().adjoint();
    double zeta = 1.0;
    if (scaling) {
      zeta = std::sqrt(inv_h.norm() / y.norm());
      if (!std::isfinite(zeta) || zeta <= 0) return svd_polar(x);
    }
    ComplexMatrix next = 0.5 * (zeta * y + inv_h / zeta);
    const double step = (next - y).norm();
    y = std::move(next);
    if (!y.allFinite()) return svd_polar(x);
    if (step < 1e-2) scaling = false;
    if (step <= 1e-14 * std::sqrt(static_cast<double>(y.rows()))) return y;
  }
  return svd_polar(x);
}

namespace {

struct Attempt {
  bool ok = false;
  ComplexMatrix matrix;
};

Attempt run_restart(const Digraph& target, const SolverConfig& cfg, std::uint64_t index) {
  const int n = target.order();
  const Pattern& mask = target.adjacency();
  std::mt19937_64 rng(cfg.seed ^ index);
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix x = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double re = normal(rng), im = normal(rng);
      if (mask(i, j)) x(i, j) = Complex(re, im);
    }

  const double target_norm = std::sqrt(static_cast<double>(n));
  const Eigen::MatrixXd keep = mask.cast<double>();
  double best = std::numeric_limits<double>::infinity();
  int best_at = 0;
  for (int it = 0; it < cfg.max_iter; ++it) {
    auto u = nearest_unitary(x);
    if (!u) return {};
    x = u->cwiseProduct(keep.cast<Complex>());
    const double norm = x.norm();
    if (!(norm > 0)) return {};
    x *= target_norm / norm;

    const double res = unitarity_residual(x);
    if (res <= cfg.tol) {
      double smallest = std::numeric_limits<double>::infinity();
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (mask(i, j)) smallest = std::min(smallest, std::abs(x(i, j)));
      if (smallest >= cfg.min_magnitude) return {true, x};
      return {};
    }
    if (res < 0.5 * best) {
      best = res;
      best_at = it;
    } else if (it - best_at > 1000) {
      return {};
    }
  }
  return {};
}

}  // namespace

std::optional<ComplexMatrix> alternating_projection(const Digraph& target, const SolverConfig& cfg) {
  cfg.validate();
  if ((target.adjacency().rowwise().sum().array() == 0).any()) return std::nullopt;
  if ((target.adjacency().colwise().sum().array() == 0).any()) return std::nullopt;

  const int batch = std::max(1, cfg.threads);
  for (int start = 0; start < cfg.restarts; start += batch) {
    const int count = std::min(batch, cfg.restarts - start);
    std::vector<Attempt> results(count);
    if (count == 1) {
      results[0] = run_restart(target, cfg, static_cast<std::uint64_t>(start));
    } else {
      std::vector<std::thread> workers;
      for (int t = 0; t < count; ++t)
        workers.emplace_back([&, t] { results[t] = run_restart(target, cfg, static_cast<std::uint64_t>(start + t)); });
      for (auto& w : workers) w.join();
    }
    for (auto& r : results)
      if (r.ok) return std::move(r.matrix);
  }
  return std::nullopt;
}

}  // namespace unigraph
