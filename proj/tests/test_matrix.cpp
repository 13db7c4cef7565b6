#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <Eigen/Eigenvalues>

#include "unigraph/error.hpp"
#include "unigraph/matrix.hpp"

using namespace unigraph;

namespace {

// Direct reading of the definition over all index quadruples.
bool complementary_brute(const Permutation& p, const Permutation& q) {
  const IntMatrix P = p.matrix(), Q = q.matrix();
  const int n = p.size();
  auto one_way = [n](const IntMatrix& a, const IntMatrix& b) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int h = 0; h < n; ++h)
          for (int k = 0; k < n; ++k)
            if (a(i, j) && a(h, k) && b(i, k) && !b(h, j)) return false;
    return true;
  };
  return one_way(P, Q) && one_way(Q, P);
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

TEST_CASE("permutation matrices") {
  const Permutation p({2, 0, 1});
  CHECK(p.matrix()(0, 2) == 1);
  CHECK(p.inverse()(2) == 0);
  CHECK((p.matrix() * p.inverse().matrix()).isIdentity());
  CHECK_THROWS_AS(Permutation({0, 0, 1}), InputError);
}

TEST_CASE("support and unitarity residual") {
  ComplexMatrix m(2, 2);
  m << 1, 1e-12, 0, Complex(0, 1);
  CHECK(support(m) == Digraph::from_rows({{1, 0}, {0, 1}}));
  CHECK(support(m, 0.0) == Digraph::from_rows({{1, 1}, {0, 1}}));

  for (int n = 1; n <= 6; ++n) {
    const Eigen::MatrixXd j = Eigen::MatrixXd::Ones(n, n);
    // J^T J = n J, so the largest entry of J^T J - I is n off the diagonal (n - 1 when n = 1).
    const double expected = n == 1 ? 0.0 : static_cast<double>(n);
    CHECK(unitarity_residual(j) == doctest::Approx(expected));
  }
}

TEST_CASE("DFT is unitary with full support") {
  for (int n = 1; n <= 64; ++n) {
    const ComplexMatrix f = dft(n);
    CHECK(unitarity_residual(f) < 1e-12);
    CHECK(support(f, 1e-9).arc_count() == n * n);
  }
  CHECK_THROWS_AS(dft(0), InputError);
}

TEST_CASE("weighing matrices in exact arithmetic") {
  CHECK(weighing_weight(weighing_q2()) == 2);
  CHECK(weighing_weight(weighing_q2_looped()) == 3);
  for (int k = 2; k <= 8; ++k)
    for (bool loops : {false, true}) {
      const IntMatrix w = hypercube_weighing(k, loops);
      const IntMatrix g = w * w.transpose();
      const int weight = loops ? k + 1 : k;
      CHECK(g == weight * IntMatrix::Identity(w.rows(), w.cols()));
      CHECK(support(w, 0.0) == hypercube_graph(k, loops));
    }
  CHECK_THROWS_AS(hypercube_weighing(1, false), InputError);
  CHECK_THROWS_AS(hypercube_weighing(13, false), CapacityError);
  IntMatrix bad = IntMatrix::Identity(2, 2);
  bad(0, 1) = 1;
  CHECK_FALSE(weighing_weight(bad).has_value());
}

TEST_CASE("block doubling keeps unitarity") {
  const ComplexMatrix d = block_double(dft(3));
  CHECK(d.rows() == 6);
  CHECK(unitarity_residual(d) < 1e-12);
  ComplexMatrix c(2, 2);
  c << Complex(0, 1), 0, 0, Complex(0.6, 0.8);
  CHECK(unitarity_residual(block_double(c)) < 1e-12);
  CHECK_THROWS_AS(block_double(ComplexMatrix::Ones(2, 2)), InputError);

  ComplexMatrix one(1, 1);
  one << 1;
  ComplexMatrix expected(2, 2);
  expected << 1, -1, 1, 1;
  CHECK((block_double(one) - expected / std::sqrt(2.0)).cwiseAbs().maxCoeff() < 1e-15);
  CHECK(support(block_double(to_complex(weighing_q2()) / std::sqrt(2.0))) == hypercube_graph(3));

  // Residual growth stays within 4 r + 1e-12 on slightly perturbed unitaries.
  std::mt19937_64 rng(61);
  std::normal_distribution<double> noise(0.0, 1e-10);
  for (int trial = 0; trial < 30; ++trial) {
    ComplexMatrix a = dft(1 + trial % 6);
    for (Eigen::Index i = 0; i < a.size(); ++i) a(i) += Complex(noise(rng), noise(rng));
    CHECK(unitarity_residual(block_double(a)) <= 4 * unitarity_residual(a) + 1e-12);
  }
}

TEST_CASE("complementarity agrees with the quadruple definition") {
  for (int n = 1; n <= 5; ++n) {
    const auto perms = all_permutations(n);
    for (const auto& a : perms)
      for (const auto& b : perms) {
        const Permutation p(a), q(b);
        CHECK(complementary(p, q) == complementary_brute(p, q));
      }
  }
  // Shifts by a and b on Z_n are complementary exactly when 2a = 2b (mod n).
  const Permutation one({1, 2, 3, 0}), three({3, 0, 1, 2}), two({2, 3, 0, 1});
  CHECK_FALSE(pairwise_complementary({one, three}).has_value());
  CHECK(pairwise_complementary({one, three, two}) == std::pair{0, 2});
}

TEST_CASE("circulant spectrum matches a general eigensolver") {
  for (int n = 2; n <= 8; ++n)
    for (std::uint32_t mask = 1; mask < (1u << n); mask += 3) {
      std::vector<int> s;
      for (int r = 0; r < n; ++r)
        if (mask >> r & 1u) s.push_back(r);
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
      for (int g = 0; g < n; ++g)
        for (int r : s) m(g, (g + r) % n) = 1.0;
      Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m);
      std::vector<Complex> oracle(es.eigenvalues().data(), es.eigenvalues().data() + n);
      std::vector<Complex> got = circulant_spectrum(n, s);
      // Greedy matching of the two multisets.
      for (const Complex& z : got) {
        auto it = std::min_element(oracle.begin(), oracle.end(),
                                   [&](const Complex& a, const Complex& b) { return std::abs(a - z) < std::abs(b - z); });
        CHECK(std::abs(*it - z) < 1e-6);
        oracle.erase(it);
      }
    }
  const auto roots = circulant_spectrum(4, {1});
  CHECK(std::abs(roots[1] - Complex(0, 1)) < 1e-12);
}
