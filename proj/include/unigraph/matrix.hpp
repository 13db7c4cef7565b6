#pragma once

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "unigraph/digraph.hpp"

namespace unigraph {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using IntMatrix = Eigen::MatrixXi;

inline constexpr double kSupportTolerance = 1e-9;
inline constexpr double kUnitaryTolerance = 1e-8;

/// Permutation matrix with a 1 at (i, image[i]).
class Permutation {
 public:
  explicit Permutation(std::vector<int> image);
  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[i]; }
  const std::vector<int>& image() const noexcept { return image_; }
  Permutation inverse() const;
  IntMatrix matrix() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

/// Digraph of M: arc (i, j) iff |M(i, j)| > tol.
template <typename Derived>
Digraph support(const Eigen::MatrixBase<Derived>& m, double tol = kSupportTolerance) {
  Pattern p = (m.array().abs().template cast<double>() > tol).template cast<int>();
  return Digraph(std::move(p));
}

/// max |(M^H M - I)_ij| and |(M M^H - I)_ij| over all entries.
template <typename Derived>
double unitarity_residual(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  using Plain = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Plain id = Plain::Identity(m.rows(), m.cols());
  const double left = (m.adjoint() * m - id).cwiseAbs().maxCoeff();
  const double right = (m * m.adjoint() - id).cwiseAbs().maxCoeff();
  return std::max(left, right);
}

/// Unitary Fourier matrix, entries w^(jk)/sqrt(n) with w = exp(2 pi i/n).
ComplexMatrix dft(int n);

/// k with W W^T = k I exactly, if any. Entries must lie in {-1, 0, 1}.
std::optional<int> weighing_weight(const IntMatrix& w);

/// The 4x4 W(2,4) supported by Q2.
IntMatrix weighing_q2();
/// The 4x4 weight-3 matrix supported by Q2 with a loop at every vertex.
IntMatrix weighing_q2_looped();

inline constexpr int kHypercubeCapacity = 4096;

/// Weighing matrix supported by Q_k (loops: Q_k plus identity) built from the
/// 4x4 base by W <- [[W, -I], [I, W^T]].
IntMatrix hypercube_weighing(int k, bool loops, int capacity = kHypercubeCapacity);

/// (1/sqrt 2) [[A, -I], [I, A^H]]; for real A the corner is A^T.
ComplexMatrix block_double(const ComplexMatrix& a, double tol = kUnitaryTolerance);

/// P_ij = P_hk = Q_ik = 1 implies Q_hj = 1, and the same with P, Q swapped.
bool complementary(const Permutation& p, const Permutation& q);

/// First non-complementary pair (by index), or nullopt if all pairs pass.
std::optional<std::pair<int, int>> pairwise_complementary(const std::vector<Permutation>& perms);

/// Eigenvalues sum_{s in S} w^(js), j = 0..n-1, of the circulant pattern of X(Z_n; S).
std::vector<Complex> circulant_spectrum(int n, const std::vector<int>& residues);

/// Same pattern entries; scaled copy for convenience.
template <typename Derived>
ComplexMatrix to_complex(const Eigen::MatrixBase<Derived>& m) {
  return m.template cast<double>().template cast<Complex>();
}

}  // namespace unigraph
