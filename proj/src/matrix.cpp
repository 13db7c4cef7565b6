#include "unigraph/matrix.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "unigraph/error.hpp"

namespace unigraph {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<char> hit(image_.size(), 0);
  for (int x : image_) {
    if (x < 0 || x >= size() || hit[x]) throw InputError("not a bijection");
    hit[x] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> id(n);
  for (int i = 0; i < n; ++i) id[i] = i;
  return Permutation(std::move(id));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (int i = 0; i < size(); ++i) inv[image_[i]] = i;
  return Permutation(std::move(inv));
}

IntMatrix Permutation::matrix() const {
  IntMatrix m = IntMatrix::Zero(size(), size());
  for (int i = 0; i < size(); ++i) m(i, image_[i]) = 1;
  return m;
}

ComplexMatrix dft(int n) {
  if (n < 1) throw InputError("DFT size must be positive");
  ComplexMatrix f(n, n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      // Reduce the exponent first so large n keeps full accuracy.
      const double angle = 2.0 * std::numbers::pi * static_cast<double>((j * k) % n) / n;
      f(j, k) = std::polar(scale, angle);
    }
  return f;
}

std::optional<int> weighing_weight(const IntMatrix& w) {
  if (w.rows() != w.cols()) throw InputError("weighing matrix must be square");
  if ((w.array().abs() > 1).any()) throw InputError("weighing matrix entries must lie in {-1,0,1}");
  const IntMatrix g = w * w.transpose();
  const int k = g(0, 0);
  if (g != k * IntMatrix::Identity(w.rows(), w.cols())) return std::nullopt;
  return k;
}

IntMatrix weighing_q2() {
  IntMatrix w(4, 4);
  w << 0, -1, 1, 0,
      -1, 0, 0, 1,
      1, 0, 0, 1,
      0, 1, 1, 0;
  return w;
}

IntMatrix weighing_q2_looped() {
  IntMatrix w(4, 4);
  w << 1, 1, -1, 0,
      1, -1, 0, 1,
      -1, 0, -1, 1,
      0, 1, 1, 1;
  return w;
}

IntMatrix hypercube_weighing(int k, bool loops, int capacity) {
  if (k < 2) throw InputError("hypercube weighing needs k >= 2, got " + std::to_string(k));
  if (k >= 31 || (1 << k) > capacity)
    throw CapacityError("hypercube weighing of size 2^" + std::to_string(k) + " exceeds capacity " +
                        std::to_string(capacity));
  IntMatrix w = loops ? weighing_q2_looped() : weighing_q2();
  for (int level = 3; level <= k; ++level) {
    const Eigen::Index h = w.rows();
    IntMatrix next(2 * h, 2 * h);
    next.topLeftCorner(h, h) = w;
    next.topRightCorner(h, h) = -IntMatrix::Identity(h, h);
    next.bottomLeftCorner(h, h) = IntMatrix::Identity(h, h);
    next.bottomRightCorner(h, h) = w.transpose();
    w = std::move(next);
  }
  return w;
}

ComplexMatrix block_double(const ComplexMatrix& a, double tol) {
  if (a.rows() != a.cols()) throw InputError("block_double needs a square matrix");
  const double r = unitarity_residual(a);
  if (!(r <= tol)) throw InputError("block_double input is not unitary, residual " + std::to_string(r));
  const Eigen::Index n = a.rows();
  ComplexMatrix out(2 * n, 2 * n);
  out.topLeftCorner(n, n) = a;
  out.topRightCorner(n, n) = -ComplexMatrix::Identity(n, n);
  out.bottomLeftCorner(n, n) = ComplexMatrix::Identity(n, n);
  out.bottomRightCorner(n, n) = a.adjoint();
  return out / std::sqrt(2.0);
}

namespace {

// For P_ij = P_hk = 1 the premise Q_ik = 1 pins h = p^-1(q(i)).
bool implies(const Permutation& p, const Permutation& q) {
  const Permutation pinv = p.inverse();
  for (int i = 0; i < p.size(); ++i) {
    const int h = pinv(q(i));
    if (q(h) != p(i)) return false;
  }
  return true;
}

}  // namespace

bool complementary(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw InputError("permutations differ in size");
  return implies(p, q) && implies(q, p);
}

std::optional<std::pair<int, int>> pairwise_complementary(const std::vector<Permutation>& perms) {
  for (std::size_t a = 0; a < perms.size(); ++a)
    for (std::size_t b = a + 1; b < perms.size(); ++b)
      if (!complementary(perms[a], perms[b])) return std::pair<int, int>(a, b);
  return std::nullopt;
}

std::vector<Complex> circulant_spectrum(int n, const std::vector<int>& residues) {
  if (n < 1) throw InputError("circulant order must be positive");
  if (residues.empty()) throw InputError("circulant connection set is empty");
  for (int s : residues)
    if (s < 0 || s >= n) throw InputError("residue " + std::to_string(s) + " outside 0.." + std::to_string(n - 1));
  std::vector<Complex> out(n);
  for (int j = 0; j < n; ++j) {
    Complex sum = 0;
    for (int s : residues)
      sum += std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>((static_cast<long long>(j) * s) % n) / n);
    out[j] = sum;
  }
  return out;
}

}  // namespace unigraph
