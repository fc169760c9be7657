#include "tpcone/generators.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "tpcone/classify.hpp"
#include "tpcone/errors.hpp"

namespace tpcone {

Matrix vandermonde(const std::vector<double>& nodes, double tol) {
  const int n = static_cast<int>(nodes.size());
  if (n < 1) throw InputError("vandermonde needs at least one node");
  double prev = 0.0;
  for (double t : nodes) {
    if (!(t > prev)) throw InputError("vandermonde nodes must be strictly increasing and positive");
    prev = t;
  }
  Matrix v(n, n);
  for (int i = 0; i < n; ++i) {
    double p = 1.0;
    for (int k = 0; k < n; ++k) {
      v(i, k) = p;
      p *= nodes[i];
    }
  }
  if (!classify(v, n, tol).stp)
    throw NumericError("vandermonde matrix failed the strict total positivity check at tolerance");
  return v;
}

Matrix random_stp(int n, std::uint64_t seed, double tol) {
  // Past n = 9 the corner minors of this construction sink below the
  // strictness threshold no matter the spectral spread.
  if (n < 2 || n > 9) throw InputError("random_stp supports 2 <= n <= 9");
  constexpr int kAttempts = 8;
  // log range of the generated spectrum; wider for larger n so the
  // slow-decaying corner entries keep their compounds strictly positive
  const double base_spread = n <= 7 ? 6.0 : (n == 8 ? 10.0 : 16.0);
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const double spread = base_spread + 2.0 * attempt;
    std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(attempt));
    std::uniform_real_distribution<double> off(0.5, 1.5);
    std::uniform_real_distribution<double> diag(0.0, 0.5);

    Eigen::MatrixXd jm = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) jm(i, i) = diag(rng);
    for (int i = 0; i + 1 < n; ++i) {
      const double b = off(rng);
      jm(i, i + 1) = jm(i + 1, i) = b;
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jm);
    if (es.info() != Eigen::Success) continue;
    const Eigen::VectorXd mu = es.eigenvalues();
    const double span = mu(n - 1) - mu(0);
    if (span <= 0.0) continue;
    const double t = spread / span;
    const double center = t * (mu(n - 1) + mu(0)) / 2.0;

    Eigen::VectorXd ex(n);
    for (int i = 0; i < n; ++i) ex(i) = std::exp(t * mu(i) - center);
    const Eigen::MatrixXd m = es.eigenvectors() * ex.asDiagonal() * es.eigenvectors().transpose();

    Matrix out(n, n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) out(i, k) = m(i, k);
    if (classify(out, n, tol).stp) return out;
  }
  throw NumericError("random_stp failed validation after bounded retries");
}

Matrix signature_conjugate(const Matrix& a, const std::vector<int>& signs) {
  if (!a.square()) throw InputError("signature_conjugate requires a square matrix");
  const int n = a.rows();
  if (static_cast<int>(signs.size()) != n)
    throw InputError("signature_conjugate sign tuple length mismatch");
  for (int s : signs)
    if (s != 1 && s != -1) throw InputError("signature_conjugate signs must be +1 or -1");
  Matrix b(n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) b(i, k) = signs[i] * signs[k] * a(i, k);
  return b;
}

Matrix rotation3(double theta) {
  if (!std::isfinite(theta)) throw InputError("rotation3 angle must be finite");
  const double c = std::cos(theta), s = std::sin(theta);
  return Matrix{{c, -s, 0.0}, {s, c, 0.0}, {0.0, 0.0, 1.0}};
}

Matrix permutation_similar(const Matrix& a, const std::vector<int>& perm) {
  if (!a.square()) throw InputError("permutation_similar requires a square matrix");
  const int n = a.rows();
  if (static_cast<int>(perm.size()) != n) throw InputError("permutation length mismatch");
  std::vector<int> seen(n, 0);
  for (int p : perm) {
    if (p < 1 || p > n || seen[p - 1]) throw InputError("not a permutation of 1..n");
    seen[p - 1] = 1;
  }
  // B = P A P^-1 with P e_i = e_perm(i): B(perm(i), perm(k)) = A(i, k).
  Matrix b(n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) b(perm[i] - 1, perm[k] - 1) = a(i, k);
  return b;
}

}  // namespace tpcone
