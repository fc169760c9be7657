#include "tpcone/matrix.hpp"

#include <cmath>
#include <cstdlib>

#include "tpcone/errors.hpp"

namespace tpcone {

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw InputError("matrix dimensions must be nonnegative");
  entries_.assign(static_cast<std::size_t>(rows) * cols, 0.0);
}

Matrix::Matrix(int rows, int cols, Vec entries) : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows < 0 || cols < 0) throw InputError("matrix dimensions must be nonnegative");
  if (entries_.size() != static_cast<std::size_t>(rows) * cols)
    throw InputError("matrix entry count does not match dimensions");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ > 0 ? static_cast<int>(rows.begin()->size()) : 0;
  entries_.reserve(static_cast<std::size_t>(rows_) * cols_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) throw InputError("ragged initializer for matrix");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Vec Matrix::row(int i) const {
  Vec r(cols_);
  for (int k = 0; k < cols_; ++k) r[k] = (*this)(i, k);
  return r;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) t(k, i) = (*this)(i, k);
  return t;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (double v : entries_) m = std::max(m, std::abs(v));
  return m;
}

void Matrix::require_finite(const char* context) const {
  for (double v : entries_)
    if (!std::isfinite(v)) throw InputError(std::string(context) + ": matrix has non-finite entries");
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix product shape mismatch");
  Matrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

Matrix operator*(double s, const Matrix& a) {
  Matrix c = a;
  for (double& v : c.entries()) v *= s;
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("matrix sum shape mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < c.entries().size(); ++i) c.entries()[i] += b.entries()[i];
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("matrix difference shape mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < c.entries().size(); ++i) c.entries()[i] -= b.entries()[i];
  return c;
}

Vec operator*(const Matrix& a, const Vec& x) {
  if (a.cols() != static_cast<int>(x.size())) throw InputError("matrix-vector shape mismatch");
  Vec y(a.rows(), 0.0);
  for (int i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    for (int k = 0; k < a.cols(); ++k) s += a(i, k) * x[k];
    y[i] = s;
  }
  return y;
}

bool approx_equal(const Matrix& a, const Matrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  const double scale = std::max(a.max_abs(), b.max_abs());
  const double thr = zero_threshold(scale, tol);
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    if (std::abs(a.entries()[i] - b.entries()[i]) > thr) return false;
  return true;
}

namespace {

// In-place LU with partial pivoting; returns the parity of row swaps,
// or 0 if a pivot column collapses (singular to working precision).
int lu_factor(Matrix& a, std::vector<int>& perm) {
  const int n = a.rows();
  perm.resize(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  int parity = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    double best = std::abs(a(col, col));
    for (int r = col + 1; r < n; ++r) {
      const double v = std::abs(a(r, col));
      if (v > best) {
        best = v;
        pivot = r;
      }
    }
    if (best == 0.0) return 0;
    if (pivot != col) {
      for (int k = 0; k < n; ++k) std::swap(a(pivot, k), a(col, k));
      std::swap(perm[pivot], perm[col]);
      parity = -parity;
    }
    const double d = a(col, col);
    for (int r = col + 1; r < n; ++r) {
      const double f = a(r, col) / d;
      a(r, col) = f;
      for (int k = col + 1; k < n; ++k) a(r, k) -= f * a(col, k);
    }
  }
  return parity;
}

}  // namespace

double determinant(const Matrix& a) {
  if (!a.square()) throw InputError("determinant requires a square matrix");
  const int n = a.rows();
  if (n == 0) return 1.0;
  if (n == 1) return a(0, 0);
  if (n == 2) return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  if (n == 3)
    return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
           a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
           a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
  Matrix lu = a;
  std::vector<int> perm;
  const int parity = lu_factor(lu, perm);
  if (parity == 0) return 0.0;
  double det = parity;
  for (int i = 0; i < n; ++i) det *= lu(i, i);
  return det;
}

Vec solve(const Matrix& a, const Vec& b) {
  if (!a.square()) throw InputError("solve requires a square matrix");
  const int n = a.rows();
  if (static_cast<int>(b.size()) != n) throw InputError("solve rhs size mismatch");
  Matrix lu = a;
  std::vector<int> perm;
  if (lu_factor(lu, perm) == 0) throw NumericError("solve: matrix is singular to working precision");
  Vec x(n);
  for (int i = 0; i < n; ++i) x[i] = b[perm[i]];
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < i; ++k) x[i] -= lu(i, k) * x[k];
  for (int i = n - 1; i >= 0; --i) {
    for (int k = i + 1; k < n; ++k) x[i] -= lu(i, k) * x[k];
    x[i] /= lu(i, i);
  }
  return x;
}

Matrix inverse(const Matrix& a) {
  if (!a.square()) throw InputError("inverse requires a square matrix");
  const int n = a.rows();
  Matrix lu = a;
  std::vector<int> perm;
  if (lu_factor(lu, perm) == 0) throw NumericError("inverse: matrix is singular to working precision");
  Matrix inv(n, n);
  Vec col(n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) col[i] = perm[i] == j ? 1.0 : 0.0;
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < i; ++k) col[i] -= lu(i, k) * col[k];
    for (int i = n - 1; i >= 0; --i) {
      for (int k = i + 1; k < n; ++k) col[i] -= lu(i, k) * col[k];
      col[i] /= lu(i, i);
    }
    for (int i = 0; i < n; ++i) inv(i, j) = col[i];
  }
  return inv;
}

int rank_estimate(const Matrix& a, double tol) {
  // Gaussian elimination with full column scan; adequate at desk scale.
  Matrix w = a;
  const int m = w.rows(), n = w.cols();
  const double thr = zero_threshold(w.max_abs(), tol);
  int rank = 0;
  for (int col = 0; col < n && rank < m; ++col) {
    int pivot = -1;
    double best = thr;
    for (int r = rank; r < m; ++r) {
      const double v = std::abs(w(r, col));
      if (v > best) {
        best = v;
        pivot = r;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int k = 0; k < n; ++k) std::swap(w(pivot, k), w(rank, k));
    for (int r = rank + 1; r < m; ++r) {
      const double f = w(r, col) / w(rank, col);
      for (int k = col; k < n; ++k) w(r, k) -= f * w(rank, k);
    }
    ++rank;
  }
  return rank;
}

}  // namespace tpcone
