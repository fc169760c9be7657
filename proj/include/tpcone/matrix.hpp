#pragma once

#include <initializer_list>
#include <vector>

#include "tpcone/common.hpp"

namespace tpcone {

// Dense real matrix, row-major storage. Element access is 0-based; the
// 1-based index convention of the library applies to row/column *subsets*
// (see exterior.hpp), not to raw element access.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols);
  Matrix(int rows, int cols, Vec entries);
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  double& operator()(int i, int k) { return entries_[static_cast<std::size_t>(i) * cols_ + k]; }
  double operator()(int i, int k) const { return entries_[static_cast<std::size_t>(i) * cols_ + k]; }

  const Vec& entries() const { return entries_; }
  Vec& entries() { return entries_; }

  Vec row(int i) const;
  Matrix transposed() const;
  double max_abs() const;

  // Throws InputError if any entry is not finite.
  void require_finite(const char* context) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  Vec entries_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(double s, const Matrix& a);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Vec operator*(const Matrix& a, const Vec& x);

bool approx_equal(const Matrix& a, const Matrix& b, double tol = kDefaultTol);

// LU with partial pivoting underneath. determinant() never throws on
// singular input (it just returns ~0); inverse()/solve() do.
double determinant(const Matrix& a);
Vec solve(const Matrix& a, const Vec& b);
Matrix inverse(const Matrix& a);
int rank_estimate(const Matrix& a, double tol = kDefaultTol);

}  // namespace tpcone
