#include "tpcone/exterior.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tpcone/errors.hpp"

namespace tpcone {

namespace {

// Largest binomial representable exactly in a double.
constexpr std::uint64_t kBinomialCap = 1ull << 53;

void check_subset(int n, const IndexTuple& elements, const char* context) {
  int prev = 0;
  for (int e : elements) {
    if (e <= prev) throw InputError(std::string(context) + ": index tuple must be strictly increasing");
    if (e > n) throw InputError(std::string(context) + ": index exceeds ambient dimension");
    prev = e;
  }
}

}  // namespace

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n || n < 0) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    // r * (n-k+i) / i is always integral at each step
    const std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
    if (r > kBinomialCap / num) throw ResourceError("binomial coefficient too large");
    r = r * num / i;
  }
  return r;
}

std::uint64_t subset_rank(int n, const IndexTuple& elements) {
  check_subset(n, elements, "subset_rank");
  const int j = static_cast<int>(elements.size());
  std::uint64_t rank = 0;
  int prev = 0;
  for (int i = 0; i < j; ++i) {
    for (int v = prev + 1; v < elements[i]; ++v) rank += binomial(n - v, j - i - 1);
    prev = elements[i];
  }
  return rank;
}

IndexTuple subset_unrank(int n, int j, std::uint64_t rank) {
  if (j < 0 || j > n) throw InputError("subset_unrank: subset size out of range");
  if (rank >= binomial(n, j)) throw InputError("subset_unrank: rank out of range");
  IndexTuple elements(j);
  int v = 1;
  for (int i = 0; i < j; ++i) {
    for (;; ++v) {
      const std::uint64_t block = binomial(n - v, j - i - 1);
      if (rank < block) break;
      rank -= block;
    }
    elements[i] = v++;
  }
  return elements;
}

SubsetIndex make_subset(int n, IndexTuple elements) {
  SubsetIndex s;
  s.n = n;
  s.rank = subset_rank(n, elements);
  s.elements = std::move(elements);
  return s;
}

std::vector<IndexTuple> enumerate_subsets(int n, int j) {
  const std::uint64_t count = binomial(n, j);
  std::vector<IndexTuple> out;
  out.reserve(count);
  if (j == 0) {
    out.push_back({});
    return out;
  }
  IndexTuple cur(j);
  for (int i = 0; i < j; ++i) cur[i] = i + 1;
  for (;;) {
    out.push_back(cur);
    int i = j - 1;
    while (i >= 0 && cur[i] == n - (j - 1 - i)) --i;
    if (i < 0) break;
    ++cur[i];
    for (int k = i + 1; k < j; ++k) cur[k] = cur[k - 1] + 1;
  }
  return out;
}

MultiVector::MultiVector(int n, int j) : n(n), j(j) {
  if (j < 1 || j > n) throw InputError("multivector grade out of range");
  coords.assign(binomial(n, j), 0.0);
}

MultiVector::MultiVector(int n, int j, Vec c) : n(n), j(j), coords(std::move(c)) {
  if (j < 1 || j > n) throw InputError("multivector grade out of range");
  if (coords.size() != binomial(n, j)) throw InputError("multivector coordinate count mismatch");
}

double minor_of(const Matrix& a, const IndexTuple& rows, const IndexTuple& cols) {
  if (rows.size() != cols.size()) throw InputError("minor_of: row/column subset length mismatch");
  check_subset(a.rows(), rows, "minor_of rows");
  check_subset(a.cols(), cols, "minor_of cols");
  const int j = static_cast<int>(rows.size());
  if (j == 0) return 1.0;
  if (j == 1) return a(rows[0] - 1, cols[0] - 1);
  if (j == 2)
    return a(rows[0] - 1, cols[0] - 1) * a(rows[1] - 1, cols[1] - 1) -
           a(rows[0] - 1, cols[1] - 1) * a(rows[1] - 1, cols[0] - 1);
  Matrix sub(j, j);
  for (int r = 0; r < j; ++r)
    for (int c = 0; c < j; ++c) sub(r, c) = a(rows[r] - 1, cols[c] - 1);
  return determinant(sub);
}

CompoundMatrix compound(const Matrix& a, int j, std::uint64_t max_entries) {
  if (!a.square()) throw InputError("compound requires a square matrix");
  const int n = a.rows();
  if (j < 1 || j > n) throw InputError("compound order out of range");
  a.require_finite("compound");
  const std::uint64_t m = binomial(n, j);
  if (m > max_entries / std::max<std::uint64_t>(m, 1))
    throw ResourceError("compound body would exceed the entry cap");
  const auto subsets = enumerate_subsets(n, j);
  CompoundMatrix c{n, j, Matrix(static_cast<int>(m), static_cast<int>(m))};
  for (std::uint64_t r = 0; r < m; ++r)
    for (std::uint64_t s = 0; s < m; ++s)
      c.body(static_cast<int>(r), static_cast<int>(s)) = minor_of(a, subsets[r], subsets[s]);
  return c;
}

MultiVector wedge(const std::vector<Vec>& xs) {
  if (xs.empty()) throw InputError("wedge of no vectors");
  const int j = static_cast<int>(xs.size());
  const int n = static_cast<int>(xs[0].size());
  if (j > n) throw InputError("wedge grade exceeds ambient dimension");
  for (const Vec& x : xs)
    if (static_cast<int>(x.size()) != n) throw InputError("wedge factors have mixed dimensions");
  Matrix stacked(j, n);
  for (int r = 0; r < j; ++r)
    for (int c = 0; c < n; ++c) stacked(r, c) = xs[r][c];
  IndexTuple all_rows(j);
  for (int r = 0; r < j; ++r) all_rows[r] = r + 1;
  MultiVector phi(n, j);
  const auto subsets = enumerate_subsets(n, j);
  for (std::size_t r = 0; r < subsets.size(); ++r)
    phi.coords[r] = minor_of(stacked, all_rows, subsets[r]);
  return phi;
}

Vec hodge(const MultiVector& phi) {
  const int n = phi.n;
  if (phi.j != n - 1) throw InputError("hodge expects grade n-1");
  Vec out(n, 0.0);
  IndexTuple subset(n - 1);
  for (int k = 1; k <= n; ++k) {
    int pos = 0;
    for (int v = 1; v <= n; ++v)
      if (v != k) subset[pos++] = v;
    const double sign = (k % 2 == 1) ? 1.0 : -1.0;  // (-1)^(k+1)
    out[k - 1] = sign * phi.coords[subset_rank(n, subset)];
  }
  return out;
}

MultiVector apply_compound(const CompoundMatrix& c, const MultiVector& phi) {
  if (c.n != phi.n || c.j != phi.j) throw InputError("apply_compound shape mismatch");
  return MultiVector(phi.n, phi.j, c.body * phi.coords);
}

std::vector<Complex> kronecker_eigs(const std::vector<Complex>& eigs, int j) {
  const int n = static_cast<int>(eigs.size());
  if (j < 1 || j > n) throw InputError("kronecker_eigs order out of range");
  std::vector<Complex> out;
  out.reserve(binomial(n, j));
  for (const IndexTuple& s : enumerate_subsets(n, j)) {
    Complex p = 1.0;
    for (int v : s) p *= eigs[v - 1];
    out.push_back(p);
  }
  return out;
}

void sort_complex(std::vector<Complex>& v) {
  std::sort(v.begin(), v.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
}

}  // namespace tpcone
