#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "tpcone/matrix.hpp"

namespace tpcone {

// Wedge-basis indexing and exterior-power computations. Index subsets are
// 1-based strictly increasing tuples (matching the usual minor notation);
// lexicographic ranks are 0-based.

using IndexTuple = std::vector<int>;
using Complex = std::complex<double>;

// C(n, k); throws ResourceError once the value leaves the exact double range.
std::uint64_t binomial(int n, int k);

struct SubsetIndex {
  int n = 0;
  IndexTuple elements;  // strictly increasing, values in [1, n]
  std::uint64_t rank = 0;
};

std::uint64_t subset_rank(int n, const IndexTuple& elements);
IndexTuple subset_unrank(int n, int j, std::uint64_t rank);
SubsetIndex make_subset(int n, IndexTuple elements);

// All j-subsets of [1, n] in lexicographic order; position == rank.
std::vector<IndexTuple> enumerate_subsets(int n, int j);

// Coordinates of an element of the j-th exterior power of R^n over the
// lexicographic wedge basis. Coordinates are plain j x j minors of the
// stacked factor matrix (Pluecker convention), so apply_compound acts on
// them with no extra scaling.
struct MultiVector {
  int n = 0;
  int j = 0;
  Vec coords;

  MultiVector() = default;
  MultiVector(int n, int j);
  MultiVector(int n, int j, Vec coords);
};

struct CompoundMatrix {
  int n = 0;  // source dimension
  int j = 0;  // compound order
  Matrix body;  // C(n,j) x C(n,j)
};

inline constexpr std::uint64_t kDefaultCompoundEntryCap = 1'000'000;

// Minor of A on the given 1-based row/column subsets (equal length).
double minor_of(const Matrix& a, const IndexTuple& rows, const IndexTuple& cols);

// j-th compound matrix: entry (rank(rows), rank(cols)) = minor(A, rows, cols).
// Refuses when the body would hold more than max_entries values.
CompoundMatrix compound(const Matrix& a, int j,
                        std::uint64_t max_entries = kDefaultCompoundEntryCap);

// Exterior product of j vectors of R^n.
MultiVector wedge(const std::vector<Vec>& xs);

// Linear bijection from grade n-1 back to R^n: the basis wedge missing
// index k maps to (-1)^(k+1) e_k. For phi = wedge(x_1..x_{n-1}) the result
// is orthogonal to every factor.
Vec hodge(const MultiVector& phi);

MultiVector apply_compound(const CompoundMatrix& c, const MultiVector& phi);

// All products of j distinct-index eigenvalues; the spectrum of the j-th
// compound by the Kronecker product theorem.
std::vector<Complex> kronecker_eigs(const std::vector<Complex>& eigs, int j);

// Sort key used when comparing spectra as multisets.
void sort_complex(std::vector<Complex>& v);

}  // namespace tpcone
