#pragma once

#include <cstdint>
#include <vector>

#include "tpcone/matrix.hpp"

namespace tpcone {

// Constructors of matrices with known classification. Everything claiming
// strict total positivity is validated through classify before being
// returned; a construction that fails validation raises NumericError.

// Entry (i, k) = t_i^(k-1) for strictly increasing positive nodes.
Matrix vandermonde(const std::vector<double>& nodes, double tol = kDefaultTol);

// Deterministic seeded strictly-totally-positive matrix: the exponential of
// a random symmetric tridiagonal matrix with positive off-diagonal, scaled
// so the spectrum spans about e^6. Symmetry keeps the eigenproblem well
// conditioned; STP-ness is still verified a posteriori.
Matrix random_stp(int n, std::uint64_t seed, double tol = kDefaultTol);

// D A D^-1 with D = diag(signs), signs in {+1, -1}^n.
Matrix signature_conjugate(const Matrix& a, const std::vector<int>& signs);

// Rotation of R^3 about the third axis.
Matrix rotation3(double theta);

// P A P^-1 for the permutation sending index i to perm[i-1] (1-based).
Matrix permutation_similar(const Matrix& a, const std::vector<int>& perm);

}  // namespace tpcone
