#pragma once

#include <string>

#include "tpcone/classify.hpp"
#include "tpcone/signs.hpp"

namespace tpcone {

// Full dense eigen-decomposition. Eigenvectors are unit-norm with the first
// significant component rotated to be real positive; left eigenvectors are
// eigenvectors of the transpose, matched to the same eigenvalue order.
struct EigenDecomposition {
  std::vector<Complex> values;
  std::vector<std::vector<Complex>> right;  // right[i] pairs with values[i]
  std::vector<std::vector<Complex>> left;
};

EigenDecomposition eigen(const Matrix& a);

// Dominant eigenpair of an entrywise-positive matrix by power iteration,
// together with the left (transpose) eigenvector. Both vectors come out
// entrywise positive.
struct PerronResult {
  double rho = 0.0;
  Vec right;
  Vec left;
  int iterations = 0;
};

PerronResult perron_root(const Matrix& m, double tol = 1e-13, int max_iterations = 500000);

// Outcome of the spectral verification for a strictly totally positive
// matrix (or a strictly sign-conjugated one): eigenvalue positivity,
// simplicity and strict decay, the compound-ratio identity
// lambda_j = rho(A^(j)) / rho(A^(j-1)), eigenvector sign-variation counts,
// and sampled bounds on eigenvector combinations.
struct SpectralReport {
  std::vector<Complex> eigenvalues;  // sorted by descending modulus
  bool all_real_positive = false;
  bool all_simple = false;
  std::vector<double> ratio_residuals;           // per order j, rho(A^(0)) := 1
  std::vector<SignVariation> eigvec_variations;  // per order j, verified basis
  int combo_passed = 0;
  int combo_total = 0;
  bool pass = false;
  std::string first_failing_clause;  // empty when pass
  bool conjugated = false;           // ran on the sign-conjugated positive form
};

SpectralReport gk_verify(const Matrix& a, double tol = kEigenTol, int combo_samples = 200,
                         std::uint64_t seed = kDefaultSeed);

// Variation-diminishing check on seeded random vectors: S+(Ax) <= S-(x),
// plus the invariant-band consequence that a vector inside or on the
// boundary of M(j) maps strictly inside. Requires strict sign-regularity
// (strict sign-conjugates accepted, checked on the conjugated form).
struct VdpReport {
  int violations = 0;
  int total = 0;
  double worst_margin = 0.0;  // min over trials of S-(x) - S+(Ax)
  Vec worst_x;
  bool conjugated = false;
};

VdpReport vdp_check(const Matrix& a, int trials, std::uint64_t seed = kDefaultSeed,
                    double tol = kDefaultTol);

}  // namespace tpcone
