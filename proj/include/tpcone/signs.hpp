#pragma once

#include "tpcone/common.hpp"

namespace tpcone {

// Sign-change counts of a coordinate sequence. s_minus discards zero
// entries; s_plus is the maximum over all +-1 assignments to them. Both
// are invariant under positive scaling and global negation.
struct SignVariation {
  int s_minus = 0;
  int s_plus = 0;
};

// Entries within zero_threshold(max_abs(x), tol) count as zero. The all-zero
// vector gets (0, n-1), the limit convention for a totally free assignment.
SignVariation sign_variation(const Vec& x, double tol = kDefaultTol);

// Membership of x in M(j) = { S^- <= j-1 }, whose interior is { S^+ <= j-1 }:
//   interior  iff s_plus  <= j-1
//   outside   iff s_minus >  j-1
//   boundary  otherwise (and always for the zero vector).
Region m_membership(const Vec& x, int j, double tol = kDefaultTol);

}  // namespace tpcone
