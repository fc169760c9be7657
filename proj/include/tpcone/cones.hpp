#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "tpcone/exterior.hpp"

namespace tpcone {

enum class ConeKind { basic, exterior_basic, spanned, icecream };

// Description of a proper (closed, pointed, solid) cone. Four concrete
// families are supported:
//   basic           orthant picked by a sign per coordinate of R^n
//   exterior_basic  orthant over the wedge basis of the j-th exterior power,
//                   a sign per basis wedge
//   spanned         simplicial cone on n linearly independent generators
//   icecream        second-order cone around a coordinate axis
class ConeSpec {
 public:
  static ConeSpec basic(std::vector<int> signs);
  static ConeSpec exterior_basic(int n, int j, std::vector<int> signs);
  static ConeSpec spanned(std::vector<Vec> generators);
  static ConeSpec ice_cream(int n, int axis);  // axis 1-based

  ConeKind kind() const { return kind_; }
  int ambient_dim() const;

  // exterior_basic: underlying dimension and grade; other kinds live in the
  // source space itself (grade 1).
  int source_dim() const { return kind_ == ConeKind::exterior_basic ? n_ : ambient_dim(); }
  int grade() const { return kind_ == ConeKind::exterior_basic ? j_ : 1; }

  const std::vector<int>& signs() const { return signs_; }
  const std::vector<Vec>& generators() const { return generators_; }
  int axis() const { return axis_; }
  bool uniform_signs() const;  // all +1 or all -1

 private:
  ConeSpec() = default;
  ConeKind kind_ = ConeKind::basic;
  int n_ = 0, j_ = 0, axis_ = 0;
  std::vector<int> signs_;
  std::vector<Vec> generators_;
};

Region contains(const ConeSpec& k, const Vec& x, double tol = kDefaultTol);

// Basic and ice-cream cones are self-adjoint; a spanned cone dualizes to the
// cone on the rows of the inverse generator matrix (unit-normalized).
ConeSpec adjoint(const ConeSpec& k);

struct MaxAngle {
  double radians = 0.0;
  bool exact = false;  // false: seeded sampling lower bound (spanned cones)
};
MaxAngle max_angle(const ConeSpec& k, int samples = 2048, std::uint64_t seed = kDefaultSeed);

// A point of the closed cone; mixes interior draws with sparse/face draws so
// boundary structure gets sampled too. Unit 2-norm.
Vec sample_cone_point(const ConeSpec& k, std::mt19937_64& rng);

enum class TVerdict { interior, closure, not_found };

const char* to_string(TVerdict v);

// Certificate for membership of x in the completable set of a grade-j cone.
//   interior   a completion with wedge strictly inside K u -K was found
//              (with exact = true: decided analytically)
//   closure    best certificate found is a nonzero wedge on the boundary of
//              K u -K -- closure-level evidence only
//   not_found  exact = true: certified non-member; exact = false: the seeded
//              search exhausted its budget without a certificate (says
//              nothing about non-membership)
struct TMembershipResult {
  TVerdict verdict = TVerdict::not_found;
  std::vector<Vec> witness;  // completion vectors x_2..x_j when found
  bool exact = false;
};

enum class TSearchPolicy { automatic, exact_only, monte_carlo };

// Membership of x in T(K) for a cone K of the given grade over R^n
// (n = x.size()). A uniform-sign exterior_basic cone is decided exactly via
// the sign-variation test; anything else runs the seeded completion search:
// Gaussian directions orthonormalized against x and prior picks, wedges
// tested against int(K) u int(-K). grade = 0 infers the grade from the
// ambient dimension and throws when ambiguous.
TMembershipResult t_membership(const Vec& x, const ConeSpec& k, int grade = 0,
                               int budget = 10000, std::uint64_t seed = kDefaultSeed,
                               TSearchPolicy policy = TSearchPolicy::automatic,
                               double tol = kDefaultTol);

// Membership of x in the chained set T(K_1, ..., K_j): completions x_i are
// drawn from the lower-order chained sets (x_2 from K_1 u -K_1 directly,
// deeper levels by rejection through a recursive check). The all-uniform
// chain defers to the exact sign-variation test.
TMembershipResult t_chain_membership(const Vec& x, const std::vector<ConeSpec>& ks,
                                     int budget = 10000, std::uint64_t seed = kDefaultSeed,
                                     TSearchPolicy policy = TSearchPolicy::automatic,
                                     double tol = kDefaultTol);

}  // namespace tpcone
